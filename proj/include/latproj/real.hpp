#pragma once

#include <mpfr.h>

#include <functional>

#include "latproj/numeric.hpp"

namespace latproj {

constexpr unsigned kDefaultPrec = 256;
constexpr unsigned kPrecCap = 4096;

/// High-precision real number (MPFR, round-to-nearest) with an explicit
/// precision in bits.  Binary operations promote to the wider precision.
class Real {
 public:
  explicit Real(unsigned prec = kDefaultPrec);
  Real(long v, unsigned prec);
  Real(const BigInt& v, unsigned prec);
  Real(const Rat& v, unsigned prec);

  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(Real o);
  ~Real();

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(x_)); }

  static Real sqrt(const Real& v);
  static Real pi(unsigned prec);
  static Real gamma(const Real& v);
  static Real pow_ui(const Real& v, unsigned long e);
  static Real log(const Real& v);

  Real operator+(const Real& o) const;
  Real operator-(const Real& o) const;
  Real operator*(const Real& o) const;
  Real operator/(const Real& o) const;
  Real operator-() const;

  int cmp(const Real& o) const { return mpfr_cmp(x_, o.x_); }
  bool operator<(const Real& o) const { return cmp(o) < 0; }
  bool operator<=(const Real& o) const { return cmp(o) <= 0; }
  bool operator>(const Real& o) const { return cmp(o) > 0; }
  bool operator>=(const Real& o) const { return cmp(o) >= 0; }
  bool operator==(const Real& o) const { return cmp(o) == 0; }

  int sign() const { return mpfr_sgn(x_); }
  Real abs() const;
  bool is_finite() const { return mpfr_number_p(x_) != 0; }

  /// ⌊x⌋ with no separation check; see certified_floor for the checked path.
  BigInt floor_unchecked() const;

  /// True iff |x − round(x)| < 2^−k.  Exact: the stored value is a dyadic
  /// rational, so the distance to the nearest integer is computable.
  bool within_pow2_of_integer(long k) const;

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

 private:
  mpfr_t x_;
};

/// Re-evaluates a quantity at a requested precision in bits.
using RealFn = std::function<Real(unsigned prec)>;

/// Certified floor of a fixed high-precision value.  Succeeds when the value
/// is separated from every integer by more than 2^(−precision/2), which
/// leaves room for the evaluation error of any reasonably conditioned
/// computation at that precision; otherwise throws AmbiguousFloorError.
BigInt certified_floor(const Real& x);

/// Certified floor with retry: evaluates at doubling precisions until the
/// separation test passes or the cap is exceeded.  Irrational inputs always
/// separate eventually; an exactly integral input exhausts the cap and
/// throws, signalling that the caller should use the exact rational path.
BigInt certified_floor(const RealFn& f, unsigned initial_prec = kDefaultPrec,
                       unsigned prec_cap = kPrecCap);

/// Exact path for rational inputs.
inline BigInt certified_floor(const Rat& q) { return floor_rat(q); }

}  // namespace latproj
