#include "latproj/real.hpp"

#include <algorithm>

namespace latproj {

namespace {
unsigned max_prec(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

Real::Real(unsigned prec) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }

Real::Real(long v, unsigned prec) {
  mpfr_init2(x_, prec);
  mpfr_set_si(x_, v, MPFR_RNDN);
}

Real::Real(const BigInt& v, unsigned prec) {
  mpfr_init2(x_, prec);
  mpfr_set_z(x_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rat& v, unsigned prec) {
  mpfr_init2(x_, prec);
  mpfr_set_q(x_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& o) {
  mpfr_init2(x_, mpfr_get_prec(o.x_));
  mpfr_set(x_, o.x_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(x_, mpfr_get_prec(o.x_));
  mpfr_swap(x_, o.x_);
}

Real& Real::operator=(Real o) {
  mpfr_swap(x_, o.x_);
  return *this;
}

Real::~Real() { mpfr_clear(x_); }

Real Real::sqrt(const Real& v) {
  Real r(v.precision());
  mpfr_sqrt(r.x_, v.x_, MPFR_RNDN);
  return r;
}

Real Real::pi(unsigned prec) {
  Real r(prec);
  mpfr_const_pi(r.x_, MPFR_RNDN);
  return r;
}

Real Real::gamma(const Real& v) {
  Real r(v.precision());
  mpfr_gamma(r.x_, v.x_, MPFR_RNDN);
  return r;
}

Real Real::pow_ui(const Real& v, unsigned long e) {
  Real r(v.precision());
  mpfr_pow_ui(r.x_, v.x_, e, MPFR_RNDN);
  return r;
}

Real Real::log(const Real& v) {
  Real r(v.precision());
  mpfr_log(r.x_, v.x_, MPFR_RNDN);
  return r;
}

Real Real::operator+(const Real& o) const {
  Real r(max_prec(*this, o));
  mpfr_add(r.x_, x_, o.x_, MPFR_RNDN);
  return r;
}

Real Real::operator-(const Real& o) const {
  Real r(max_prec(*this, o));
  mpfr_sub(r.x_, x_, o.x_, MPFR_RNDN);
  return r;
}

Real Real::operator*(const Real& o) const {
  Real r(max_prec(*this, o));
  mpfr_mul(r.x_, x_, o.x_, MPFR_RNDN);
  return r;
}

Real Real::operator/(const Real& o) const {
  Real r(max_prec(*this, o));
  mpfr_div(r.x_, x_, o.x_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.x_, x_, MPFR_RNDN);
  return r;
}

Real Real::abs() const {
  Real r(precision());
  mpfr_abs(r.x_, x_, MPFR_RNDN);
  return r;
}

BigInt Real::floor_unchecked() const {
  if (!is_finite()) throw ShapeError("floor of a non-finite value");
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), x_, MPFR_RNDD);
  return z;
}

bool Real::within_pow2_of_integer(long k) const {
  if (!is_finite()) throw ShapeError("separation test on a non-finite value");
  const unsigned prec = precision();
  mpfr_t nearest, diff, tol;
  mpfr_init2(nearest, prec);
  mpfr_init2(diff, prec + 64);
  mpfr_init2(tol, 32);
  mpfr_rint(nearest, x_, MPFR_RNDN);
  mpfr_sub(diff, x_, nearest, MPFR_RNDN);  // exact: both dyadic at this precision
  mpfr_abs(diff, diff, MPFR_RNDN);
  mpfr_set_ui_2exp(tol, 1, -k, MPFR_RNDN);  // 2^−k
  const bool close = mpfr_cmp(diff, tol) < 0;
  mpfr_clear(nearest);
  mpfr_clear(diff);
  mpfr_clear(tol);
  return close;
}

BigInt certified_floor(const Real& x) {
  if (x.within_pow2_of_integer(static_cast<long>(x.precision() / 2)))
    throw AmbiguousFloorError("ambiguous floor: value within 2^(-prec/2) of an integer");
  return x.floor_unchecked();
}

BigInt certified_floor(const RealFn& f, unsigned initial_prec, unsigned prec_cap) {
  for (unsigned prec = initial_prec; prec <= prec_cap; prec *= 2) {
    const Real x = f(prec);
    if (!x.within_pow2_of_integer(static_cast<long>(prec / 2))) return x.floor_unchecked();
  }
  throw AmbiguousFloorError(
      "ambiguous floor: value not separated from an integer at the precision cap");
}

}  // namespace latproj
