#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "latproj/errors.hpp"

namespace latproj {

// Arbitrary-precision signed integer and exact rational.  All lattice
// identities in this library are computed in these types; floating point is
// confined to the Real type behind certified floors.
using BigInt = mpz_class;
using Rat = mpq_class;

using ZVec = std::vector<BigInt>;

/// Canonicalized rational from a numerator/denominator pair.
Rat make_rat(const BigInt& num, const BigInt& den);

/// ⌊q⌋ for an exact rational.
BigInt floor_rat(const Rat& q);
BigInt ceil_rat(const Rat& q);

/// Nearest integer, halves rounded up.
BigInt round_rat(const Rat& q);

/// ⌊√n⌋ for n ≥ 0.
BigInt isqrt(const BigInt& n);

bool is_perfect_square(const BigInt& n);

/// True iff q is the square of a rational (numerator and denominator both
/// perfect squares; q must be canonical, which mpq arithmetic maintains).
bool is_rational_square(const Rat& q);

/// √q for a rational square.
Rat rat_sqrt_exact(const Rat& q);

/// Sign of x − r·√d, computed exactly.  Requires d ≥ 0.
int cmp_rat_vs_sqrt(const Rat& x, const Rat& r, const Rat& d);

/// ⌊r·√d⌋ computed exactly in integer arithmetic.  Requires d ≥ 0.
BigInt floor_quadratic(const Rat& r, const Rat& d);

/// ⌊√d + s⌋ for rational d ≥ 0, s.  Used for exact enumeration bounds.
BigInt floor_sqrt_plus(const Rat& d, const Rat& s);

/// Decimal string; rationals render as "p/q" or "p" when integral.
std::string to_string(const BigInt& n);
std::string to_string(const Rat& q);

/// Parse "p", "-p", or "p/q".  Throws ShapeError on malformed input or a
/// zero denominator.
Rat parse_rat(const std::string& s);
BigInt parse_int(const std::string& s);

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);
BigInt dot(const ZVec& a, const ZVec& b);

}  // namespace latproj
