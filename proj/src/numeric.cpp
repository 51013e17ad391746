#include "latproj/numeric.hpp"

namespace latproj {

Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ShapeError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

BigInt floor_rat(const Rat& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil_rat(const Rat& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt round_rat(const Rat& q) { return floor_rat(q + Rat(1, 2)); }

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw ShapeError("isqrt of negative value");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const BigInt& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_rational_square(const Rat& q) {
  return q >= 0 && is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

Rat rat_sqrt_exact(const Rat& q) {
  if (!is_rational_square(q)) throw ShapeError("rat_sqrt_exact of a non-square");
  return make_rat(isqrt(q.get_num()), isqrt(q.get_den()));
}

int cmp_rat_vs_sqrt(const Rat& x, const Rat& r, const Rat& d) {
  if (d < 0) throw ShapeError("cmp_rat_vs_sqrt with negative radicand");
  // y = r√d; compare x against y by sign analysis, then square.
  const int sy = (d == 0) ? 0 : sgn(r);
  const int sx = sgn(x);
  if (sx != sy) return sx < sy ? -1 : 1;
  if (sx == 0) return 0;
  const Rat lhs = x * x;
  const Rat rhs = r * r * d;
  const int c = cmp(lhs, rhs);
  return sx > 0 ? c : -c;
}

BigInt floor_quadratic(const Rat& r, const Rat& d) {
  if (d < 0) throw ShapeError("floor_quadratic with negative radicand");
  if (r == 0 || d == 0) return 0;
  // r√d is rational iff d is a rational square; floor exactly in that case.
  if (is_rational_square(d)) return floor_rat(r * rat_sqrt_exact(d));
  if (r < 0) return -floor_quadratic(-r, d) - 1;  // irrational: ⌊−x⌋ = −⌊x⌋ − 1
  // |r√d| = √(a/b) = √(ab)/b with a/b = r²d canonical.
  const Rat q = r * r * d;
  const BigInt& a = q.get_num();
  const BigInt& b = q.get_den();
  const BigInt mag = isqrt(a * b);  // ⌊√(ab)⌋
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), mag.get_mpz_t(), b.get_mpz_t());  // ⌊√(a/b)⌋
  return f;
}

BigInt floor_sqrt_plus(const Rat& d, const Rat& s) {
  if (d < 0) throw ShapeError("floor_sqrt_plus with negative radicand");
  BigInt k = floor_quadratic(1, d) + floor_rat(s);
  // k is within 1 of the answer; fix up with exact comparisons k ≤ √d + s.
  while (cmp_rat_vs_sqrt(Rat(k + 1) - s, 1, d) <= 0) k += 1;
  while (cmp_rat_vs_sqrt(Rat(k) - s, 1, d) > 0) k -= 1;
  return k;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const Rat& q) { return q.get_str(); }

Rat parse_rat(const std::string& s) {
  Rat q;
  if (s.empty() || mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw ShapeError("malformed rational: '" + s + "'");
  if (q.get_den() == 0) throw ShapeError("rational with zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

BigInt parse_int(const std::string& s) {
  BigInt n;
  if (s.empty() || mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0)
    throw ShapeError("malformed integer: '" + s + "'");
  return n;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) throw ShapeError("dot of mismatched lengths");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigInt dot(const ZVec& a, const ZVec& b) {
  if (a.size() != b.size()) throw ShapeError("dot of mismatched lengths");
  BigInt s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace latproj
