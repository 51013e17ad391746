#include "latproj/factor.hpp"

namespace latproj {

LdltResult ldlt(const Mat& a) {
  if (!a.is_symmetric()) throw ShapeError("ldlt requires a symmetric matrix");
  const size_t n = a.rows();
  Mat l = Mat::identity(n);
  std::vector<Rat> d(n);
  for (size_t j = 0; j < n; ++j) {
    Rat s = a(j, j);
    for (size_t k = 0; k < j; ++k) s -= l(j, k) * l(j, k) * d[k];
    if (s <= 0) throw NotPositiveDefiniteError("not positive definite");
    d[j] = s;
    for (size_t i = j + 1; i < n; ++i) {
      Rat t = a(i, j);
      for (size_t k = 0; k < j; ++k) t -= l(i, k) * l(j, k) * d[k];
      l(i, j) = t / d[j];
    }
  }
  return {std::move(l), std::move(d)};
}

bool is_positive_definite(const Mat& a) {
  if (!a.is_symmetric()) return false;
  try {
    ldlt(a);
    return true;
  } catch (const NotPositiveDefiniteError&) {
    return false;
  }
}

RealMat::RealMat(size_t rows, size_t cols, unsigned prec)
    : rows_(rows), cols_(cols), e_(rows * cols, Real(prec)) {}

Real RealMat::reconstruction_error(const Mat& a) const {
  const unsigned prec = rows_ ? e_[0].precision() : kDefaultPrec;
  Real worst(prec);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < rows_; ++j) {
      Real s(prec);
      for (size_t k = 0; k < cols_; ++k) s = s + (*this)(i, k) * (*this)(j, k);
      const Real d = (s - Real(a(i, j), prec)).abs();
      if (d > worst) worst = d;
    }
  return worst;
}

RealMat cholesky(const Mat& a, unsigned prec) {
  if (!a.is_symmetric()) throw ShapeError("cholesky requires a symmetric matrix");
  const size_t n = a.rows();
  RealMat l(n, n, prec);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j <= i; ++j) {
      Real s(a(i, j), prec);
      for (size_t k = 0; k < j; ++k) s = s - l(i, k) * l(j, k);
      if (i == j) {
        if (s.sign() <= 0) throw NotPositiveDefiniteError("not positive definite");
        l(i, i) = Real::sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  return l;
}

Rat QuadEntry::exact() const {
  if (coeff == 0) return 0;
  return coeff * rat_sqrt_exact(radicand);
}

Real QuadEntry::approx(unsigned prec) const {
  return Real(coeff, prec) * Real::sqrt(Real(radicand, prec));
}

BigInt QuadEntry::floor_times(const BigInt& w, unsigned initial_prec, unsigned prec_cap) const {
  if (is_rational()) return floor_rat(Rat(w) * exact());
  const Rat scaled = Rat(w) * coeff;
  return certified_floor(
      [&](unsigned prec) { return QuadEntry{scaled, radicand}.approx(prec); }, initial_prec,
      prec_cap);
}

std::vector<QuadEntry> cholesky_quadratic(const Mat& a) {
  const LdltResult f = ldlt(a);
  const size_t n = a.rows();
  std::vector<QuadEntry> entries;
  entries.reserve(n * (n + 1) / 2);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= i; ++j) entries.push_back({f.unit_lower(i, j), f.diag[j]});
  return entries;
}

}  // namespace latproj
