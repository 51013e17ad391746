#pragma once

#include "latproj/matrix.hpp"
#include "latproj/real.hpp"

namespace latproj {

/// Exact A = L·D·Lᵀ with L unit lower triangular and D diagonal, both
/// rational.  Exists iff A is symmetric positive definite, so this doubles
/// as the exact positive-definiteness test.
struct LdltResult {
  Mat unit_lower;
  std::vector<Rat> diag;
};

LdltResult ldlt(const Mat& a);

bool is_positive_definite(const Mat& a);

/// Dense matrix of high-precision reals; only what Cholesky and its
/// verification need.
class RealMat {
 public:
  RealMat(size_t rows, size_t cols, unsigned prec);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Real& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }
  Real& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }

  /// max |(this·thisᵀ)_{ij} − a_{ij}| as a Real.
  Real reconstruction_error(const Mat& a) const;

 private:
  size_t rows_, cols_;
  std::vector<Real> e_;
};

/// Floating Cholesky factor of a symmetric positive definite rational
/// matrix: lower triangular with positive diagonal, ‖LLᵀ − a‖∞ within
/// 2^(−prec/2)·‖a‖∞.  Throws NotPositiveDefiniteError on a non-positive
/// pivot.
RealMat cholesky(const Mat& a, unsigned prec = kDefaultPrec);

/// One Cholesky entry represented exactly as coeff·√radicand.  The exact
/// LDLᵀ factorization gives every entry of the Cholesky factor this form
/// (column j of L is column j of the unit factor times √d_j), which lets
/// floors be taken exactly when the entry is rational and by certified
/// re-evaluation otherwise.
struct QuadEntry {
  Rat coeff;
  Rat radicand;  // ≥ 0

  bool is_rational() const { return coeff == 0 || is_rational_square(radicand); }
  Rat exact() const;
  Real approx(unsigned prec) const;
  BigInt floor_times(const BigInt& w, unsigned initial_prec, unsigned prec_cap) const;
};

/// Lower-triangular Cholesky factor in exact quadratic form, row-major
/// (entry (i,j) for j ≤ i at index i(i+1)/2 + j).
std::vector<QuadEntry> cholesky_quadratic(const Mat& a);

}  // namespace latproj
