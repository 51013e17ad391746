#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "latproj/numeric.hpp"

namespace latproj {

/// Dense matrix of exact rationals with value semantics.  Dimensions are
/// fixed at construction; all operations return new matrices and never
/// mutate their arguments, so shared instances are safe across threads.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  const Rat& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }
  Rat& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Rat& s) const;
  friend Mat operator*(const Rat& s, const Mat& m) { return m * s; }

  Mat transpose() const;

  /// Exact determinant (Gaussian elimination over the rationals).
  Rat det() const;

  /// Exact inverse.  Throws SingularMatrixError on singular input.
  Mat inverse() const;

  /// max_{i,j} |a_{ij}| — the ∞-norm used throughout for residuals.
  Rat max_abs() const;

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_integral() const;

  std::vector<Rat> row(size_t i) const;
  std::vector<Rat> col(size_t j) const;

  /// Columns [first, first+count) as a new matrix.
  Mat col_slice(size_t first, size_t count) const;

 private:
  size_t rows_, cols_;
  std::vector<Rat> e_;
};

/// Gram matrix of an integer row-basis: m·mᵀ.
Mat gram_of(const Mat& m);

Mat from_int_rows(const std::vector<std::vector<long>>& rows);

}  // namespace latproj
