#include "latproj/matrix.hpp"

namespace latproj {

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix initializer");
    e_.insert(e_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(size_t n) {
  Mat m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw ShapeError("matrix product shape mismatch");
  Mat r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

Mat Mat::operator*(const Rat& s) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Rat Mat::det() const {
  if (!is_square()) throw ShapeError("determinant of a non-square matrix");
  const size_t n = rows_;
  Mat a = *this;
  Rat d = 1;
  for (size_t i = 0; i < n; ++i) {
    size_t p = i;
    while (p < n && a(p, i) == 0) ++p;
    if (p == n) return 0;
    if (p != i) {
      for (size_t j = 0; j < n; ++j) std::swap(a(i, j), a(p, j));
      d = -d;
    }
    d *= a(i, i);
    for (size_t r = i + 1; r < n; ++r) {
      if (a(r, i) == 0) continue;
      const Rat f = a(r, i) / a(i, i);
      for (size_t j = i; j < n; ++j) a(r, j) -= f * a(i, j);
    }
  }
  return d;
}

Mat Mat::inverse() const {
  if (!is_square()) throw ShapeError("inverse of a non-square matrix");
  const size_t n = rows_;
  Mat a = *this;
  Mat inv = identity(n);
  for (size_t i = 0; i < n; ++i) {
    size_t p = i;
    while (p < n && a(p, i) == 0) ++p;
    if (p == n) throw SingularMatrixError("singular matrix has no inverse");
    if (p != i)
      for (size_t j = 0; j < n; ++j) {
        std::swap(a(i, j), a(p, j));
        std::swap(inv(i, j), inv(p, j));
      }
    const Rat piv = a(i, i);
    for (size_t j = 0; j < n; ++j) {
      a(i, j) /= piv;
      inv(i, j) /= piv;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == i || a(r, i) == 0) continue;
      const Rat f = a(r, i);
      for (size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(i, j);
        inv(r, j) -= f * inv(i, j);
      }
    }
  }
  return inv;
}

Rat Mat::max_abs() const {
  Rat m = 0;
  for (const Rat& x : e_)
    if (cmp(abs(x), m) > 0) m = abs(x);
  return m;
}

bool Mat::is_symmetric() const {
  if (!is_square()) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Mat::is_integral() const {
  for (const Rat& x : e_)
    if (x.get_den() != 1) return false;
  return true;
}

std::vector<Rat> Mat::row(size_t i) const {
  return std::vector<Rat>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

std::vector<Rat> Mat::col(size_t j) const {
  std::vector<Rat> c(rows_);
  for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Mat Mat::col_slice(size_t first, size_t count) const {
  if (first + count > cols_) throw ShapeError("column slice out of range");
  Mat r(rows_, count);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < count; ++j) r(i, j) = (*this)(i, first + j);
  return r;
}

Mat gram_of(const Mat& m) { return m * m.transpose(); }

Mat from_int_rows(const std::vector<std::vector<long>>& rows) {
  const size_t r = rows.size();
  const size_t c = r ? rows[0].size() : 0;
  Mat m(r, c);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ShapeError("ragged integer rows");
    for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace latproj
