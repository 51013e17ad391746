#include "latproj/projection.hpp"

namespace latproj {

AxisVector::AxisVector(ZVec entries) : v_(std::move(entries)) {
  if (v_.size() < 2) throw ShapeError("axis vector needs dimension at least 2");
  if (v_[0] != 1) throw ShapeError("axis vector must have first coordinate 1");
  m_ = 0;
  for (const BigInt& x : v_) m_ += x * x;
}

AxisVector AxisVector::from_vhat(ZVec vhat) {
  ZVec v;
  v.reserve(vhat.size() + 1);
  v.emplace_back(1);
  for (auto& x : vhat) v.push_back(std::move(x));
  return AxisVector(std::move(v));
}

GramMatrix::GramMatrix(Mat m) : m_(std::move(m)) {
  if (!m_.is_symmetric()) throw ShapeError("Gram matrix must be symmetric");
  if (!is_positive_definite(m_)) throw NotPositiveDefiniteError("Gram matrix not positive definite");
}

GramMatrix::GramMatrix(Mat m, Trusted) : m_(std::move(m)) {}

GramMatrix GramMatrix::trusted(Mat m) { return GramMatrix(std::move(m), Trusted{}); }

GeneratorMatrix::GeneratorMatrix(Mat m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() > m_.cols())
    throw ShapeError("generator matrix must have rank ≤ ambient dimension");
  if (!is_positive_definite(gram_of(m_))) throw ShapeError("generator rows must be independent");
}

Mat projector_matrix(const AxisVector& v) {
  const size_t n = v.n();
  const Rat minv(1, v.norm_sq());
  Mat p = Mat::identity(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) p(i, j) -= Rat(v[i] * v[j]) * minv;
  return p;
}

GramMatrix primal_gram(const AxisVector& v) {
  const size_t d = v.n() - 1;
  const Rat minv(1, v.norm_sq());
  Mat g = Mat::identity(d);
  const auto vhat = v.vhat();
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) g(i, j) -= Rat(vhat[i] * vhat[j]) * minv;
  return GramMatrix::trusted(std::move(g));  // PD: eigenvalues are 1 and 1/M
}

GramMatrix dual_gram(const AxisVector& v) {
  const size_t d = v.n() - 1;
  Mat g = Mat::identity(d);
  const auto vhat = v.vhat();
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) g(i, j) += Rat(vhat[i] * vhat[j]);
  return GramMatrix::trusted(std::move(g));
}

GeneratorMatrix dual_generator(const AxisVector& v) {
  const size_t d = v.n() - 1;
  Mat g(d, v.n());
  const auto vhat = v.vhat();
  for (size_t i = 0; i < d; ++i) {
    g(i, 0) = Rat(-vhat[i]);
    g(i, i + 1) = 1;
  }
  return GeneratorMatrix(std::move(g));
}

GeneratorMatrix primal_generator(const AxisVector& v) {
  // Rows are the projections of e₂…eₙ: eᵢ − (vᵢ/M)·v.
  const size_t n = v.n();
  const Rat minv(1, v.norm_sq());
  Mat g(n - 1, n);
  for (size_t i = 0; i < n - 1; ++i) {
    const Rat f = Rat(v[i + 1]) * minv;
    for (size_t j = 0; j < n; ++j) g(i, j) = -f * Rat(v[j]);
    g(i, i + 1) += 1;
  }
  return GeneratorMatrix(std::move(g));
}

ProjectionLattice ProjectionLattice::of(const AxisVector& v) {
  return {v, primal_gram(v), dual_gram(v), dual_generator(v)};
}

}  // namespace latproj
