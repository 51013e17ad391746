#pragma once

#include <span>

#include "latproj/factor.hpp"
#include "latproj/matrix.hpp"

namespace latproj {

/// Integer vector v = (1, v₁, …, v_{n−1}) defining the projection of Zⁿ
/// onto the hyperplane v⊥.  The leading 1 is an invariant; M = ‖v‖² is
/// cached at construction.
class AxisVector {
 public:
  explicit AxisVector(ZVec entries);
  static AxisVector from_vhat(ZVec vhat);

  size_t n() const { return v_.size(); }
  const BigInt& operator[](size_t i) const { return v_[i]; }
  const ZVec& entries() const { return v_; }
  std::span<const BigInt> vhat() const { return {v_.data() + 1, v_.size() - 1}; }

  /// M = ‖v‖² = 1 + Σ v̂ᵢ².
  const BigInt& norm_sq() const { return m_; }

  bool operator==(const AxisVector& o) const { return v_ == o.v_; }

 private:
  ZVec v_;
  BigInt m_;
};

/// Symmetric positive definite rational matrix.  Symmetry is checked at
/// construction; positive definiteness is checked exactly (LDLᵀ) unless the
/// caller can guarantee it structurally and uses trusted().
class GramMatrix {
 public:
  explicit GramMatrix(Mat m);
  static GramMatrix trusted(Mat m);

  size_t dim() const { return m_.rows(); }
  const Mat& mat() const { return m_; }
  const Rat& operator()(size_t i, size_t j) const { return m_(i, j); }
  bool operator==(const GramMatrix& o) const { return m_ == o.m_; }

 private:
  struct Trusted {};
  GramMatrix(Mat m, Trusted);
  Mat m_;
};

/// Rational row basis of a lattice: rank many rows in an ambient dimension.
/// Rows are linearly independent (its Gram is positive definite).
class GeneratorMatrix {
 public:
  explicit GeneratorMatrix(Mat m);

  size_t rank() const { return m_.rows(); }
  size_t ambient_dim() const { return m_.cols(); }
  const Mat& mat() const { return m_; }
  GramMatrix gram() const { return GramMatrix(gram_of(m_)); }

 private:
  Mat m_;
};

/// Orthogonal projector onto v⊥: symmetric, idempotent, annihilates v.
Mat projector_matrix(const AxisVector& v);

/// Gram matrix of the projection lattice in the basis of the projected unit
/// vectors e₂…eₙ: I − v̂ᵀv̂/M.  det = 1/M.
GramMatrix primal_gram(const AxisVector& v);

/// Gram matrix of Zⁿ ∩ v⊥ in the standard basis: I + v̂ᵀv̂, integer entries,
/// det = M.  Exactly the inverse of primal_gram.
GramMatrix dual_gram(const AxisVector& v);

/// The standard integer basis [−v̂ᵀ | I] of Zⁿ ∩ v⊥.
GeneratorMatrix dual_generator(const AxisVector& v);

/// Row basis of the projection lattice: the projected unit vectors.
GeneratorMatrix primal_generator(const AxisVector& v);

/// Bundle of everything derived from one axis vector.
struct ProjectionLattice {
  AxisVector v;
  GramMatrix gram_primal;
  GramMatrix gram_dual;
  GeneratorMatrix gen_dual;

  static ProjectionLattice of(const AxisVector& v);
};

}  // namespace latproj
