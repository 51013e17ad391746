#pragma once

#include <optional>

#include "latproj/projection.hpp"

namespace latproj {

enum class LiftMode { Dual, Primal };

/// Everything produced by one lift of a target Gram matrix at height w.
///
/// `lifted` is the integer (n−1)×n row basis built from floors of w times a
/// factor of the target; `basis_change` is its last n−1 columns, unimodular
/// by construction, and satisfies lifted = basis_change·[−v̂ᵀ | I] exactly.
/// `lifted_gram` = lifted·liftedᵀ approaches w²·target: `residual` is the
/// exact difference, with entries O(w).
struct LiftResult {
  GramMatrix target;
  BigInt w;
  Mat lifted;
  Mat basis_change;
  AxisVector v;
  Mat lifted_gram;
  Mat residual;
  LiftMode mode = LiftMode::Dual;

  /// Primal mode only: Gram of the projection lattice in the basis dual to
  /// the lifted one, the matching scale c, and ‖A − c·gram‖∞ against the
  /// originally requested A.
  std::optional<Mat> primal_basis_gram;
  std::optional<Rat> primal_scale;
  std::optional<Rat> primal_residual;

  /// ‖target − lifted_gram/w²‖∞, exact.
  Rat scaled_residual_norm() const;
};

/// Integer lift of an exact rational lower-triangular factor: row i is
/// (−⌊wL_{i,1}⌋, …, −⌊wL_{i,i}⌋, 1, 0, …, 0).
Mat lift_matrix(const Mat& lower, const BigInt& w);

/// Same lift for a factor in exact quadratic form (see cholesky_quadratic);
/// rational entries floor exactly, irrational ones through certified_floor
/// with precision doubling.
Mat lift_matrix(const std::vector<QuadEntry>& lower, size_t dim, const BigInt& w,
                unsigned initial_prec = kDefaultPrec, unsigned prec_cap = kPrecCap);

/// One-shot variant on a floating factor (no retry handle).
Mat lift_matrix(const RealMat& lower, const BigInt& w);

/// Recovers the axis vector from a lifted matrix by exact forward
/// substitution through its unit-lower-triangular right block.  Throws
/// ShapeError if the block is not unit lower triangular.
std::pair<AxisVector, Mat> row_reduce_lift(const Mat& lifted);

/// Lift of an arbitrary rational generator matrix (rows need not be
/// triangular): floors are exact, and the right block must come out
/// unimodular for the row reduction to be a basis change.  This is the
/// engine behind the closed-form families whose generators are not
/// triangular.
LiftResult lift_from_generator(const Mat& generator, const BigInt& w);

/// End-to-end construction: factor the target, lift at height w, read off
/// v.  Dual mode approximates the target by the lifted-basis Gram of
/// Zⁿ ∩ v⊥ (scaled by 1/w²).  Primal mode lifts the ∞-norm-normalized
/// inverse of A instead, so that the projection lattice itself approximates
/// A: the reported residual is ‖A − c·G⁻¹‖∞ for the lifted Gram G and
/// c = w²/‖A⁻¹‖∞.
LiftResult construct_v(const GramMatrix& a, const BigInt& w, LiftMode mode = LiftMode::Dual,
                       unsigned initial_prec = kDefaultPrec);

}  // namespace latproj
