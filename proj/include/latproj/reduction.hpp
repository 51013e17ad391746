#pragma once

#include <cstdint>
#include <optional>

#include "latproj/lift.hpp"
#include "latproj/projection.hpp"

namespace latproj {

/// Result of an exact basis reduction: gram = transform·original·transformᵀ
/// with transform integer and |det| = 1.
struct ReducedBasis {
  Mat gram;
  Mat transform;
};

/// Gauss reduction of a 2-dimensional Gram matrix to the canonical domain
/// 0 ≤ 2q ≤ p ≤ r (sign of the off-diagonal normalized via a reflection).
/// Every positive form is congruent to exactly one matrix in this domain,
/// which makes similarity testing a pure comparison.
ReducedBasis lagrange_reduce_2d(const GramMatrix& a);

/// Exact rational LLL on a Gram matrix (no floating Gram-Schmidt), default
/// delta 99/100.  Requires 1/4 < delta < 1.
ReducedBasis lll_reduce(const GramMatrix& a, const Rat& delta = Rat(99, 100));

struct SvpOptions {
  size_t max_dim = 12;
};

struct SvpResult {
  Rat min_norm;  // λ₁², exact
  ZVec witness;  // coefficients against the input basis; witness·a·witnessᵀ = min_norm
};

/// Exact shortest-vector computation: LLL preprocessing, then full
/// enumeration with rational interval bounds, initialized from the reduced
/// diagonal.  Refuses dimensions above opts.max_dim.
SvpResult shortest_vector(const GramMatrix& a, const SvpOptions& opts = {});

struct DensityReport {
  Rat min_norm;
  Rat det;
  double center_density;   // (λ₁/2)^d / √det
  double packing_density;  // center density × volume of the unit d-ball
};

DensityReport center_density(const GramMatrix& a, const SvpOptions& opts = {});

struct SimilarityWitness {
  Rat lambda;
  Mat transform;  // integer, |det| = 1; a = lambda · T·b·Tᵀ
};

/// Exact geometric-similarity test for plane lattices: decides whether
/// a = λ·T·b·Tᵀ for some positive rational λ and unimodular T, returning a
/// witness when one exists.
std::optional<SimilarityWitness> similarity_2d(const GramMatrix& a, const GramMatrix& b);

struct Prop1Counterexample {
  long a, b;
  SimilarityWitness witness;
};

struct Prop1Report {
  std::uint64_t checked;
  std::vector<Prop1Counterexample> counterexamples;
};

/// Scans all axis vectors (1, a, b) with 0 ≤ a, b ≤ bound (signs and swaps
/// are similarity-preserving) for projections whose dual is geometrically
/// similar to the target.  Parallel over the grid with a deterministic
/// merge; the serial variant is the reference implementation.
Prop1Report prop1_search(long bound, const GramMatrix& target);
Prop1Report prop1_search_serial(long bound, const GramMatrix& target);

/// ‖a − c·G‖∞ for the lift's Gram.  With use_reduction=false this is the
/// plain scaled residual at c = 1/w².  With use_reduction=true the reduced
/// Gram is also tried under a small bracket of rational scales around 1/w²
/// (plus the least-squares ratio), and the best of all candidates is
/// returned, so the refined value is never larger than the plain one.
Rat convergence_residual(const GramMatrix& a, const LiftResult& lift, bool use_reduction);

}  // namespace latproj
