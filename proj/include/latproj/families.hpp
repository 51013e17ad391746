#pragma once

#include "latproj/lift.hpp"

namespace latproj {

// Closed-form axis-vector families.  Each family comes with the generator
// matrix it was derived from; family_lift rebuilds the corresponding lifted
// basis so convergence can be measured against the family's target Gram.

/// v = (1, 2t, (2t)², …, (2t)^{m−1}, t((2t)^m − 1)/(2t − 1)); the projection
/// lattice converges to D_m.  Requires m ≥ 3, t ≥ 1.
AxisVector family_dm(size_t m, const BigInt& t);

/// The m = 3 case: v = (1, 2t, 4t², 4t³ + 2t² + t); converges to the
/// face-centered cubic lattice.
AxisVector family_fcc(const BigInt& t);

/// Accelerated fcc construction with residual O(1/w²) instead of O(1/w):
/// v = (1, 2w² − w + 1, 2w² + w + 1, 4w³ + 3w).
AxisVector family_fcc_fast(const BigInt& w);

/// Recurrence targeting E8; w must be even.
AxisVector family_e8(const BigInt& w);

/// Recurrence targeting the Leech lattice.
AxisVector family_leech(const BigInt& w);

/// v = (1, ⌊√3·w⌋, ⌊√3·w⌋·⌊√(5/3)·w⌋ + ⌊w/√3⌋), through certified floors;
/// targets the determinant-5 plane lattice with Gram [[3,1],[1,2]].
AxisVector family_51(const BigInt& w);

enum class Family { Dm, Fcc, FccFast, E8, Leech, F51 };

struct FamilyParams {
  BigInt param;    // t for Dm/Fcc, w otherwise
  size_t m = 3;    // Dm only
};

/// The lifted basis behind a family member, for residual measurement.  The
/// result's target is the Gram of the family's source generator.
LiftResult family_lift(Family f, const FamilyParams& p);

/// The Gram matrix each family converges to (scaled by 1/w² in the lifted
/// basis).
GramMatrix family_target_gram(Family f, size_t m = 3);

Family family_from_name(const std::string& name);
std::string family_name(Family f);

/// Effective lift height for a parameter (2t for the Dm/Fcc families, w
/// otherwise).
BigInt family_height(Family f, const FamilyParams& p);

}  // namespace latproj
