#pragma once

#include "latproj/reduction.hpp"

namespace latproj {

/// One fat-strut candidate: the axis vector, its squared length M, the
/// squared cylinder radius (λ₁² of the projection lattice), and derived
/// quality figures.  volume_proxy = radius^{n−1}·‖v‖ is the cylinder volume
/// without the M-independent unit-ball constant.
struct StrutReport {
  AxisVector v;
  BigInt m;
  Rat min_norm_primal;
  double radius;
  double center_density;
  double volume_proxy;
};

/// Squared radius of the largest open cylinder around the segment 0→v whose
/// interior avoids every other lattice point: λ₁² of the projection Gram.
Rat strut_radius_sq(const AxisVector& v, const SvpOptions& opts = {});

StrutReport strut_report(const AxisVector& v, const SvpOptions& opts = {});

/// Number of canonical candidates (v̂ sorted descending, nonnegative) with
/// M in [m_min, m_max]; counting stops early past `cap`.
std::uint64_t strut_candidate_count(size_t n, const BigInt& m_min, const BigInt& m_max,
                                    std::uint64_t cap = UINT64_MAX);

/// Refusal threshold for the exhaustive searches below.
constexpr std::uint64_t kStrutCandidateLimit = 2'000'000;

/// Exhaustive search over canonical axis vectors with M in range, ranked by
/// center density of the projection lattice (exact comparisons; ties broken
/// by lexicographically smaller v̂).  Candidates are evaluated in an OpenMP
/// loop; results are independent of the thread count.  The _serial variant
/// is the reference implementation.
std::vector<StrutReport> strut_search(size_t n, const BigInt& m_min, const BigInt& m_max,
                                      size_t top_k, const SvpOptions& opts = {});
std::vector<StrutReport> strut_search_serial(size_t n, const BigInt& m_min, const BigInt& m_max,
                                             size_t top_k, const SvpOptions& opts = {});

/// Best-so-far frontier: one row per M whose best candidate strictly beats
/// every smaller M on volume_proxy (compared exactly via proxy²).
std::vector<StrutReport> strut_frontier(size_t n, const BigInt& m_max, const SvpOptions& opts = {});
std::vector<StrutReport> strut_frontier_serial(size_t n, const BigInt& m_max,
                                               const SvpOptions& opts = {});

}  // namespace latproj
