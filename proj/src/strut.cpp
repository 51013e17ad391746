#include "latproj/strut.hpp"

#include <algorithm>

namespace latproj {

namespace {

// Canonical candidates: v̂ nonnegative and sorted descending.  Coordinate
// permutations and sign flips of v̂ leave both M and the projection Gram's
// congruence class unchanged, so one representative per orbit suffices.
void generate(size_t pos, size_t len, const BigInt& m_min, const BigInt& m_max, BigInt sum_sq,
              const BigInt& prev, ZVec& current, std::vector<ZVec>& out) {
  if (pos == len) {
    if (1 + sum_sq >= m_min) out.push_back(current);
    return;
  }
  BigInt limit = isqrt(m_max - 1 - sum_sq);
  if (limit > prev) limit = prev;
  for (BigInt a = limit; a >= 0; --a) {
    // Remaining coordinates are ≤ a, so the smallest reachable M from here
    // is 1 + sum_sq + a²; descending order makes the m_min check a leaf test.
    current[pos] = a;
    generate(pos + 1, len, m_min, m_max, sum_sq + a * a, a, current, out);
  }
  current[pos] = 0;
}

std::vector<ZVec> candidates(size_t n, const BigInt& m_min, const BigInt& m_max) {
  if (n < 2) throw ShapeError("strut search needs dimension at least 2");
  std::vector<ZVec> out;
  if (m_max < 1 || m_max < m_min) return out;
  ZVec current(n - 1, 0);
  generate(0, n - 1, m_min < 1 ? BigInt(1) : m_min, m_max, 0, isqrt(m_max - 1), current, out);
  return out;
}

// Exact ranking key: center_density² and volume_proxy² are both proportional
// to λ₁²^{n−1}·M, so one rational covers both orderings.
Rat rank_key(const StrutReport& r, size_t n) {
  Rat k = r.m;
  for (size_t i = 0; i + 1 < n; ++i) k *= r.min_norm_primal;
  return k;
}

bool lex_less(const AxisVector& a, const AxisVector& b) {
  return a.entries() < b.entries();
}

std::vector<StrutReport> rank_and_truncate(std::vector<StrutReport> reports, size_t n,
                                           size_t top_k) {
  std::sort(reports.begin(), reports.end(), [&](const StrutReport& x, const StrutReport& y) {
    const Rat kx = rank_key(x, n), ky = rank_key(y, n);
    if (kx != ky) return kx > ky;
    return lex_less(x.v, y.v);
  });
  if (reports.size() > top_k) reports.erase(reports.begin() + top_k, reports.end());
  return reports;
}

std::vector<StrutReport> frontier_from(std::vector<StrutReport> reports, size_t n) {
  std::sort(reports.begin(), reports.end(), [&](const StrutReport& x, const StrutReport& y) {
    if (x.m != y.m) return x.m < y.m;
    const Rat kx = rank_key(x, n), ky = rank_key(y, n);
    if (kx != ky) return kx > ky;
    return lex_less(x.v, y.v);
  });
  std::vector<StrutReport> rows;
  Rat best = -1;
  size_t i = 0;
  while (i < reports.size()) {
    // First report per M is its best under the exact key.
    const Rat k = rank_key(reports[i], n);
    if (k > best) {
      best = k;
      rows.push_back(reports[i]);
    }
    const BigInt m = reports[i].m;
    while (i < reports.size() && reports[i].m == m) ++i;
  }
  return rows;
}

void check_tractable(size_t n, const BigInt& m_min, const BigInt& m_max) {
  const std::uint64_t count = strut_candidate_count(n, m_min, m_max, kStrutCandidateLimit);
  if (count > kStrutCandidateLimit)
    throw EnumerationRefusedError("strut search refused: more than " +
                                  std::to_string(kStrutCandidateLimit) +
                                  " candidates (estimated " + std::to_string(count) + "+)");
}

}  // namespace

Rat strut_radius_sq(const AxisVector& v, const SvpOptions& opts) {
  return strut_report(v, opts).min_norm_primal;
}

StrutReport strut_report(const AxisVector& v, const SvpOptions& opts) {
  const size_t d = v.n() - 1;
  const BigInt& m = v.norm_sq();
  // Integer form M·A_v = M·I − v̂ᵀv̂ keeps the enumeration denominator-free.
  Mat g = Mat::identity(d) * Rat(m);
  const auto vhat = v.vhat();
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) g(i, j) -= Rat(vhat[i] * vhat[j]);
  const SvpResult svp = shortest_vector(GramMatrix::trusted(std::move(g)), opts);
  const Rat min_norm = svp.min_norm / Rat(m);

  const unsigned prec = 128;
  const Real lambda = Real::sqrt(Real(min_norm, prec));
  const Real norm_v = Real::sqrt(Real(m, prec));
  const Real radius_pow = Real::pow_ui(lambda, d);
  const Real half(Rat(1, 2), prec);
  const double cd = (Real::pow_ui(lambda * half, d) * norm_v).to_double();
  return {v, m, min_norm, lambda.to_double(), cd, (radius_pow * norm_v).to_double()};
}

std::uint64_t strut_candidate_count(size_t n, const BigInt& m_min, const BigInt& m_max,
                                    std::uint64_t cap) {
  if (n < 2) throw ShapeError("strut search needs dimension at least 2");
  if (m_max < 1 || m_max < m_min) return 0;
  // Same recursion as the generator, counting only.
  struct Counter {
    size_t len;
    BigInt m_min;
    BigInt m_max;
    std::uint64_t cap;
    std::uint64_t count = 0;
    void walk(size_t pos, BigInt sum_sq, const BigInt& prev) {
      if (count > cap) return;
      if (pos == len) {
        if (1 + sum_sq >= m_min) ++count;
        return;
      }
      BigInt limit = isqrt(m_max - 1 - sum_sq);
      if (limit > prev) limit = prev;
      for (BigInt a = limit; a >= 0 && count <= cap; --a) walk(pos + 1, sum_sq + a * a, a);
    }
  } counter{n - 1, m_min < 1 ? BigInt(1) : m_min, m_max, cap};
  counter.walk(0, 0, isqrt(m_max - 1));
  return counter.count;
}

std::vector<StrutReport> strut_search_serial(size_t n, const BigInt& m_min, const BigInt& m_max,
                                             size_t top_k, const SvpOptions& opts) {
  check_tractable(n, m_min, m_max);
  std::vector<StrutReport> reports;
  for (const ZVec& vhat : candidates(n, m_min, m_max))
    reports.push_back(strut_report(AxisVector::from_vhat(vhat), opts));
  return rank_and_truncate(std::move(reports), n, top_k);
}

std::vector<StrutReport> strut_search(size_t n, const BigInt& m_min, const BigInt& m_max,
                                      size_t top_k, const SvpOptions& opts) {
  check_tractable(n, m_min, m_max);
  const std::vector<ZVec> cands = candidates(n, m_min, m_max);
  std::vector<StrutReport> reports;
  reports.reserve(cands.size());
  for (size_t i = 0; i < cands.size(); ++i)
    reports.push_back(StrutReport{AxisVector::from_vhat(cands[i]), 0, 0, 0, 0, 0});
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < static_cast<long>(cands.size()); ++i) {
    reports[i] = strut_report(AxisVector::from_vhat(cands[i]), opts);
  }
  return rank_and_truncate(std::move(reports), n, top_k);
}

std::vector<StrutReport> strut_frontier_serial(size_t n, const BigInt& m_max,
                                               const SvpOptions& opts) {
  check_tractable(n, 1, m_max);
  std::vector<StrutReport> reports;
  for (const ZVec& vhat : candidates(n, 1, m_max))
    reports.push_back(strut_report(AxisVector::from_vhat(vhat), opts));
  return frontier_from(std::move(reports), n);
}

std::vector<StrutReport> strut_frontier(size_t n, const BigInt& m_max, const SvpOptions& opts) {
  check_tractable(n, 1, m_max);
  const std::vector<ZVec> cands = candidates(n, 1, m_max);
  std::vector<StrutReport> reports;
  reports.reserve(cands.size());
  for (size_t i = 0; i < cands.size(); ++i)
    reports.push_back(StrutReport{AxisVector::from_vhat(cands[i]), 0, 0, 0, 0, 0});
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < static_cast<long>(cands.size()); ++i) {
    reports[i] = strut_report(AxisVector::from_vhat(cands[i]), opts);
  }
  return frontier_from(std::move(reports), n);
}

}  // namespace latproj
