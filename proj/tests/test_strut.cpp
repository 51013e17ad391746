#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include <algorithm>
#include <random>

#include "latproj/families.hpp"
#include "latproj/strut.hpp"
#include "oracles.hpp"

using namespace latproj;

namespace {

AxisVector axis(std::initializer_list<long> vhat) {
  ZVec v;
  for (long x : vhat) v.emplace_back(x);
  return AxisVector::from_vhat(std::move(v));
}

bool same_rows(const std::vector<StrutReport>& a, const std::vector<StrutReport>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i].v == b[i].v) || a[i].min_norm_primal != b[i].min_norm_primal || a[i].m != b[i].m)
      return false;
  return true;
}

}  // namespace

TEST_CASE("strut radius on known vectors") {
  CHECK(strut_radius_sq(axis({0, 0})) == 1);          // projection is the square lattice
  CHECK(strut_radius_sq(axis({1, 1})) == Rat(2, 3));  // hexagonal projection
  CHECK(strut_radius_sq(axis({2, 4, 7})) == Rat(19, 70));
  SUBCASE("brute-force cross-check") {
    // Minimum of M·A_v over a box, then scaled back by M.
    const AxisVector v = axis({2, 4, 7});
    Mat g = Mat::identity(3) * Rat(70);
    const auto vhat = v.vhat();
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) g(i, j) -= Rat(vhat[i] * vhat[j]);
    CHECK(oracles::brute_min_form(g, 10) == 19);
  }
}

TEST_CASE("strut radius is invariant under signed permutations") {
  std::mt19937 rng(91);
  std::uniform_int_distribution<long> dist(0, 9);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < 25; ++i) {
    const size_t d = 2 + i % 3;
    ZVec vhat(d);
    for (auto& x : vhat) x = dist(rng);
    const Rat base = strut_radius_sq(AxisVector::from_vhat(vhat));
    ZVec shuffled = vhat;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (auto& x : shuffled)
      if (sign(rng)) x = -x;
    CHECK(strut_radius_sq(AxisVector::from_vhat(shuffled)) == base);
  }
}

TEST_CASE("report fields are consistent") {
  const StrutReport r = strut_report(axis({1, 1}));
  CHECK(r.m == 3);
  CHECK(r.min_norm_primal == Rat(2, 3));
  CHECK(r.radius == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
  CHECK(r.center_density == doctest::Approx(0.28867513459481287).epsilon(1e-12));
  // volume_proxy = radius^{n−1}·‖v‖; det(primal)·M = 1 is checked exactly.
  CHECK(r.volume_proxy == doctest::Approx((2.0 / 3.0) * std::sqrt(3.0)).epsilon(1e-12));
  CHECK(primal_gram(r.v).mat().det() * Rat(r.m) == 1);
}

TEST_CASE("candidate counting") {
  CHECK(strut_candidate_count(3, 1, 1) == 1);   // only (1,0,0)
  CHECK(strut_candidate_count(3, 2, 2) == 1);   // (1,1,0)
  CHECK(strut_candidate_count(3, 3, 3) == 1);   // (1,1,1)
  CHECK(strut_candidate_count(3, 1, 3) == 3);
  // Count formula: descending nonnegative tuples (a₁ ≥ … ≥ a_{n−1} ≥ 0)
  // with 1 + Σ aᵢ² in range; cross-check by direct enumeration.
  std::uint64_t direct = 0;
  for (long a = 0; a * a <= 49; ++a)
    for (long b = 0; b <= a && 1 + a * a + b * b <= 50; ++b) ++direct;
  CHECK(strut_candidate_count(3, 1, 50) == direct);
}

TEST_CASE("search finds the densest candidates") {
  SUBCASE("M fixed to 3 selects the hexagonal projection") {
    const auto rows = strut_search(3, 3, 3, 1);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].v == axis({1, 1}));
  }
  SUBCASE("M fixed to 2") {
    const auto rows = strut_search(3, 2, 2, 5);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].v == axis({1, 0}));
  }
  SUBCASE("the hexagonal projection tops M ≤ 50 in dimension 3") {
    const auto rows = strut_search(3, 1, 50, 3);
    REQUIRE(!rows.empty());
    CHECK(rows[0].v == axis({1, 1}));
  }
  SUBCASE("n=4: the checkerboard family member appears at M=70") {
    // Candidates carry the canonical (descending) representative, so
    // (1,2,4,7) is listed as (1,7,4,2).
    const auto rows = strut_search(4, 70, 70, 1000);
    bool found = false;
    for (const auto& r : rows)
      if (r.v == axis({7, 4, 2})) {
        found = true;
        CHECK(r.min_norm_primal == Rat(19, 70));
      }
    CHECK(found);
    CHECK(strut_radius_sq(family_fcc(1)) == Rat(19, 70));
  }
  SUBCASE("empty range") { CHECK(strut_search(3, 5, 4, 3).empty()); }
}

TEST_CASE("search is deterministic across thread counts and matches serial") {
  const auto serial = strut_search_serial(3, 1, 50, 10);
  for (int threads : {1, 2, 4, 8}) {
    omp_set_num_threads(threads);
    CHECK(same_rows(strut_search(3, 1, 50, 10), serial));
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST_CASE("frontier") {
  SUBCASE("single row at M=1") {
    const auto rows = strut_frontier(3, 1);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].v == axis({0, 0}));
  }
  SUBCASE("rows up to M=3: the axis projection, then hexagonal") {
    // (1,1,0) at M=2 has proxy² = (1/2)²·2 = 1/2 < 1, so no new best until
    // the hexagonal projection at M=3 with proxy² = (2/3)²·3 = 4/3.
    const auto rows = strut_frontier(3, 3);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].v == axis({0, 0}));
    CHECK(rows[1].v == axis({1, 1}));
    CHECK(rows[1].min_norm_primal == Rat(2, 3));
  }
  SUBCASE("proxy column is strictly increasing") {
    const auto rows = strut_frontier(4, 80);
    for (size_t i = 1; i < rows.size(); ++i)
      CHECK(rows[i].volume_proxy > rows[i - 1].volume_proxy);
  }
  SUBCASE("family members top their own length stratum") {
    // family_fcc(1) = (1,2,4,7) is the best candidate at M = 70, though the
    // frontier best-so-far is still (1,1,1,1) from M = 4: proxy² 27/16
    // against 19³/70² = 6859/4900.
    const auto at70 = strut_search(4, 70, 70, 1);
    REQUIRE(at70.size() == 1);
    CHECK(at70[0].v == axis({7, 4, 2}));
    const auto rows = strut_frontier(4, 80);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].v == axis({0, 0, 0}));
    CHECK(rows[1].v == axis({1, 1, 1}));
  }
  SUBCASE("serial agreement") {
    CHECK(same_rows(strut_frontier(4, 40), strut_frontier_serial(4, 40)));
  }
}

TEST_CASE("volume proxy recomputes consistently") {
  std::mt19937 rng(97);
  std::uniform_int_distribution<long> dist(0, 6);
  for (int i = 0; i < 20; ++i) {
    ZVec vhat(3);
    for (auto& x : vhat) x = dist(rng);
    const StrutReport r = strut_report(AxisVector::from_vhat(vhat));
    const StrutReport again = strut_report(r.v);
    CHECK(r.volume_proxy == again.volume_proxy);
    CHECK(r.min_norm_primal == again.min_norm_primal);
  }
}

TEST_CASE("intractable ranges are refused with a count") {
  CHECK_THROWS_AS(strut_search(5, 1, BigInt("100000000000"), 5), EnumerationRefusedError);
}
