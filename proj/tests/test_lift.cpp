#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "latproj/catalog.hpp"
#include "latproj/families.hpp"
#include "latproj/lift.hpp"
#include "oracles.hpp"

using namespace latproj;

namespace {

ZVec ints(std::initializer_list<long> xs) {
  ZVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("lift of an exact factor") {
  // Scaled rectangular target: factor diag(2,1) lifts to [[-2w,1,0],[0,-w,1]].
  for (long w : {1L, 3L, 10L}) {
    const Mat lw = lift_matrix(Mat{{2, 0}, {0, 1}}, w);
    CHECK(lw == (Mat{{Rat(-2 * w), 1, 0}, {0, Rat(-w), 1}}));
  }
  CHECK(lift_matrix(Mat::identity(2), 1) == (Mat{{-1, 1, 0}, {0, -1, 1}}));
  const Mat not_lower{{1, 1}, {0, 1}};
  CHECK_THROWS_AS(lift_matrix(not_lower, 2), ShapeError);
  CHECK_THROWS_AS(lift_matrix(Mat::identity(2), 0), ShapeError);
}

TEST_CASE("lift of an irrational factor uses certified floors") {
  // Factor of [[3,1],[1,2]]: entries sqrt(3), 1/sqrt(3), sqrt(5/3).
  const auto chol = cholesky_quadratic(Mat{{3, 1}, {1, 2}});
  const Mat lw = lift_matrix(chol, 2, 10);
  CHECK(lw == (Mat{{-17, 1, 0}, {-5, -12, 1}}));
  // One-shot floating path agrees.
  CHECK(lift_matrix(cholesky(Mat{{3, 1}, {1, 2}}, 256), 10) == lw);
}

TEST_CASE("row reduction recovers the axis vector") {
  for (long w : {1L, 2L, 7L}) {
    const auto [v, h] = row_reduce_lift(Mat{{Rat(-2 * w), 1, 0}, {0, Rat(-w), 1}});
    CHECK(v.entries() == ints({1, 2 * w, 2 * w * w}));
    CHECK(h.det() == 1);
  }
  const auto [v1, h1] = row_reduce_lift(Mat{{-1, 1, 0}, {0, -1, 1}});
  CHECK(v1.entries() == ints({1, 1, 1}));
  const auto [v2, h2] = row_reduce_lift(Mat{{-17, 1, 0}, {-5, -12, 1}});
  CHECK(v2.entries() == ints({1, 17, 209}));
  const Mat bad{{-3, 2, 0}, {0, -1, 1}};
  CHECK_THROWS_AS(row_reduce_lift(bad), ShapeError);
}

TEST_CASE("construct_v on the scaled rectangular lattice") {
  const GramMatrix a(Mat{{4, 0}, {0, 1}});
  for (long w : {1L, 10L, 100L}) {
    const LiftResult r = construct_v(a, w);
    CHECK(r.v.entries() == ints({1, 2 * w, 2 * w * w}));
    CHECK(r.lifted_gram ==
          (Mat{{Rat(4 * w * w + 1), Rat(-w)}, {Rat(-w), Rat(w * w + 1)}}));
    CHECK(r.scaled_residual_norm() == Rat(1, w));
  }
}

TEST_CASE("construct_v on the identity gives the ones vector") {
  for (size_t d : {2UL, 3UL, 5UL}) {
    const LiftResult r = construct_v(GramMatrix(Mat::identity(d)), 1);
    ZVec expect(d + 1, 1);
    CHECK(r.v.entries() == expect);
    // The standard basis of Z^n ∩ (1,…,1)⊥ has Gram I + ones, congruent to
    // the lifted basis Gram through the row reduction.
    Mat ones(d, d);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) ones(i, j) = 1;
    CHECK(dual_gram(r.v).mat() == Mat::identity(d) + ones);
    CHECK(r.basis_change * dual_gram(r.v).mat() * r.basis_change.transpose() == r.lifted_gram);
  }
}

TEST_CASE("construct_v certified path matches the closed-form floors") {
  const GramMatrix a(Mat{{3, 1}, {1, 2}});
  const LiftResult r = construct_v(a, 10);
  CHECK(r.v.entries() == ints({1, 17, 209}));
  const LiftResult r100 = construct_v(a, 100);
  CHECK(r100.v.entries() == ints({1, 173, 173 * 129 + 57}));
}

TEST_CASE("lift invariants on random targets") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> wdist(1, 20);
  for (int i = 0; i < 50; ++i) {
    const size_t d = 2 + i % 4;  // dims 2..5
    const GramMatrix a(oracles::random_spd(rng, d, 3));
    const BigInt w(wdist(rng));
    const LiftResult r = construct_v(a, w);
    CHECK(r.basis_change.det() == 1);
    CHECK(r.lifted.is_integral());
    // lifted = basis_change · [−v̂ᵀ | I]
    CHECK(r.basis_change * dual_generator(r.v).mat() == r.lifted);
    // Unimodular congruence of the two dual Grams.
    CHECK(r.basis_change * dual_gram(r.v).mat() * r.basis_change.transpose() == r.lifted_gram);
    CHECK(r.residual == r.lifted_gram - a.mat() * Rat(w * w));
  }
}

TEST_CASE("residual stays O(1/w) along doubling heights") {
  std::mt19937 rng(43);
  for (int i = 0; i < 5; ++i) {
    const size_t d = 2 + i % 3;
    const GramMatrix a(oracles::random_spd(rng, d, 3));
    Rat first;
    Rat worst = 0;
    for (BigInt w = 2; w <= 256; w *= 2) {
      const Rat rw = construct_v(a, w).scaled_residual_norm() * Rat(w);
      if (w == 2) first = rw;
      if (rw > worst) worst = rw;
    }
    CHECK(worst <= 4 * first);
  }
}

TEST_CASE("primal mode approximates the requested Gram itself") {
  const GramMatrix a(Mat{{2, 1}, {1, 2}});
  Rat prev;
  bool first = true;
  for (BigInt w : {4, 16, 64}) {
    const LiftResult r = construct_v(a, w, LiftMode::Primal);
    REQUIRE(r.primal_residual.has_value());
    // c·(lifted Gram)⁻¹ → A entrywise.
    if (!first) CHECK(*r.primal_residual < prev);
    prev = *r.primal_residual;
    first = false;
  }
  const LiftResult r = construct_v(a, 64, LiftMode::Primal);
  CHECK(*r.primal_residual < Rat(1, 10));
}

TEST_CASE("family dm closed form") {
  CHECK(family_dm(3, 1).entries() == ints({1, 2, 4, 7}));
  CHECK(family_dm(3, 2).entries() == ints({1, 4, 16, 42}));
  CHECK(family_dm(4, 1).entries() == ints({1, 2, 4, 8, 15}));
  CHECK_THROWS_AS(family_dm(2, 1), ShapeError);
}

TEST_CASE("family fcc closed form and agreement with dm") {
  CHECK(family_fcc(1).entries() == ints({1, 2, 4, 7}));
  CHECK(family_fcc(2).entries() == ints({1, 4, 16, 42}));
  CHECK(family_fcc(3).entries() == ints({1, 6, 36, 129}));
  for (long t = 1; t <= 10; ++t) CHECK(family_fcc(t).entries() == family_dm(3, t).entries());
}

TEST_CASE("family fcc-fast closed form") {
  CHECK(family_fcc_fast(1).entries() == ints({1, 2, 4, 7}));
  CHECK(family_fcc_fast(2).entries() == ints({1, 7, 11, 38}));
  SUBCASE("lifted Gram has no linear terms") {
    for (long w : {2L, 5L, 16L}) {
      const LiftResult r = family_lift(Family::FccFast, {w});
      CHECK(r.v.entries() == family_fcc_fast(w).entries());
      const Mat expected{{Rat(3 * w * w + 2), Rat(w * w + 1), Rat(-w * w)},
                         {Rat(w * w + 1), Rat(3 * w * w + 2), Rat(w * w)},
                         {Rat(-w * w), Rat(w * w), Rat(3 * w * w + 1)}};
      CHECK(r.lifted_gram == expected);
      CHECK(r.scaled_residual_norm() * Rat(w * w) == 2);
    }
  }
}

TEST_CASE("family e8") {
  const AxisVector v2 = family_e8(2);
  CHECK(v2[1] == 4);
  CHECK(v2[2] == 6);
  CHECK(v2[3] == 4);  // w(v2 − v1) = 2(6 − 4)
  CHECK_THROWS_AS(family_e8(3), ShapeError);
  CHECK_THROWS_AS(family_e8(0), ShapeError);
  SUBCASE("recurrence equals the lift of the catalog generator") {
    for (long w : {2L, 4L, 6L, 8L}) {
      const LiftResult r = family_lift(Family::E8, {w});
      CHECK(r.v.entries() == family_e8(w).entries());
    }
  }
  SUBCASE("scaled Gram converges to the E8 Gram") {
    Rat prev;
    bool first = true;
    for (long w : {2L, 4L, 8L}) {
      const Rat res = family_lift(Family::E8, {w}).scaled_residual_norm();
      if (!first) CHECK(res < prev);
      prev = res;
      first = false;
    }
  }
}

TEST_CASE("family leech") {
  const AxisVector v1 = family_leech(1);
  CHECK(v1.n() == 25);
  CHECK(v1[1] == 8);
  CHECK(v1[2] == 36);  // 4(8+1)
  SUBCASE("last entry is the shifted total at w=1") {
    BigInt total = 0;
    for (size_t i = 1; i <= 23; ++i) total += v1[i];
    CHECK(v1[24] == total - 3);
  }
  SUBCASE("chain entries strictly increase") {
    for (long w : {1L, 2L}) {
      const AxisVector v = family_leech(w);
      for (size_t i = 2; i <= 7; ++i) CHECK(v[i] > v[i - 1]);
    }
  }
  SUBCASE("recurrence equals the lift of the catalog generator") {
    for (long w : {1L, 2L, 3L}) {
      const LiftResult r = family_lift(Family::Leech, {w});
      CHECK(r.v.entries() == family_leech(w).entries());
    }
  }
  SUBCASE("entries outgrow 64-bit at w=4") {
    const AxisVector v = family_leech(4);
    CHECK(mpz_sizeinbase(v[24].get_mpz_t(), 2) > 64);
  }
}

TEST_CASE("family 5_1 uses certified floors") {
  CHECK(family_51(10).entries() == ints({1, 17, 209}));
  CHECK(family_51(1).entries() == ints({1, 1, 1}));
  CHECK(family_51(100).entries() == ints({1, 173, 173 * 129 + 57}));
  SUBCASE("agrees with the general construction") {
    for (long w : {3L, 10L, 47L})
      CHECK(family_51(w).entries() == family_lift(Family::F51, {w}).v.entries());
  }
  SUBCASE("floors match the exact quadratic oracle") {
    std::mt19937 rng(51);
    std::uniform_int_distribution<long> wd(1, 4000);
    for (int i = 0; i < 25; ++i) {
      const long w = wd(rng);
      const AxisVector v = family_51(w);
      const BigInt a = floor_quadratic(w, 3);
      const BigInt b = floor_quadratic(w, Rat(5, 3));
      const BigInt c = floor_quadratic(w, Rat(1, 3));
      CHECK(v[1] == a);
      CHECK(v[2] == a * b + c);
    }
  }
}

TEST_CASE("catalog entries are positive definite with expected determinants") {
  for (const auto& e : catalog_entries()) {
    CHECK(is_positive_definite(e.gram));
  }
  CHECK(catalog_lookup("E8")->gram.det() == 1);
  CHECK(catalog_lookup("D3")->gram.det() == 4);
  CHECK(catalog_lookup("D3*")->gram.det() == Rat(1, 4));
  CHECK(catalog_lookup("5_1")->gram.det() == 5);
  CHECK(catalog_lookup("Z7")->gram == Mat::identity(7));
  CHECK(catalog_lookup("z12")->gram.rows() == 12);
  CHECK(!catalog_lookup("nope"));
}

TEST_CASE("leech catalog gram is eight times an even unimodular gram") {
  const Mat t = leech_generator();
  const Mat g = gram_of(t);
  CHECK(t.det() == BigInt(1) << 36);
  const Mat g8 = g * Rat(1, 8);
  CHECK(g8.is_integral());
  CHECK(g8.det() == 1);
  for (size_t i = 0; i < 24; ++i) CHECK(g8(i, i).get_num() % 2 == 0);
}

TEST_CASE("e8 catalog gram is even unimodular") {
  const Mat g = gram_of(e8_generator());
  CHECK(g.det() == 1);
  CHECK(g.is_integral());
  for (size_t i = 0; i < 8; ++i) CHECK(g(i, i).get_num() % 2 == 0);
}
