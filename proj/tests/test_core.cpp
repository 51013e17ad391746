#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latproj/factor.hpp"
#include "latproj/matrix.hpp"
#include "latproj/real.hpp"
#include "oracles.hpp"

using namespace latproj;

TEST_CASE("rational floors and parsing") {
  CHECK(floor_rat(Rat(7, 2)) == 3);
  CHECK(floor_rat(Rat(-7, 2)) == -4);
  CHECK(ceil_rat(Rat(-7, 2)) == -3);
  CHECK(round_rat(Rat(5, 2)) == 3);
  CHECK(round_rat(Rat(-5, 2)) == -2);
  CHECK(parse_rat("22/7") == Rat(22, 7));
  CHECK(parse_rat("-5") == Rat(-5));
  CHECK(to_string(make_rat(4, 8)) == "1/2");
  CHECK_THROWS_AS(parse_rat("nonsense"), ShapeError);
  CHECK_THROWS_AS(parse_rat("1/0"), ShapeError);
}

TEST_CASE("exact quadratic floors") {
  // ⌊w√d⌋ by integer square roots; reference values are plain arithmetic.
  CHECK(floor_quadratic(10, 3) == 17);
  CHECK(floor_quadratic(10, Rat(5, 3)) == 12);
  CHECK(floor_quadratic(10, Rat(1, 3)) == 5);
  CHECK(floor_quadratic(100, 3) == 173);
  CHECK(floor_quadratic(-10, 3) == -18);
  CHECK(floor_quadratic(-10, 4) == -20);  // rational branch
  CHECK(floor_quadratic(Rat(3, 2), 4) == 3);
  CHECK(floor_quadratic(0, 7) == 0);
  SUBCASE("against a high-precision evaluation") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(1, 500), den(1, 30);
    for (int i = 0; i < 300; ++i) {
      const Rat r = make_rat(num(rng) - 250, den(rng));
      const Rat d = make_rat(num(rng), den(rng));
      const BigInt f = floor_quadratic(r, d);
      const Real x = Real(r, 320) * Real::sqrt(Real(d, 320));
      CHECK(Real(f, 320) <= x);
      CHECK(x < Real(BigInt(f + 1), 320));
    }
  }
}

TEST_CASE("floor_sqrt_plus brackets the true value") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(0, 400), den(1, 20), off(-200, 200);
  for (int i = 0; i < 300; ++i) {
    const Rat d = make_rat(num(rng), den(rng));
    const Rat s = make_rat(off(rng), den(rng));
    const BigInt k = floor_sqrt_plus(d, s);
    CHECK(cmp_rat_vs_sqrt(Rat(k) - s, 1, d) <= 0);       // k ≤ √d + s
    CHECK(cmp_rat_vs_sqrt(Rat(k + 1) - s, 1, d) > 0);    // k+1 > √d + s
  }
}

TEST_CASE("matrix inverse") {
  CHECK(Mat::identity(3).inverse() == Mat::identity(3));
  CHECK((Mat{{2, 0}, {0, 1}}.inverse()) == (Mat{{Rat(1, 2), 0}, {0, 1}}));
  // 2x2 adjugate: inverse of [[5,4],[4,5]] has determinant 9.
  CHECK((Mat{{5, 4}, {4, 5}}.inverse()) ==
        (Mat{{Rat(5, 9), Rat(-4, 9)}, {Rat(-4, 9), Rat(5, 9)}}));
  const Mat singular{{1, 2}, {2, 4}};
  CHECK_THROWS_AS(singular.inverse(), SingularMatrixError);

  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const size_t d = 2 + i % 5;
    const Mat a = oracles::random_spd(rng, d, 4);
    CHECK(a * a.inverse() == Mat::identity(d));
  }
}

TEST_CASE("determinant matches cofactor expansion on small cases") {
  CHECK((Mat{{2, 1}, {1, 2}}.det()) == 3);
  CHECK((Mat{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}.det()) == -3);
  CHECK((Mat{{1, 2}, {2, 4}}.det()) == 0);
}

TEST_CASE("certified floor") {
  SUBCASE("exact rational path") { CHECK(certified_floor(Rat(5)) == 5); }
  SUBCASE("evaluator path separates irrationals") {
    auto val = [](Rat m, Rat d) {
      return [=](unsigned prec) { return Real(m, prec) * Real::sqrt(Real(d, prec)); };
    };
    CHECK(certified_floor(val(10, 3)) == 17);
    CHECK(certified_floor(val(10, Rat(5, 3))) == 12);
    CHECK(certified_floor(val(10, Rat(1, 3))) == 5);
    CHECK(certified_floor(val(Rat(-10), 3)) == -18);
  }
  SUBCASE("integral values exhaust the precision cap") {
    CHECK_THROWS_AS(certified_floor([](unsigned prec) { return Real(5L, prec); }), AmbiguousFloorError);
  }
  SUBCASE("one-shot floor on a separated value") {
    CHECK(certified_floor(Real(Rat(7, 2), 128)) == 3);
    CHECK_THROWS_AS(certified_floor(Real(4L, 128)), AmbiguousFloorError);
  }
  SUBCASE("agrees with exact floors on rationals") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> num(-400, 400), den(1, 40);
    for (int i = 0; i < 200; ++i) {
      const Rat q = make_rat(num(rng), den(rng));
      if (q.get_den() == 1) continue;  // integral inputs are the ambiguous case by design
      CHECK(certified_floor([&](unsigned prec) { return Real(q, prec); }) == floor_rat(q));
    }
  }
}

TEST_CASE("exact ldlt") {
  const Mat a{{3, 1}, {1, 2}};
  const LdltResult f = ldlt(a);
  CHECK(f.diag[0] == 3);
  CHECK(f.diag[1] == Rat(5, 3));
  CHECK(f.unit_lower(1, 0) == Rat(1, 3));
  const Mat indefinite{{1, 2}, {2, 1}};
  CHECK_THROWS_AS(ldlt(indefinite), NotPositiveDefiniteError);

  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    const size_t d = 2 + i % 6;
    const Mat m = oracles::random_spd(rng, d, 3);
    const LdltResult g = ldlt(m);
    Mat diag(d, d);
    for (size_t k = 0; k < d; ++k) diag(k, k) = g.diag[k];
    CHECK(g.unit_lower * diag * g.unit_lower.transpose() == m);
  }
}

TEST_CASE("floating cholesky") {
  const unsigned prec = 256;
  SUBCASE("diagonal case is exact") {
    const RealMat l = cholesky(Mat{{4, 0}, {0, 1}}, prec);
    CHECK(l(0, 0) == Real(2L, prec));
    CHECK(l(1, 1) == Real(1L, prec));
    CHECK(l(1, 0) == Real(0L, prec));
  }
  SUBCASE("the determinant-5 plane lattice factor") {
    const RealMat l = cholesky(Mat{{3, 1}, {1, 2}}, prec);
    const Real eps(Rat(1, BigInt(1) << 200), prec);
    CHECK((l(0, 0) - Real::sqrt(Real(3L, prec))).abs() < eps);
    CHECK((l(1, 0) - Real(1L, prec) / Real::sqrt(Real(3L, prec))).abs() < eps);
    CHECK((l(1, 1) - Real::sqrt(Real(Rat(5, 3), prec))).abs() < eps);
  }
  SUBCASE("hexagonal factor") {
    const RealMat l = cholesky(Mat{{2, 1}, {1, 2}}, prec);
    const Real eps(Rat(1, BigInt(1) << 200), prec);
    CHECK((l(0, 0) - Real::sqrt(Real(2L, prec))).abs() < eps);
    CHECK((l(1, 0) - Real(1L, prec) / Real::sqrt(Real(2L, prec))).abs() < eps);
    CHECK((l(1, 1) - Real::sqrt(Real(Rat(3, 2), prec))).abs() < eps);
  }
  SUBCASE("not positive definite") {
    const Mat indefinite{{1, 2}, {2, 1}};
    CHECK_THROWS_AS(cholesky(indefinite, prec), NotPositiveDefiniteError);
  }
  SUBCASE("reconstruction bound on random SPD matrices") {
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i) {
      const size_t d = 2 + i % 7;  // dims 2..8
      const Mat a = oracles::random_spd(rng, d, 3);
      const RealMat l = cholesky(a, prec);
      const Real bound = Real(a.max_abs(), prec) * Real(Rat(1, BigInt(1) << (prec / 2)), prec);
      CHECK(l.reconstruction_error(a) <= bound);
    }
  }
}

TEST_CASE("quadratic cholesky entries") {
  const Mat a{{3, 1}, {1, 2}};
  const auto entries = cholesky_quadratic(a);
  REQUIRE(entries.size() == 3);
  CHECK_FALSE(entries[0].is_rational());              // √3
  CHECK(entries[0].floor_times(10, 256, 4096) == 17);
  CHECK(entries[1].floor_times(10, 256, 4096) == 5);  // 10/√3
  CHECK(entries[2].floor_times(10, 256, 4096) == 12);
  // Exact entries stay on the rational path even when pivots are irrational.
  const auto diag = cholesky_quadratic(Mat{{3, 0}, {0, 5}});
  CHECK(diag[1].is_rational());
  CHECK(diag[1].exact() == 0);
  CHECK(diag[1].floor_times(1000, 256, 4096) == 0);
}
