#include "latproj/families.hpp"

#include <array>

#include "latproj/catalog.hpp"

namespace latproj {

AxisVector family_dm(size_t m, const BigInt& t) {
  if (m < 3) throw ShapeError("family dm needs m >= 3");
  if (t < 1) throw ShapeError("family dm needs t >= 1");
  const BigInt w = 2 * t;
  ZVec vhat;
  vhat.reserve(m);
  BigInt p = 1;
  for (size_t i = 0; i + 1 < m; ++i) {
    p *= w;  // (2t)^{i+1}
    vhat.push_back(p);
  }
  // t·((2t)^m − 1)/(2t − 1): exact geometric series.
  vhat.push_back(t * ((p * w - 1) / (w - 1)));
  return AxisVector::from_vhat(std::move(vhat));
}

AxisVector family_fcc(const BigInt& t) { return family_dm(3, t); }

AxisVector family_fcc_fast(const BigInt& w) {
  if (w < 1) throw ShapeError("family fcc-fast needs w >= 1");
  const BigInt w2 = w * w;
  return AxisVector::from_vhat({2 * w2 - w + 1, 2 * w2 + w + 1, 4 * w2 * w + 3 * w});
}

AxisVector family_e8(const BigInt& w) {
  if (w < 2 || w % 2 != 0) throw ShapeError("family e8 needs even w >= 2");
  ZVec v(8);
  v[0] = 2 * w;
  v[1] = 2 * w * w - w;
  for (size_t i = 2; i < 7; ++i) v[i] = w * (v[i - 1] - v[i - 2]);
  BigInt s = 1;
  for (size_t i = 0; i < 7; ++i) s += v[i];
  v[7] = (w / 2) * s;
  return AxisVector::from_vhat(std::move(v));
}

AxisVector family_leech(const BigInt& w) {
  if (w < 1) throw ShapeError("family leech needs w >= 1");
  static const std::array<std::vector<int>, 25> sets = [] {
    std::array<std::vector<int>, 25> s;
    s[8] = {1, 2, 3, 4, 5, 6, 7};
    s[12] = {1, 2, 3, 8, 9, 10, 11};
    s[14] = {1, 4, 5, 8, 9, 12, 13};
    s[15] = {2, 4, 6, 8, 10, 12, 14};
    s[16] = {3, 4, 7, 8, 11, 12, 15};
    s[18] = {2, 4, 7, 8, 9, 16, 17};
    s[19] = {3, 4, 5, 8, 10, 16, 18};
    s[20] = {1, 4, 6, 8, 11, 16, 19};
    s[21] = {1, 2, 3, 4, 8, 12, 16, 20};
    s[22] = {8, 9, 12, 13, 16, 17, 20, 21};
    s[23] = {8, 10, 12, 14, 16, 18, 20, 22};
    return s;
  }();
  // The three coefficient groups are interleaved in index order, so evaluate
  // in ascending i (entries only ever reference smaller indices).
  ZVec u(25);  // 1-based for readability
  u[1] = 8 * w;
  for (int i = 2; i <= 23; ++i) {
    const bool chain = (i <= 7) || i == 9 || i == 10 || i == 11 || i == 13 || i == 17;
    if (chain) {
      u[i] = 4 * w * (u[i - 1] + 1);
    } else {
      BigInt s = 0;
      for (int j : sets[i]) s += u[j];
      const bool plus_one = !(i == 21 || i == 22 || i == 23);
      u[i] = 2 * w * (plus_one ? s + 1 : s);
    }
  }
  BigInt total = 0;
  for (int i = 1; i <= 23; ++i) total += u[i];
  u[24] = w * (total - 3);
  return AxisVector::from_vhat(ZVec(u.begin() + 1, u.end()));
}

AxisVector family_51(const BigInt& w) {
  if (w < 1) throw ShapeError("family 5_1 needs w >= 1");
  auto scaled_sqrt = [&](const Rat& radicand) {
    return certified_floor(
        [&](unsigned prec) { return Real(w, prec) * Real::sqrt(Real(radicand, prec)); });
  };
  const BigInt a = scaled_sqrt(3);             // ⌊√3·w⌋
  const BigInt b = scaled_sqrt(Rat(5, 3));     // ⌊√(5/3)·w⌋
  const BigInt c = scaled_sqrt(Rat(1, 3));     // ⌊w/√3⌋
  return AxisVector::from_vhat({a, a * b + c});
}

GramMatrix family_target_gram(Family f, size_t m) {
  switch (f) {
    case Family::Dm:
      return GramMatrix(gram_of(dm_star_generator(m)));
    case Family::Fcc:
      return GramMatrix(gram_of(dm_star_generator(3)));
    case Family::FccFast:
      return GramMatrix(Mat{{3, 1, -1}, {1, 3, 1}, {-1, 1, 3}});
    case Family::E8:
      return GramMatrix(gram_of(e8_generator()));
    case Family::Leech:
      return GramMatrix(gram_of(leech_generator()));
    case Family::F51:
      return GramMatrix(Mat{{3, 1}, {1, 2}});
  }
  throw ShapeError("unknown family");
}

BigInt family_height(Family f, const FamilyParams& p) {
  if (f == Family::Dm || f == Family::Fcc) return 2 * p.param;
  return p.param;
}

LiftResult family_lift(Family f, const FamilyParams& p) {
  switch (f) {
    case Family::Dm:
      return lift_from_generator(dm_star_generator(p.m), 2 * p.param);
    case Family::Fcc:
      return lift_from_generator(dm_star_generator(3), 2 * p.param);
    case Family::E8:
      if (p.param < 2 || p.param % 2 != 0) throw ShapeError("family e8 needs even w >= 2");
      return lift_from_generator(e8_generator(), p.param);
    case Family::Leech:
      return lift_from_generator(leech_generator(), p.param);
    case Family::F51:
      return construct_v(family_target_gram(Family::F51), p.param);
    case Family::FccFast: {
      const BigInt& w = p.param;
      if (w < 1) throw ShapeError("family fcc-fast needs w >= 1");
      // Lift of the symmetric cube-corner basis with a correction block that
      // cancels every O(w) term in the Gram.
      Mat lifted(3, 4);
      lifted(0, 0) = Rat(w - 1);
      lifted(0, 1) = Rat(w + 1);
      lifted(0, 2) = Rat(-w);
      lifted(1, 0) = Rat(-w - 1);
      lifted(1, 1) = Rat(w);
      lifted(1, 2) = Rat(-w + 1);
      lifted(2, 0) = Rat(-w);
      lifted(2, 1) = Rat(-w);
      lifted(2, 2) = Rat(-w);
      lifted(2, 3) = 1;
      GramMatrix target = family_target_gram(Family::FccFast);
      Mat h = lifted.col_slice(1, 3);
      const Rat dh = h.det();
      if (dh != 1 && dh != -1) throw ShapeError("fcc-fast transform not unimodular");
      const Mat hinv = h.inverse();
      ZVec vhat(3);
      for (size_t i = 0; i < 3; ++i) {
        Rat s = 0;
        for (size_t j = 0; j < 3; ++j) s += hinv(i, j) * lifted(j, 0);
        s = -s;
        vhat[i] = s.get_num();
      }
      Mat gram = gram_of(lifted);
      Mat residual = gram - target.mat() * Rat(w * w);
      return {.target = std::move(target),
              .w = w,
              .lifted = std::move(lifted),
              .basis_change = std::move(h),
              .v = AxisVector::from_vhat(std::move(vhat)),
              .lifted_gram = std::move(gram),
              .residual = std::move(residual),
              .mode = LiftMode::Dual,
              .primal_basis_gram = {},
              .primal_scale = {},
              .primal_residual = {}};
    }
  }
  throw ShapeError("unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "dm") return Family::Dm;
  if (name == "fcc") return Family::Fcc;
  if (name == "fcc-fast") return Family::FccFast;
  if (name == "e8") return Family::E8;
  if (name == "leech") return Family::Leech;
  if (name == "5_1") return Family::F51;
  throw ShapeError("unknown family: '" + name + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::Dm: return "dm";
    case Family::Fcc: return "fcc";
    case Family::FccFast: return "fcc-fast";
    case Family::E8: return "e8";
    case Family::Leech: return "leech";
    case Family::F51: return "5_1";
  }
  return "?";
}

}  // namespace latproj
