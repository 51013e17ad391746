#include "latproj/reduction.hpp"

#include <omp.h>

namespace latproj {

ReducedBasis lagrange_reduce_2d(const GramMatrix& a) {
  if (a.dim() != 2) throw ShapeError("lagrange_reduce_2d requires dimension 2");
  Rat p = a(0, 0), q = a(0, 1), r = a(1, 1);
  Mat u = Mat::identity(2);
  while (true) {
    if (p > r) {
      std::swap(p, r);
      for (size_t j = 0; j < 2; ++j) std::swap(u(0, j), u(1, j));
    }
    const Rat t(round_rat(q / p));
    if (t != 0) {
      // b₂ ← b₂ − t·b₁
      r += t * t * p - 2 * t * q;
      q -= t * p;
      for (size_t j = 0; j < 2; ++j) u(1, j) -= t * u(0, j);
    }
    if (2 * abs(q) <= p && p <= r) break;
  }
  if (q < 0) {
    q = -q;
    for (size_t j = 0; j < 2; ++j) u(1, j) = -u(1, j);
  }
  return {Mat{{p, q}, {q, r}}, std::move(u)};
}

std::optional<SimilarityWitness> similarity_2d(const GramMatrix& a, const GramMatrix& b) {
  const ReducedBasis ra = lagrange_reduce_2d(a);
  const ReducedBasis rb = lagrange_reduce_2d(b);
  const Rat lambda = ra.gram(0, 0) / rb.gram(0, 0);
  if (ra.gram != rb.gram * lambda) return std::nullopt;
  // ra = Ua·a·Uaᵀ = λ·Ub·b·Ubᵀ, hence a = λ·T·b·Tᵀ with T = Ua⁻¹·Ub.
  Mat t = ra.transform.inverse() * rb.transform;
  return SimilarityWitness{lambda, std::move(t)};
}

namespace {

std::optional<Prop1Counterexample> check_pair(long a, long b, const GramMatrix& target) {
  const AxisVector v = AxisVector::from_vhat({BigInt(a), BigInt(b)});
  if (auto w = similarity_2d(dual_gram(v), target))
    return Prop1Counterexample{a, b, std::move(*w)};
  return std::nullopt;
}

}  // namespace

Prop1Report prop1_search_serial(long bound, const GramMatrix& target) {
  if (bound < 1) throw ShapeError("prop1 bound must be at least 1");
  if (target.dim() != 2) throw ShapeError("prop1 target must be 2-dimensional");
  Prop1Report report{0, {}};
  for (long a = 0; a <= bound; ++a)
    for (long b = 0; b <= bound; ++b) {
      ++report.checked;
      if (auto c = check_pair(a, b, target)) report.counterexamples.push_back(std::move(*c));
    }
  return report;
}

Prop1Report prop1_search(long bound, const GramMatrix& target) {
  if (bound < 1) throw ShapeError("prop1 bound must be at least 1");
  if (target.dim() != 2) throw ShapeError("prop1 target must be 2-dimensional");
  const long side = bound + 1;
  std::vector<std::optional<Prop1Counterexample>> hits(side * side);
#pragma omp parallel for schedule(dynamic, 64)
  for (long idx = 0; idx < side * side; ++idx) {
    hits[idx] = check_pair(idx / side, idx % side, target);
  }
  Prop1Report report{static_cast<std::uint64_t>(side) * side, {}};
  for (auto& h : hits)
    if (h) report.counterexamples.push_back(std::move(*h));
  return report;
}

Rat convergence_residual(const GramMatrix& a, const LiftResult& lift, bool use_reduction) {
  if (a.dim() != lift.lifted_gram.rows()) throw ShapeError("residual dimension mismatch");
  const Rat w2(lift.w * lift.w);
  Rat best = (a.mat() * w2 - lift.lifted_gram).max_abs() / w2;
  if (!use_reduction) return best;

  const ReducedBasis red = lll_reduce(GramMatrix::trusted(lift.lifted_gram));
  std::vector<Rat> scales;
  const BigInt w3 = lift.w * lift.w * lift.w;
  for (int k = -8; k <= 8; ++k) scales.push_back((1 + make_rat(k, w3)) / w2);
  // Frobenius least-squares ratio, itself rational.
  Rat num = 0, den = 0;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) {
      num += a(i, j) * red.gram(i, j);
      den += red.gram(i, j) * red.gram(i, j);
    }
  if (den != 0) scales.push_back(num / den);
  for (const Rat& c : scales) {
    const Rat r = (a.mat() - red.gram * c).max_abs();
    if (r < best) best = r;
  }
  return best;
}

}  // namespace latproj
