#include "latproj/lift.hpp"

namespace latproj {

namespace {

Mat w_sq_times(const GramMatrix& g, const BigInt& w) { return g.mat() * Rat(w * w); }

LiftResult assemble_dual(GramMatrix target, const BigInt& w, Mat lifted) {
  auto [v, h] = row_reduce_lift(lifted);
  Mat gram = gram_of(lifted);
  Mat residual = gram - w_sq_times(target, w);
  return {.target = std::move(target),
          .w = w,
          .lifted = std::move(lifted),
          .basis_change = std::move(h),
          .v = std::move(v),
          .lifted_gram = std::move(gram),
          .residual = std::move(residual),
          .mode = LiftMode::Dual,
          .primal_basis_gram = {},
          .primal_scale = {},
          .primal_residual = {}};
}

}  // namespace

Rat LiftResult::scaled_residual_norm() const {
  return residual.max_abs() / Rat(w * w);
}

Mat lift_matrix(const Mat& lower, const BigInt& w) {
  if (!lower.is_square()) throw ShapeError("lift_matrix requires a square factor");
  const size_t d = lower.rows();
  if (w < 1) throw ShapeError("lift height must be at least 1");
  for (size_t i = 0; i < d; ++i) {
    if (lower(i, i) <= 0) throw ShapeError("factor diagonal must be positive");
    for (size_t j = i + 1; j < d; ++j)
      if (lower(i, j) != 0) throw ShapeError("factor must be lower triangular");
  }
  Mat out(d, d + 1);
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j <= i; ++j) out(i, j) = Rat(-floor_rat(Rat(w) * lower(i, j)));
    out(i, i + 1) = 1;
  }
  return out;
}

Mat lift_matrix(const std::vector<QuadEntry>& lower, size_t dim, const BigInt& w,
                unsigned initial_prec, unsigned prec_cap) {
  if (lower.size() != dim * (dim + 1) / 2) throw ShapeError("quadratic factor has wrong length");
  if (w < 1) throw ShapeError("lift height must be at least 1");
  Mat out(dim, dim + 1);
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j <= i; ++j)
      out(i, j) = Rat(-lower[i * (i + 1) / 2 + j].floor_times(w, initial_prec, prec_cap));
    out(i, i + 1) = 1;
  }
  return out;
}

Mat lift_matrix(const RealMat& lower, const BigInt& w) {
  const size_t d = lower.rows();
  if (w < 1) throw ShapeError("lift height must be at least 1");
  Mat out(d, d + 1);
  const unsigned prec = d ? lower(0, 0).precision() : kDefaultPrec;
  const Real wr(w, prec);
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j <= i; ++j) out(i, j) = Rat(-certified_floor(wr * lower(i, j)));
    out(i, i + 1) = 1;
  }
  return out;
}

std::pair<AxisVector, Mat> row_reduce_lift(const Mat& lifted) {
  const size_t d = lifted.rows();
  if (lifted.cols() != d + 1) throw ShapeError("lifted matrix must be (n-1) x n");
  if (!lifted.is_integral()) throw ShapeError("lifted matrix must be integral");
  Mat h = lifted.col_slice(1, d);
  for (size_t i = 0; i < d; ++i) {
    if (h(i, i) != 1) throw ShapeError("lifted matrix right block missing unit diagonal");
    for (size_t j = i + 1; j < d; ++j)
      if (h(i, j) != 0) throw ShapeError("lifted matrix right block not lower triangular");
  }
  // Solve h·(−v̂ᵀ) = first column by forward substitution in exact integers.
  ZVec vhat(d);
  for (size_t i = 0; i < d; ++i) {
    Rat s = -lifted(i, 0);
    for (size_t j = 0; j < i; ++j) s -= h(i, j) * Rat(vhat[j]);
    vhat[i] = s.get_num();  // denominators are 1 throughout
  }
  return {AxisVector::from_vhat(std::move(vhat)), std::move(h)};
}

LiftResult lift_from_generator(const Mat& generator, const BigInt& w) {
  if (!generator.is_square()) throw ShapeError("generator must be square (full-rank basis)");
  if (w < 1) throw ShapeError("lift height must be at least 1");
  const size_t d = generator.rows();
  Mat lifted(d, d + 1);
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j) lifted(i, j) = Rat(-floor_rat(Rat(w) * generator(i, j)));
    lifted(i, i + 1) += 1;
  }
  Mat h = lifted.col_slice(1, d);
  const Rat dh = h.det();
  if (dh != 1 && dh != -1)
    throw ShapeError("lift transform not unimodular at this height (det " + to_string(dh) + ")");
  // −v̂ᵀ = h⁻¹ · (first column); unimodularity makes the result integral.
  const Mat hinv = h.inverse();
  ZVec vhat(d);
  for (size_t i = 0; i < d; ++i) {
    Rat s = 0;
    for (size_t j = 0; j < d; ++j) s += hinv(i, j) * lifted(j, 0);
    s = -s;
    if (s.get_den() != 1) throw ShapeError("row reduction produced a non-integer axis entry");
    vhat[i] = s.get_num();
  }
  GramMatrix target(gram_of(generator));
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

LiftResult construct_v(const GramMatrix& a, const BigInt& w, LiftMode mode,
                       unsigned initial_prec) {
  if (w < 1) throw ShapeError("lift height must be at least 1");
  if (mode == LiftMode::Dual) {
    const auto chol = cholesky_quadratic(a.mat());
    Mat lifted = lift_matrix(chol, a.dim(), w, initial_prec, kPrecCap);
    return assemble_dual(a, w, std::move(lifted));
  }
  // Primal: lift the ∞-norm-normalized inverse so the projection lattice
  // (the dual of what the lift approximates) converges to A itself.
  const Mat ainv = a.mat().inverse();
  const Rat scale = ainv.max_abs();
  GramMatrix target = GramMatrix::trusted(ainv * (Rat(1) / scale));
  const auto chol = cholesky_quadratic(target.mat());
  Mat lifted = lift_matrix(chol, a.dim(), w, initial_prec, kPrecCap);
  LiftResult r = assemble_dual(std::move(target), w, std::move(lifted));
  r.mode = LiftMode::Primal;
  r.primal_basis_gram = r.lifted_gram.inverse();
  r.primal_scale = Rat(w * w) / scale;
  r.primal_residual = (a.mat() - *r.primal_basis_gram * *r.primal_scale).max_abs();
  return r;
}

}  // namespace latproj
