#include "latproj/reduction.hpp"

namespace latproj {

namespace {

// Depth-first enumeration over the quadratic form Σ dᵢ·yᵢ² from the exact
// LDLᵀ completion, yᵢ = zᵢ + Σ_{j>i} L̂_{j,i}·z_j.  All interval bounds are
// exact (integer square roots), so the reported minimum is certified.
class Enumerator {
 public:
  Enumerator(const LdltResult& f, Rat bound, ZVec seed)
      : n_(f.diag.size()), l_(f.unit_lower), d_(f.diag), best_(std::move(bound)),
        best_z_(std::move(seed)), z_(n_, 0) {}

  void run() { descend(n_, 0); }

  Rat best() const { return best_; }
  const ZVec& witness() const { return best_z_; }

 private:
  // `level` counts how many coordinates remain unset (z_{level-1} is next).
  void descend(size_t level, const Rat& partial) {
    const size_t i = level - 1;
    Rat s = 0;
    for (size_t j = i + 1; j < n_; ++j)
      if (z_[j] != 0) s += l_(j, i) * Rat(z_[j]);
    const Rat budget = (best_ - partial) / d_[i];
    if (budget < 0) return;
    bool zeros_above = true;
    for (size_t j = i + 1; j < n_; ++j)
      if (z_[j] != 0) zeros_above = false;
    BigInt zmax = floor_sqrt_plus(budget, -s);
    BigInt zmin = -floor_sqrt_plus(budget, s);
    if (zeros_above && zmin < 0) zmin = 0;  // ±z symmetry
    for (BigInt zi = zmin; zi <= zmax; ++zi) {
      const Rat y = Rat(zi) + s;
      const Rat q = partial + d_[i] * y * y;
      if (q > best_) continue;
      z_[i] = zi;
      if (i == 0) {
        if (!(zeros_above && zi == 0) && q < best_) {
          best_ = q;
          best_z_ = z_;
        }
      } else {
        descend(i, q);
      }
      z_[i] = 0;
    }
  }

  size_t n_;
  const Mat& l_;
  const std::vector<Rat>& d_;
  Rat best_;
  ZVec best_z_;
  ZVec z_;
};

}  // namespace

SvpResult shortest_vector(const GramMatrix& a, const SvpOptions& opts) {
  const size_t d = a.dim();
  if (d > opts.max_dim)
    throw EnumerationRefusedError("enumeration refused: dimension " + std::to_string(d) +
                                  " above cap " + std::to_string(opts.max_dim));
  if (d == 1) return {a(0, 0), {BigInt(1)}};

  // Clear denominators so the enumeration runs on an integer form.
  BigInt den = 1;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a(i, j).get_den_mpz_t());
  const Mat scaled = a.mat() * Rat(den);

  const ReducedBasis red = lll_reduce(GramMatrix::trusted(scaled));
  const LdltResult f = ldlt(red.gram);

  size_t arg = 0;
  Rat bound = red.gram(0, 0);
  for (size_t i = 1; i < d; ++i)
    if (red.gram(i, i) < bound) {
      bound = red.gram(i, i);
      arg = i;
    }
  ZVec seed(d, 0);
  seed[arg] = 1;

  Enumerator e(f, bound, std::move(seed));
  e.run();

  // Map the witness through the reduction transform back to the input basis.
  ZVec z(d, 0);
  for (size_t j = 0; j < d; ++j) {
    Rat s = 0;
    for (size_t i = 0; i < d; ++i)
      if (e.witness()[i] != 0) s += Rat(e.witness()[i]) * red.transform(i, j);
    z[j] = s.get_num();
  }
  return {e.best() / Rat(den), std::move(z)};
}

DensityReport center_density(const GramMatrix& a, const SvpOptions& opts) {
  const SvpResult svp = shortest_vector(a, opts);
  const Rat det = a.mat().det();
  const size_t d = a.dim();
  const unsigned prec = 128;
  const Real lambda = Real::sqrt(Real(svp.min_norm, prec));
  const Real half(Rat(1, 2), prec);
  const Real cd = Real::pow_ui(lambda * half, d) / Real::sqrt(Real(det, prec));
  Real ball = Real::pow_ui(Real::pi(prec), d / 2);
  if (d % 2 == 1) ball = ball * Real::sqrt(Real::pi(prec));
  ball = ball / Real::gamma(Real(make_rat(d + 2, 2), prec));
  return {svp.min_norm, det, cd.to_double(), (cd * ball).to_double()};
}

}  // namespace latproj
