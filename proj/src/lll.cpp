#include "latproj/reduction.hpp"

namespace latproj {

namespace {

// Exact Gram-matrix LLL with incrementally maintained Gram-Schmidt data.
// The basis is never represented by coordinates: every step is a unimodular
// row operation applied to the Gram and mirrored into the transform.
class GramLll {
 public:
  GramLll(Mat g, const Rat& delta) : n_(g.rows()), g_(std::move(g)), delta_(delta) {
    u_ = Mat::identity(n_);
    mu_ = Mat(n_, n_);
    b_.assign(n_, 0);
  }

  ReducedBasis run() {
    if (n_ == 0) return {g_, u_};
    gso_row(0);
    size_t kmax = 0;
    size_t k = 1;
    while (k < n_) {
      if (k > kmax) {
        kmax = k;
        gso_row(k);
      }
      size_reduce(k, k - 1);
      if (b_[k] < (delta_ - mu_(k, k - 1) * mu_(k, k - 1)) * b_[k - 1]) {
        swap_step(k, kmax);
        k = k > 1 ? k - 1 : 1;
      } else {
        for (size_t l = k - 1; l-- > 0;) size_reduce(k, l);
        ++k;
      }
    }
    return {std::move(g_), std::move(u_)};
  }

 private:
  void gso_row(size_t k) {
    for (size_t j = 0; j < k; ++j) {
      Rat s = g_(k, j);
      for (size_t i = 0; i < j; ++i) s -= mu_(j, i) * mu_(k, i) * b_[i];
      mu_(k, j) = s / b_[j];
    }
    Rat s = g_(k, k);
    for (size_t j = 0; j < k; ++j) s -= mu_(k, j) * mu_(k, j) * b_[j];
    if (s <= 0) throw NotPositiveDefiniteError("LLL input not positive definite");
    b_[k] = s;
  }

  // b_k ← b_k − q·b_l with q = ⌈μ_{k,l}⌋, when |μ| > 1/2.
  void size_reduce(size_t k, size_t l) {
    if (2 * abs(mu_(k, l)) <= 1) return;
    const Rat q(round_rat(mu_(k, l)));
    const Rat gkk = g_(k, k) - 2 * q * g_(k, l) + q * q * g_(l, l);
    for (size_t m = 0; m < n_; ++m) {
      if (m == k) continue;
      g_(k, m) -= q * g_(l, m);
      g_(m, k) = g_(k, m);
    }
    g_(k, k) = gkk;
    for (size_t m = 0; m < n_; ++m) u_(k, m) -= q * u_(l, m);
    mu_(k, l) -= q;
    for (size_t i = 0; i < l; ++i) mu_(k, i) -= q * mu_(l, i);
  }

  // Exchange b_{k−1} and b_k, updating μ and B* in place.
  void swap_step(size_t k, size_t kmax) {
    for (size_t m = 0; m < n_; ++m) {
      std::swap(u_(k - 1, m), u_(k, m));
      std::swap(g_(k - 1, m), g_(k, m));
    }
    for (size_t m = 0; m < n_; ++m) std::swap(g_(m, k - 1), g_(m, k));
    for (size_t j = 0; j + 1 < k; ++j) std::swap(mu_(k, j), mu_(k - 1, j));
    const Rat mu = mu_(k, k - 1);
    const Rat bnew = b_[k] + mu * mu * b_[k - 1];
    mu_(k, k - 1) = mu * b_[k - 1] / bnew;
    b_[k] = b_[k - 1] * b_[k] / bnew;
    b_[k - 1] = bnew;
    for (size_t i = k + 1; i <= kmax; ++i) {
      const Rat t = mu_(i, k);
      mu_(i, k) = mu_(i, k - 1) - mu * t;
      mu_(i, k - 1) = t + mu_(k, k - 1) * mu_(i, k);
    }
  }

  size_t n_;
  Mat g_;
  Rat delta_;
  Mat u_;
  Mat mu_;
  std::vector<Rat> b_;
};

}  // namespace

ReducedBasis lll_reduce(const GramMatrix& a, const Rat& delta) {
  if (delta <= Rat(1, 4) || delta >= 1) throw ShapeError("LLL delta must be in (1/4, 1)");
  return GramLll(a.mat(), delta).run();
}

}  // namespace latproj
