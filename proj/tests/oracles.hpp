// Test-only oracles, independent of the implementation paths they check.
#pragma once

#include <random>

#include "latproj/matrix.hpp"

namespace latproj::oracles {

/// Minimum of zᵀ·g·z over the integer box |zᵢ| ≤ box, z ≠ 0, by full
/// enumeration.
inline Rat brute_min_form(const Mat& g, long box) {
  const size_t d = g.rows();
  std::vector<long> z(d, -box);
  Rat best;
  bool first = true;
  while (true) {
    bool zero = true;
    for (long zi : z)
      if (zi != 0) zero = false;
    if (!zero) {
      Rat q = 0;
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
          if (z[i] != 0 && z[j] != 0) q += Rat(z[i]) * g(i, j) * Rat(z[j]);
      if (first || q < best) {
        best = q;
        first = false;
      }
    }
    size_t k = 0;
    while (k < d && z[k] == box) z[k++] = -box;
    if (k == d) break;
    ++z[k];
  }
  return best;
}

/// Random integer SPD matrix A = B·Bᵀ with |B entries| ≤ amplitude.
inline Mat random_spd(std::mt19937& rng, size_t dim, long amplitude) {
  std::uniform_int_distribution<long> dist(-amplitude, amplitude);
  while (true) {
    Mat b(dim, dim);
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j) b(i, j) = dist(rng);
    Mat a = gram_of(b);
    if (a.det() != 0) return a;
  }
}

/// Random unimodular matrix: a short product of elementary row operations
/// and transpositions.
inline Mat random_unimodular(std::mt19937& rng, size_t dim, int steps = 8) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<size_t> pick(0, dim - 1);
  Mat u = Mat::identity(dim);
  for (int s = 0; s < steps; ++s) {
    size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const long c = coef(rng);
    for (size_t k = 0; k < dim; ++k) u(i, k) += Rat(c) * u(j, k);
  }
  return u;
}

}  // namespace latproj::oracles
