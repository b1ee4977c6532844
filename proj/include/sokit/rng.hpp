// Copyright (c) 2026 the sokit authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "sokit/dense.hpp"

namespace sokit {

/// 64-bit linear congruential generator with Knuth's MMIX constants
/// (a = 6364136223846793005, c = 1442695040888963407). Chosen so that seeded
/// instances reproduce bit-for-bit across platforms and languages.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::uint64_t state_;
};

inline Matrix<double> random_matrix(Lcg64& rng, index_t rows, index_t cols,
                                    double lo = -1.0, double hi = 1.0) {
  Matrix<double> a(rows, cols);
  // Row-major fill order is part of the documented generator contract.
  for (index_t i = 0; i < rows; ++i)
    for (index_t j = 0; j < cols; ++j) a(i, j) = rng.uniform(lo, hi);
  return a;
}

inline Vector<double> random_vector(Lcg64& rng, index_t n, double lo = -1.0,
                                    double hi = 1.0) {
  Vector<double> v(n);
  for (index_t i = 0; i < n; ++i) v[i] = rng.uniform(lo, hi);
  return v;
}

}  // namespace sokit
