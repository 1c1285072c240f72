#pragma once

// Test-only reference computations, deliberately naive and independent of the
// library's series kernels.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "qparity/series.hpp"

namespace qparity::testing {

/// Number of partitions of n whose parts all satisfy `allowed`, each part used at most
/// `max_mult` times (0 = unbounded).
inline std::int64_t count_partitions(std::int64_t n, const std::function<bool(std::int64_t)>& allowed,
                                     std::int64_t max_mult = 0) {
  std::function<std::int64_t(std::int64_t, std::int64_t)> go = [&](std::int64_t rem,
                                                                     std::int64_t largest) {
    if (rem == 0) return std::int64_t{1};
    std::int64_t total = 0;
    for (std::int64_t k = std::min(rem, largest); k >= 1; --k) {
      if (!allowed(k)) continue;
      for (std::int64_t m = 1; m * k <= rem && (max_mult == 0 || m <= max_mult); ++m) {
        total += go(rem - m * k, k - 1);
      }
    }
    return total;
  };
  return go(n, n);
}

/// Plain int64 polynomial product truncated at `order`.
inline std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a,
                                          const std::vector<std::int64_t>& b, std::size_t order) {
  std::vector<std::int64_t> r(order + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline Series random_series(std::mt19937_64& rng, std::size_t order, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> coeff(lo, hi);
  std::vector<Term> terms;
  for (std::size_t i = 0; i <= order; ++i) terms.push_back({i, coeff(rng)});
  return Series::make(order, std::span<const Term>(terms));
}

inline std::vector<std::size_t> as_sizes(const std::vector<std::int64_t>& v) {
  return {v.begin(), v.end()};
}

}  // namespace qparity::testing
