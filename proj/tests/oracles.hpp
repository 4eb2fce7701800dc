#pragma once

// Slow reference implementations used only by tests. They share no code
// with the library beyond the Integer type.

#include <cstddef>
#include <map>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Integer = mpz_class;
using Coeffs = std::vector<Integer>;

/// Multiplies `a` in place by (1 - q^m)^e, one linear factor at a time.
inline void apply_factor(Coeffs& a, std::size_t m, long e) {
  const std::size_t n_total = a.size();
  for (long i = 0; i < (e < 0 ? -e : e); ++i) {
    if (e > 0) {
      for (std::size_t n = n_total; n-- > m;) a[n] -= a[n - m];
    } else {
      for (std::size_t n = m; n < n_total; ++n) a[n] += a[n - m];
    }
  }
}

/// prod over (offset, step, exponent) of (q^offset; q^step)^exponent.
struct Factor {
  std::size_t offset, step;
  long exponent;
};

inline Coeffs product(const std::vector<Factor>& factors, std::size_t precision) {
  Coeffs a(precision);
  if (precision) a[0] = 1;
  for (const Factor& f : factors) {
    for (std::size_t m = f.offset; m < precision; m += f.step) apply_factor(a, m, f.exponent);
  }
  return a;
}

/// prod f_k^e.
inline Coeffs eta(const std::vector<std::pair<std::size_t, long>>& powers, std::size_t precision) {
  std::vector<Factor> factors;
  for (auto [k, e] : powers) factors.push_back({k, k, e});
  return product(factors, precision);
}

/// Number of partitions of n into parts from `allowed`, each used at most
/// once when `distinct`.
inline Integer count_partitions(int n, const std::vector<int>& allowed, bool distinct) {
  std::vector<Integer> ways(static_cast<std::size_t>(n) + 1);
  ways[0] = 1;
  for (int part : allowed) {
    if (distinct) {
      for (int s = n; s >= part; --s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
    } else {
      for (int s = part; s <= n; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
    }
  }
  return ways[static_cast<std::size_t>(n)];
}

/// Bivariate polynomial in q (truncated) and z (Laurent), as maps.
using Bivariate = std::vector<std::map<long, Integer>>;

/// Brute-force product of (z^c q^offset; q^step)^e over factors, with
/// inverse factors expanded as geometric series.
struct ZFactor {
  long z;
  std::size_t offset, step;
  long exponent;
};

inline Bivariate bivariate_product(const std::vector<ZFactor>& factors, std::size_t precision) {
  Bivariate a(precision);
  if (precision) a[0][0] = 1;
  auto multiply = [&](long c, std::size_t d, bool inverse) {
    Bivariate out(precision);
    for (std::size_t n = 0; n < precision; ++n) {
      for (const auto& [m, v] : a[n]) {
        if (!inverse) {
          out[n][m] += v;
          if (n + d < precision) out[n + d][m + c] -= v;
        } else {
          long power = 0;
          for (std::size_t k = n; k < precision; k += d, ++power) out[k][m + power * c] += v;
        }
      }
    }
    for (auto& row : out) std::erase_if(row, [](const auto& e) { return sgn(e.second) == 0; });
    a = std::move(out);
  };
  for (const ZFactor& f : factors) {
    for (std::size_t d = f.offset; d < precision; d += f.step) {
      for (long i = 0; i < (f.exponent < 0 ? -f.exponent : f.exponent); ++i) multiply(f.z, d, f.exponent < 0);
    }
  }
  return a;
}

inline std::mt19937_64 rng(unsigned seed) { return std::mt19937_64(seed); }

inline long uniform(std::mt19937_64& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

}  // namespace oracle
