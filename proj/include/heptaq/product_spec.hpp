#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "heptaq/qseries.hpp"

namespace heptaq {

/// (z^{z_exponent} q^{q_offset}; q^{q_step})_inf ^ exponent, i.e.
/// prod_{n>=0} (1 - z^{z_exponent} q^{q_offset + n*q_step})^exponent.
struct Factor {
  long z_exponent = 0;
  std::size_t q_offset = 1;
  std::size_t q_step = 1;
  long exponent = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// scalar * z^{z_shift} q^{q_shift} * product of factors.
struct ProductSpec {
  std::vector<Factor> factors;
  Integer scalar = 1;
  long z_shift = 0;
  std::size_t q_shift = 0;

  bool is_univariate() const;

  /// Throws std::invalid_argument on a zero offset, step or exponent.
  void validate() const;

  /// Appends the factors of another spec and multiplies scalars/monomials.
  ProductSpec& operator*=(const ProductSpec& other);

  /// Human-readable form such as "f2^5 f1^-4 (q;q^2)^-4".
  std::string describe() const;
};

ProductSpec operator*(ProductSpec a, const ProductSpec& b);

/// (q^k; q^k)_inf, written f_k.
ProductSpec f(std::size_t k, long exponent = 1);

/// Product of f_k^e over (k, e) pairs.
ProductSpec eta_quotient(std::initializer_list<std::pair<std::size_t, long>> powers);

/// (q^offset; q^step)_inf ^ exponent.
ProductSpec pochhammer(std::size_t offset, std::size_t step, long exponent = 1);

/// Exact truncated expansion of a univariate spec to the given precision.
/// Uses the logarithmic-derivative recurrence n a(n) = sum_j L(j) a(n-j),
/// which costs O(N^2) regardless of how many factors the spec has.
QSeries expand(const ProductSpec& spec, std::size_t precision);

}  // namespace heptaq
