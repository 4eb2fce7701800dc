#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "heptaq/product_spec.hpp"
#include "heptaq/qseries.hpp"

namespace heptaq {

/// Truncated series in q whose coefficients are Laurent polynomials in z.
///
/// Each q-degree stores the window of z-exponents between its lowest and
/// highest nonzero coefficient; exponents outside the window read as zero.
class BivariateSeries {
 public:
  BivariateSeries() = default;
  explicit BivariateSeries(std::size_t precision) : rows_(precision) {}

  /// Builds from sparse maps, one per q-degree. Zero entries are dropped.
  static BivariateSeries from_terms(const std::vector<std::map<long, Integer>>& terms);

  std::size_t precision() const noexcept { return rows_.size(); }

  /// Coefficient of z^m q^n; n must be below the precision.
  Integer coefficient(std::size_t n, long m) const;

  /// Nonzero (z-exponent, coefficient) pairs at q-degree n, ascending in m.
  std::vector<std::pair<long, Integer>> terms(std::size_t n) const;

  /// Number of nonzero entries at q-degree n.
  std::size_t term_count(std::size_t n) const;

  /// Replaces the row at q-degree n with a dense window starting at `low`.
  void set_row(std::size_t n, long low, std::vector<Integer> coeffs);

  /// z = 1 and z = -1 specializations.
  QSeries at_one() const;
  QSeries at_minus_one() const;

  /// True when every q-degree is invariant under m -> -m.
  bool is_symmetric() const;

  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b);

 private:
  struct Row {
    long low = 0;
    std::vector<Integer> coeffs;  // trimmed: front and back nonzero
  };
  std::vector<Row> rows_;
};

/// Exact expansion of a spec that may carry z-exponents.
BivariateSeries expand_bivariate(const ProductSpec& spec, std::size_t precision);

/// Bucket k holds, at each q-degree, the sum of coefficients whose
/// z-exponent is congruent to k modulo m.
std::vector<QSeries> residue_buckets(const BivariateSeries& b, std::size_t m);

}  // namespace heptaq
