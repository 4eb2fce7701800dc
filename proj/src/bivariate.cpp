#include "heptaq/bivariate.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace heptaq {

BivariateSeries BivariateSeries::from_terms(const std::vector<std::map<long, Integer>>& terms) {
  BivariateSeries out(terms.size());
  for (std::size_t n = 0; n < terms.size(); ++n) {
    const auto& row = terms[n];
    if (row.empty()) continue;
    const long low = row.begin()->first;
    const long high = row.rbegin()->first;
    std::vector<Integer> coeffs(static_cast<std::size_t>(high - low + 1));
    for (const auto& [m, c] : row) coeffs[static_cast<std::size_t>(m - low)] = c;
    out.set_row(n, low, std::move(coeffs));
  }
  return out;
}

void BivariateSeries::set_row(std::size_t n, long low, std::vector<Integer> coeffs) {
  if (n >= rows_.size()) throw PrecisionError("set_row beyond precision");
  std::size_t begin = 0;
  std::size_t end = coeffs.size();
  while (begin < end && sgn(coeffs[begin]) == 0) ++begin;
  while (end > begin && sgn(coeffs[end - 1]) == 0) --end;
  Row row;
  row.low = low + static_cast<long>(begin);
  row.coeffs.assign(std::make_move_iterator(coeffs.begin() + static_cast<std::ptrdiff_t>(begin)),
                    std::make_move_iterator(coeffs.begin() + static_cast<std::ptrdiff_t>(end)));
  rows_[n] = std::move(row);
}

Integer BivariateSeries::coefficient(std::size_t n, long m) const {
  if (n >= rows_.size()) {
    throw PrecisionError("q-degree " + std::to_string(n) + " is beyond precision " +
                         std::to_string(rows_.size()));
  }
  const Row& row = rows_[n];
  if (m < row.low || m >= row.low + static_cast<long>(row.coeffs.size())) return 0;
  return row.coeffs[static_cast<std::size_t>(m - row.low)];
}

std::vector<std::pair<long, Integer>> BivariateSeries::terms(std::size_t n) const {
  std::vector<std::pair<long, Integer>> out;
  const Row& row = rows_.at(n);
  for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
    if (sgn(row.coeffs[i]) != 0) out.emplace_back(row.low + static_cast<long>(i), row.coeffs[i]);
  }
  return out;
}

std::size_t BivariateSeries::term_count(std::size_t n) const {
  const Row& row = rows_.at(n);
  return static_cast<std::size_t>(std::count_if(row.coeffs.begin(), row.coeffs.end(),
                                                [](const Integer& c) { return sgn(c) != 0; }));
}

QSeries BivariateSeries::at_one() const {
  QSeries out(rows_.size());
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    for (const Integer& c : rows_[n].coeffs) out[n] += c;
  }
  return out;
}

QSeries BivariateSeries::at_minus_one() const {
  QSeries out(rows_.size());
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    const Row& row = rows_[n];
    for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
      const long m = row.low + static_cast<long>(i);
      if (m % 2 == 0) {
        out[n] += row.coeffs[i];
      } else {
        out[n] -= row.coeffs[i];
      }
    }
  }
  return out;
}

bool BivariateSeries::is_symmetric() const {
  for (const Row& row : rows_) {
    if (row.coeffs.empty()) continue;
    const long high = row.low + static_cast<long>(row.coeffs.size()) - 1;
    if (high != -row.low) return false;
    if (!std::equal(row.coeffs.begin(), row.coeffs.end(), row.coeffs.rbegin())) return false;
  }
  return true;
}

bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
  if (a.rows_.size() != b.rows_.size()) return false;
  for (std::size_t n = 0; n < a.rows_.size(); ++n) {
    const auto& ra = a.rows_[n];
    const auto& rb = b.rows_[n];
    if (ra.coeffs.empty() && rb.coeffs.empty()) continue;
    if (ra.low != rb.low || ra.coeffs != rb.coeffs) return false;
  }
  return true;
}

BivariateSeries expand_bivariate(const ProductSpec& spec, std::size_t precision) {
  spec.validate();
  BivariateSeries out(precision);
  if (precision <= spec.q_shift) return out;
  const std::size_t n_inner = precision - spec.q_shift;

  // |z-degree| at q-degree n is at most floor(n * max |c|/a) over factors.
  auto bound = [&](std::size_t n) {
    long z = 0;
    for (const Factor& fc : spec.factors) {
      z = std::max(z, static_cast<long>(n) * std::labs(fc.z_exponent) / static_cast<long>(fc.q_offset));
    }
    return z;
  };
  const long zmax = bound(n_inner - 1);
  const auto width = static_cast<std::size_t>(2 * zmax + 1);

  std::vector<std::vector<Integer>> grid(n_inner, std::vector<Integer>(width));
  std::vector<long> lo(n_inner, 1);
  std::vector<long> hi(n_inner, 0);
  grid[0][static_cast<std::size_t>(zmax)] = 1;
  lo[0] = 0;
  hi[0] = 0;

  auto apply = [&](std::size_t n, std::size_t d, long c, bool divide) {
    const std::size_t src = n - d;
    if (lo[src] > hi[src]) return;
    auto& target = grid[n];
    const auto& source = grid[src];
    for (long m = lo[src]; m <= hi[src]; ++m) {
      const Integer& value = source[static_cast<std::size_t>(m + zmax)];
      if (sgn(value) == 0) continue;
      Integer& cell = target[static_cast<std::size_t>(m + c + zmax)];
      if (divide) {
        cell += value;
      } else {
        cell -= value;
      }
    }
    if (lo[n] > hi[n]) {
      lo[n] = lo[src] + c;
      hi[n] = hi[src] + c;
    } else {
      lo[n] = std::min(lo[n], lo[src] + c);
      hi[n] = std::max(hi[n], hi[src] + c);
    }
  };

  for (const Factor& fc : spec.factors) {
    const long reps = std::labs(fc.exponent);
    const bool divide = fc.exponent < 0;
    for (long rep = 0; rep < reps; ++rep) {
      for (std::size_t d = fc.q_offset; d < n_inner; d += fc.q_step) {
        if (divide) {
          for (std::size_t n = d; n < n_inner; ++n) apply(n, d, fc.z_exponent, true);
        } else {
          for (std::size_t n = n_inner; n-- > d;) apply(n, d, fc.z_exponent, false);
        }
      }
    }
  }

  for (std::size_t n = 0; n < n_inner; ++n) {
    if (lo[n] > hi[n]) continue;
    std::vector<Integer> coeffs;
    coeffs.reserve(static_cast<std::size_t>(hi[n] - lo[n] + 1));
    for (long m = lo[n]; m <= hi[n]; ++m) {
      coeffs.push_back(grid[n][static_cast<std::size_t>(m + zmax)] * spec.scalar);
    }
    out.set_row(n + spec.q_shift, lo[n] + spec.z_shift, std::move(coeffs));
  }
  return out;
}

std::vector<QSeries> residue_buckets(const BivariateSeries& b, std::size_t m) {
  if (m == 0) throw std::invalid_argument("residue_buckets: modulus must be positive");
  std::vector<QSeries> buckets(m, QSeries(b.precision()));
  const auto mod = static_cast<long>(m);
  for (std::size_t n = 0; n < b.precision(); ++n) {
    for (const auto& [exponent, c] : b.terms(n)) {
      const long k = ((exponent % mod) + mod) % mod;
      buckets[static_cast<std::size_t>(k)][n] += c;
    }
  }
  return buckets;
}

}  // namespace heptaq
