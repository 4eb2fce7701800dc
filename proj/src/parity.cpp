#include "heptaq/parity.hpp"

#include <stdexcept>

#include "heptaq/theta.hpp"
#include "heptaq/vector_partition.hpp"

namespace heptaq {
namespace {

Integer alternating_sum(const Distribution& dist) {
  Integer total = 0;
  for (const auto& [m, count] : dist) {
    if (m % 2 == 0) {
      total += count;
    } else {
      total -= count;
    }
  }
  return total;
}

}  // namespace

CrossChecked parity_weighted(int t, int n, int enumeration_limit) {
  if (n < 0) throw std::invalid_argument("parity_weighted: n must be nonnegative");
  CrossChecked out;
  out.value = build("c_t", {.t = t}, static_cast<std::size_t>(n) + 1)[static_cast<std::size_t>(n)];
  if (n <= enumeration_limit) {
    out.enumerated = alternating_sum(statistic_distribution(Family::V, t, n));
  }
  return out;
}

CrossChecked vector_crank_parity(int n, int enumeration_limit) {
  if (n < 0) throw std::invalid_argument("vector_crank_parity: n must be nonnegative");
  CrossChecked out;
  out.value = build("d", {}, static_cast<std::size_t>(n) + 1)[static_cast<std::size_t>(n)];
  out.closed_form = pentagonal_d(n);
  if (n <= enumeration_limit) {
    out.enumerated = alternating_sum(statistic_distribution(Family::W2, 2, n));
  }
  return out;
}

Integer pentagonal_d(long n) {
  if (n < 0) return 0;
  for (long m = 0; m * (3 * m - 1) <= n; ++m) {
    if (m * (3 * m + 1) == n || m * (3 * m - 1) == n) return m % 2 ? -1 : 1;
  }
  return 0;
}

}  // namespace heptaq
