#pragma once

// Counts weighted by the parity of the statistic:
//   c_t(n) = sum_m (-1)^m N_{V_t}(m, n),  generating function f2 / ((q^2;q^4)^2 f_t^2)
//   d(n)   = sum_m (-1)^m M*(m, n),       generating function f2

#include <cstddef>
#include <optional>

#include "heptaq/qseries.hpp"

namespace heptaq {

/// One value computed along several independent routes.
struct CrossChecked {
  Integer value;                       // generating-function route
  std::optional<Integer> enumerated;   // definition-level enumeration
  std::optional<Integer> closed_form;  // explicit formula, where one exists

  bool consistent() const {
    return (!enumerated || *enumerated == value) && (!closed_form || *closed_form == value);
  }
};

/// c_t(n); enumeration is added when n <= enumeration_limit.
CrossChecked parity_weighted(int t, int n, int enumeration_limit = 10);

/// d(n); always carries the pentagonal closed form, and enumeration when
/// n <= enumeration_limit.
CrossChecked vector_crank_parity(int n, int enumeration_limit = 10);

/// (-1)^m if n = m(3m +- 1) for some m >= 0, else 0.
Integer pentagonal_d(long n);

}  // namespace heptaq
