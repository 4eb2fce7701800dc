#pragma once

// Named series: theta functions, eta quotients and the coefficient
// families (w_t, a, a1, a2, c_t, d, p) studied by this library.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heptaq/product_spec.hpp"
#include "heptaq/qseries.hpp"

namespace heptaq {

class UnknownSeriesError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SeriesParams {
  std::optional<long> t = std::nullopt;
  std::optional<long> k = std::nullopt;

  friend bool operator==(const SeriesParams&, const SeriesParams&) = default;
};

/// Every name accepted by build().
const std::vector<std::string>& series_names();

/// Product (eta-quotient) form of a named series.
///
///   phi      f2^5 / (f1^2 f4^2)            psi     f2^2 / f1
///   phi_neg  f1^2 / f2                     x       (q;q^2) / (q^3;q^6)^3
///   f        f_k                           f_cubed f_k^3
///   w_t      f2^5 / (f1^4 f_t^2)           w_t_def (q^2;q^2) / ((q;q^2)^4 f_t^2)
///   cphi2    (q^2;q^4) / ((q;q^2)^4 (q^4;q^4))
///   a        f2^5 / f1^4                   a1      f2^4 f3^4 f6 / f1^10
///   a2       f2^14 / f1^4                  c_t     f2 / ((q^2;q^4)^2 f_t^2)
///   d        f2                            p       1 / f1
ProductSpec named_spec(const std::string& name, const SeriesParams& params = {});

/// Exact expansion of the product form.
QSeries build(const std::string& name, const SeriesParams& params, std::size_t precision);

/// Names with an independent closed-sum expansion: phi, phi_neg, psi,
/// f (pentagonal), f_cubed (Jacobi), d.
bool has_closed_form(const std::string& name);

/// Closed-sum expansion, used to cross-check the product form.
QSeries build_closed_form(const std::string& name, const SeriesParams& params,
                          std::size_t precision);

/// Display string like "w_t(t=4)".
std::string series_label(const std::string& name, const SeriesParams& params);

}  // namespace heptaq
