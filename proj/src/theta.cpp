#include "heptaq/theta.hpp"

#include <algorithm>

namespace heptaq {
namespace {

std::size_t require_positive(const std::optional<long>& value, const char* what,
                             const std::string& name, long fallback = 0) {
  const long v = value.value_or(fallback);
  if (!value && fallback == 0) {
    throw std::invalid_argument("series '" + name + "' needs parameter " + what);
  }
  if (v < 1) {
    throw std::invalid_argument("series '" + name + "': parameter " + what +
                                " must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

// sum of sign(n) * weight(n) * q^{exponent(n)} for a monotone exponent map
template <typename Exponent, typename Coeff>
void accumulate_terms(QSeries& out, long from, Exponent exponent, Coeff coeff) {
  for (long n = from;; ++n) {
    const long e = exponent(n);
    if (e < 0 || static_cast<std::size_t>(e) >= out.precision()) break;
    out[static_cast<std::size_t>(e)] += coeff(n);
  }
}

}  // namespace

const std::vector<std::string>& series_names() {
  static const std::vector<std::string> names = {
      "phi", "phi_neg", "psi", "x", "f", "f_cubed", "w_t", "w_t_def",
      "cphi2", "a", "a1", "a2", "c_t", "d", "p"};
  return names;
}

ProductSpec named_spec(const std::string& name, const SeriesParams& params) {
  if (name == "phi") return eta_quotient({{2, 5}, {1, -2}, {4, -2}});
  if (name == "phi_neg") return eta_quotient({{1, 2}, {2, -1}});
  if (name == "psi") return eta_quotient({{2, 2}, {1, -1}});
  if (name == "x") return pochhammer(1, 2, 1) * pochhammer(3, 6, -3);
  if (name == "f") return f(require_positive(params.k, "k", name, 1));
  if (name == "f_cubed") return f(require_positive(params.k, "k", name, 1), 3);
  if (name == "w_t") {
    const std::size_t t = require_positive(params.t, "t", name);
    return eta_quotient({{2, 5}, {1, -4}}) * f(t, -2);
  }
  if (name == "w_t_def") {
    const std::size_t t = require_positive(params.t, "t", name);
    return f(2) * pochhammer(1, 2, -4) * f(t, -2);
  }
  if (name == "cphi2") return pochhammer(2, 4, 1) * pochhammer(1, 2, -4) * f(4, -1);
  if (name == "a") return eta_quotient({{2, 5}, {1, -4}});
  if (name == "a1") return eta_quotient({{2, 4}, {3, 4}, {6, 1}, {1, -10}});
  if (name == "a2") return eta_quotient({{2, 14}, {1, -4}});
  if (name == "c_t") {
    const std::size_t t = require_positive(params.t, "t", name);
    return f(2) * pochhammer(2, 4, -2) * f(t, -2);
  }
  if (name == "d") return f(2);
  if (name == "p") return f(1, -1);
  throw UnknownSeriesError("unknown series '" + name + "'");
}

QSeries build(const std::string& name, const SeriesParams& params, std::size_t precision) {
  return expand(named_spec(name, params), precision);
}

bool has_closed_form(const std::string& name) {
  static const std::vector<std::string> names = {"phi", "phi_neg", "psi", "f", "f_cubed", "d"};
  return std::find(names.begin(), names.end(), name) != names.end();
}

QSeries build_closed_form(const std::string& name, const SeriesParams& params,
                          std::size_t precision) {
  QSeries out(precision);
  if (name == "phi" || name == "phi_neg") {
    const bool alternate = name == "phi_neg";
    // n = 0 once, then +-n for n >= 1
    if (precision > 0) out[0] = 1;
    accumulate_terms(out, 1, [](long n) { return n * n; },
                     [&](long n) { return Integer(alternate && (n % 2) ? -2 : 2); });
    return out;
  }
  if (name == "psi") {
    accumulate_terms(out, 0, [](long n) { return n * (n + 1) / 2; },
                     [](long) { return Integer(1); });
    return out;
  }
  if (name == "f" || name == "d") {
    const long k = name == "d" ? 2 : static_cast<long>(require_positive(params.k, "k", name, 1));
    // Euler: sum over all integers n of (-1)^n q^{k n(3n+1)/2}
    accumulate_terms(out, 0, [k](long n) { return k * n * (3 * n + 1) / 2; },
                     [](long n) { return Integer(n % 2 ? -1 : 1); });
    accumulate_terms(out, 1, [k](long n) { return k * n * (3 * n - 1) / 2; },
                     [](long n) { return Integer(n % 2 ? -1 : 1); });
    return out;
  }
  if (name == "f_cubed") {
    const long k = static_cast<long>(require_positive(params.k, "k", name, 1));
    // Jacobi: sum_{n>=0} (-1)^n (2n+1) q^{k n(n+1)/2}
    accumulate_terms(out, 0, [k](long n) { return k * n * (n + 1) / 2; },
                     [](long n) { return Integer(n % 2 ? -(2 * n + 1) : 2 * n + 1); });
    return out;
  }
  if (std::find(series_names().begin(), series_names().end(), name) != series_names().end()) {
    throw std::invalid_argument("series '" + name + "' has no closed-sum form");
  }
  throw UnknownSeriesError("unknown series '" + name + "'");
}

std::string series_label(const std::string& name, const SeriesParams& params) {
  std::string label = name;
  if (params.t || params.k) {
    label += '(';
    if (params.t) label += "t=" + std::to_string(*params.t);
    if (params.t && params.k) label += ',';
    if (params.k) label += "k=" + std::to_string(*params.k);
    label += ')';
  }
  return label;
}

}  // namespace heptaq
