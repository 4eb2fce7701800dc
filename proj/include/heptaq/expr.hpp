#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "heptaq/product_spec.hpp"
#include "heptaq/qseries.hpp"
#include "heptaq/theta.hpp"

namespace heptaq {

/// Immutable expression over truncated series. Evaluation works top-down:
/// each node asks its children for exactly the precision it needs, so a
/// dissection or substitution never reads an unknown coefficient.
class Expr {
 public:
  static Expr product(ProductSpec spec);
  static Expr named(std::string name, SeriesParams params = {});
  /// Closed-sum expansion of a named series (see build_closed_form).
  static Expr closed_form(std::string name, SeriesParams params = {});
  static Expr constant(long value);
  static Expr zero() { return constant(0); }

  Expr substituted(std::size_t k) const;                // e(q^k)
  Expr dissected(std::size_t m, std::size_t r) const;   // sum e[mn+r] q^n
  Expr shifted(std::size_t k) const;                    // q^k e
  Expr scaled(long factor) const;
  Expr pow(long exponent) const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);

  /// Exactly `precision` coefficients.
  QSeries evaluate(std::size_t precision) const;

  std::string describe() const;

  struct Node;

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace heptaq
