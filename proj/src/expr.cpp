#include "heptaq/expr.hpp"

#include <stdexcept>
#include <variant>

namespace heptaq {

namespace {

struct ProductNode {
  ProductSpec spec;
};
struct NamedNode {
  std::string name;
  SeriesParams params;
};
struct ClosedFormNode {
  std::string name;
  SeriesParams params;
};
struct ConstantNode {
  long value;
};
struct SubstituteNode {
  Expr inner;
  std::size_t k;
};
struct DissectNode {
  Expr inner;
  std::size_t m;
  std::size_t r;
};
struct ShiftNode {
  Expr inner;
  std::size_t k;
};
struct ScaleNode {
  Expr inner;
  long factor;
};
struct PowerNode {
  Expr inner;
  long exponent;
};
struct SumNode {
  Expr lhs;
  Expr rhs;
  bool subtract;
};
struct ProductOfNode {
  Expr lhs;
  Expr rhs;
};

}  // namespace

struct Expr::Node {
  std::variant<ProductNode, NamedNode, ClosedFormNode, ConstantNode, SubstituteNode, DissectNode, ShiftNode,
               ScaleNode, PowerNode, SumNode, ProductOfNode>
      value;
};

namespace {

template <typename T>
std::shared_ptr<const Expr::Node> make(T node) {
  return std::make_shared<const Expr::Node>(Expr::Node{std::move(node)});
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Expr Expr::product(ProductSpec spec) {
  spec.validate();
  return Expr(make(ProductNode{std::move(spec)}));
}

Expr Expr::named(std::string name, SeriesParams params) {
  named_spec(name, params);  // validates name and parameters eagerly
  return Expr(make(NamedNode{std::move(name), params}));
}

Expr Expr::closed_form(std::string name, SeriesParams params) {
  if (!has_closed_form(name)) {
    throw std::invalid_argument("series '" + name + "' has no closed-sum form");
  }
  return Expr(make(ClosedFormNode{std::move(name), params}));
}

Expr Expr::constant(long value) { return Expr(make(ConstantNode{value})); }

Expr Expr::substituted(std::size_t k) const {
  if (k == 0) throw std::invalid_argument("substitution q -> q^0 is not allowed");
  return Expr(make(SubstituteNode{*this, k}));
}

Expr Expr::dissected(std::size_t m, std::size_t r) const {
  if (m == 0 || r >= m) throw std::invalid_argument("dissection residue out of range");
  return Expr(make(DissectNode{*this, m, r}));
}

Expr Expr::shifted(std::size_t k) const { return Expr(make(ShiftNode{*this, k})); }
Expr Expr::scaled(long factor) const { return Expr(make(ScaleNode{*this, factor})); }
Expr Expr::pow(long exponent) const { return Expr(make(PowerNode{*this, exponent})); }

Expr operator+(const Expr& a, const Expr& b) { return Expr(make(SumNode{a, b, false})); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(make(SumNode{a, b, true})); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(make(ProductOfNode{a, b})); }

QSeries Expr::evaluate(std::size_t n) const {
  return std::visit(
      overloaded{
          [n](const ProductNode& p) { return expand(p.spec, n); },
          [n](const NamedNode& p) { return build(p.name, p.params, n); },
          [n](const ClosedFormNode& p) { return build_closed_form(p.name, p.params, n); },
          [n](const ConstantNode& c) { return QSeries::constant(c.value, n); },
          [n](const SubstituteNode& s) {
            const std::size_t inner = (n + s.k - 1) / s.k;
            return substitute_power(s.inner.evaluate(inner), s.k).truncated(n);
          },
          [n](const DissectNode& d) {
            if (n == 0) return QSeries();
            return dissect(d.inner.evaluate(d.m * (n - 1) + d.r + 1), d.m, d.r);
          },
          [n](const ShiftNode& s) {
            if (n <= s.k) return QSeries(n);
            return shift(s.inner.evaluate(n - s.k), s.k);
          },
          [n](const ScaleNode& s) { return scale(s.inner.evaluate(n), s.factor); },
          [n](const PowerNode& p) { return power(p.inner.evaluate(n), p.exponent); },
          [n](const SumNode& s) {
            return s.subtract ? s.lhs.evaluate(n) - s.rhs.evaluate(n)
                              : s.lhs.evaluate(n) + s.rhs.evaluate(n);
          },
          [n](const ProductOfNode& p) { return p.lhs.evaluate(n) * p.rhs.evaluate(n); },
      },
      node_->value);
}

std::string Expr::describe() const {
  return std::visit(
      overloaded{
          [](const ProductNode& p) { return "[" + p.spec.describe() + "]"; },
          [](const NamedNode& p) { return series_label(p.name, p.params); },
          [](const ClosedFormNode& p) { return "sum:" + series_label(p.name, p.params); },
          [](const ConstantNode& c) { return std::to_string(c.value); },
          [](const SubstituteNode& s) {
            return s.inner.describe() + "|q->q^" + std::to_string(s.k);
          },
          [](const DissectNode& d) {
            return "dissect(" + d.inner.describe() + ", " + std::to_string(d.m) + ", " +
                   std::to_string(d.r) + ")";
          },
          [](const ShiftNode& s) { return "q^" + std::to_string(s.k) + " " + s.inner.describe(); },
          [](const ScaleNode& s) { return std::to_string(s.factor) + " " + s.inner.describe(); },
          [](const PowerNode& p) {
            return "(" + p.inner.describe() + ")^" + std::to_string(p.exponent);
          },
          [](const SumNode& s) {
            return "(" + s.lhs.describe() + (s.subtract ? " - " : " + ") + s.rhs.describe() + ")";
          },
          [](const ProductOfNode& p) { return p.lhs.describe() + " * " + p.rhs.describe(); },
      },
      node_->value);
}

}  // namespace heptaq
