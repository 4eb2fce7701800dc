#include "heptaq/catalog.hpp"

#include <chrono>
#include <stdexcept>

namespace heptaq {
namespace {

using Powers = std::initializer_list<std::pair<std::size_t, long>>;

Expr eta(Powers powers) { return Expr::product(eta_quotient(powers)); }

Expr eta_t(Powers powers, std::size_t t, long exponent) {
  return Expr::product(eta_quotient(powers) * f(t, exponent));
}

Expr q_power(std::size_t k) { return Expr::constant(1).shifted(k); }

Expr w(long t) { return Expr::named("w_t", {.t = t}); }

// x(q^3), built from x(q) and then substituted
Expr x3() { return Expr::named("x").substituted(3); }

// f2^4 f3^4 f6 / f1^8, the common factor of the 3-dissection
Expr three_dissection_factor() { return eta({{2, 4}, {3, 4}, {6, 1}, {1, -8}}); }

Expr three_dissection_part(std::size_t r) {
  switch (r) {
    case 0:
      return eta({{2, 2}, {3, 6}, {1, -2}, {6, -6}}) +
             eta({{1, 1}, {6, 3}, {2, -1}, {3, -3}}).scaled(10).shifted(1);
    case 1:
      return (eta({{2, 1}, {3, 3}, {1, -1}, {6, -3}}) +
              eta({{1, 2}, {6, 6}, {2, -2}, {3, -6}}).shifted(1))
          .scaled(4);
    default:
      return Expr::constant(9);
  }
}

IdentityEntry entry(std::string id, std::string description, std::string anchor, Expr lhs,
                    Expr rhs, std::size_t precision, std::optional<long> modulus = std::nullopt) {
  return IdentityEntry{std::move(id), std::move(description), std::move(anchor),
                       std::move(lhs), std::move(rhs), modulus, precision};
}

std::vector<IdentityEntry> make_catalog() {
  std::vector<IdentityEntry> c;

  // theta functions: product forms against their defining sums
  c.push_back(entry("phi-product-form", "phi(q) = sum q^{n^2} = f2^5/(f1^2 f4^2)",
                    "theta function phi", Expr::closed_form("phi"), Expr::named("phi"), 1000));
  c.push_back(entry("psi-product-form", "psi(q) = sum q^{n(n+1)/2} = f2^2/f1",
                    "theta function psi", Expr::closed_form("psi"), Expr::named("psi"), 1000));
  c.push_back(entry("phi-neg-product-form", "phi(-q) = f1^2/f2", "theta function phi(-q)",
                    Expr::closed_form("phi_neg"), Expr::named("phi_neg"), 1000));
  c.push_back(entry("pentagonal-number-theorem", "f1 = sum (-1)^n q^{n(3n+1)/2}",
                    "Euler pentagonal number theorem", Expr::closed_form("f"), Expr::named("f"),
                    1000));
  c.push_back(entry("jacobi-cube", "f1^3 = sum (-1)^n (2n+1) q^{n(n+1)/2}", "Jacobi identity",
                    Expr::closed_form("f_cubed"), Expr::named("f_cubed"), 1000));

  // generating functions
  c.push_back(entry("w-eta-form", "(q^2;q^2)/((q;q^2)^4 f_t^2) = f2^5/(f1^4 f_t^2), t=5",
                    "weighted 7-colored generating function", Expr::named("w_t_def", {.t = 5}),
                    w(5), 500));
  c.push_back(entry("w4-equals-cphi2",
                    "f2^5/(f1^4 f4^2) = (q^2;q^4)/((q;q^2)^4 (q^4;q^4)), so w_4 = cphi_2",
                    "w_4 coincides with 2-colored Frobenius partitions", w(4),
                    Expr::named("cphi2"), 500));

  // 2-dissections
  c.push_back(entry("f1sq-2-dissection", "f1^2 = f2 f8^5/(f4^2 f16^2) - 2q f2 f16^2/f8",
                    "2-dissection of phi(-q)", eta({{1, 2}}),
                    eta({{2, 1}, {8, 5}, {4, -2}, {16, -2}}) -
                        eta({{2, 1}, {16, 2}, {8, -1}}).scaled(2).shifted(1),
                    500));
  c.push_back(entry("f1pow4-2-dissection", "f1^4 = f4^10/(f2^2 f8^4) - 4q f2^2 f8^4/f4^2",
                    "2-dissection of phi(-q)^2", eta({{1, 4}}),
                    eta({{4, 10}, {2, -2}, {8, -4}}) -
                        eta({{2, 2}, {8, 4}, {4, -2}}).scaled(4).shifted(1),
                    500));
  c.push_back(entry("f1inv4-2-dissection", "1/f1^4 = f4^14/(f2^14 f8^4) + 4q f4^2 f8^4/f2^10",
                    "2-dissection of phi(q)^2", eta({{1, -4}}),
                    eta({{4, 14}, {2, -14}, {8, -4}}) +
                        eta({{4, 2}, {8, 4}, {2, -10}}).scaled(4).shifted(1),
                    500));
  c.push_back(entry("w-2-dissection",
                    "f2^5/(f1^4 f_t^2) = f4^14/(f2^9 f8^4 f_t^2) + 4q f4^2 f8^4/(f2^5 f_t^2), t=4",
                    "2-dissection of the w_t generating function", w(4),
                    eta_t({{4, 14}, {2, -9}, {8, -4}}, 4, -2) +
                        eta_t({{4, 2}, {8, 4}, {2, -5}}, 4, -2).scaled(4).shifted(1),
                    500));
  c.push_back(entry("w-even-part", "sum w_t(2n) q^n = f2^14/(f1^9 f4^4 f_{t/2}^2), t=4",
                    "even part of w_t for even t", w(4).dissected(2, 0),
                    eta_t({{2, 14}, {1, -9}, {4, -4}}, 2, -2), 500));
  c.push_back(entry("w-odd-part", "sum w_t(2n+1) q^n = 4 f2^2 f4^4/(f1^5 f_{t/2}^2), t=4",
                    "odd part of w_t for even t", w(4).dissected(2, 1),
                    eta_t({{2, 2}, {4, 4}, {1, -5}}, 2, -2).scaled(4), 500));

  // 3-dissections
  c.push_back(entry("psi-3-dissection", "psi(q) = psi(q^9) (1/x(q^3) + q)",
                    "3-dissection of psi via Jacobi triple product", Expr::named("psi"),
                    Expr::named("psi").substituted(9) * (x3().pow(-1) + q_power(1)), 120));
  {
    const Expr phi_neg = Expr::named("phi_neg");
    c.push_back(entry(
        "inv-phi-neg-3-dissection",
        "1/phi(-q) = phi(-q^9)^3/phi(-q^3)^4 (1 + 2q x(q^3) + 4q^2 x(q^3)^2)",
        "3-dissection of 1/phi(-q)", phi_neg.pow(-1),
        phi_neg.substituted(9).pow(3) * phi_neg.substituted(3).pow(-4) *
            (Expr::constant(1) + x3().scaled(2).shifted(1) + x3().pow(2).scaled(4).shifted(2)),
        120));
  }
  c.push_back(entry(
      "key-identity",
      "f2^5/f1^4 = f6^4 f9^4 f18/f3^8 (x(q^3)^-2 + 4q/x(q^3) + 9q^2 + 10q^3 x(q^3) + 4q^4 x(q^3)^2)",
      "key identity behind the 3-dissection", Expr::named("a"),
      eta({{6, 4}, {9, 4}, {18, 1}, {3, -8}}) *
          (x3().pow(-2) + x3().pow(-1).scaled(4).shifted(1) + q_power(2).scaled(9) +
           x3().scaled(10).shifted(3) + x3().pow(2).scaled(4).shifted(4)),
      120));
  for (std::size_t r = 0; r < 3; ++r) {
    const std::string suffix = std::to_string(r);
    c.push_back(entry("a-3-dissection-" + suffix,
                      "sum a(3n+" + suffix + ") q^n for a = f2^5/f1^4",
                      "3-dissection of f2^5/f1^4",
                      Expr::named("a").dissected(3, r),
                      three_dissection_factor() * three_dissection_part(r), 120));
  }
  for (std::size_t r = 0; r < 3; ++r) {
    const std::string suffix = std::to_string(r);
    c.push_back(entry("w-3-dissection-" + suffix,
                      "sum w_t(3n+" + suffix + ") q^n for t=3",
                      "3-dissection of w_t for t divisible by 3", w(3).dissected(3, r),
                      three_dissection_factor() * Expr::product(f(1, -2)) *
                          three_dissection_part(r),
                      120));
  }

  // modulo-3 chain behind w_3(24n+23) = 0 (mod 27)
  const Expr a1 = Expr::named("a1");
  c.push_back(entry("a1-mod3-step1", "f2^4 f3^4 f6/f1^10 = f1^2 f2^7 (mod 3)",
                    "w_3(24n+23) mod-3 chain, first reduction", a1, eta({{1, 2}, {2, 7}}), 200, 3));
  c.push_back(entry("a1-mod3-expansion",
                    "f1^2 f2^7 = f2^8 f8^5/(f4^2 f16^2) - 2q f2^8 f16^2/f8",
                    "w_3(24n+23) mod-3 chain, 2-dissection", eta({{1, 2}, {2, 7}}),
                    eta({{2, 8}, {8, 5}, {4, -2}, {16, -2}}) -
                        eta({{2, 8}, {16, 2}, {8, -1}}).scaled(2).shifted(1),
                    200));
  c.push_back(entry("a1-mod3-step2", "sum a1(2n+1) q^n = -2 f1^8 f8^2/f4 (mod 3)",
                    "w_3(24n+23) mod-3 chain, odd extraction", a1.dissected(2, 1),
                    eta({{1, 8}, {8, 2}, {4, -1}}).scaled(-2), 200, 3));
  c.push_back(entry("a1-mod3-step3", "sum a1(4n+3) q^n = 16 f2^7 f4^2 (mod 3)",
                    "w_3(24n+23) mod-3 chain, second extraction", a1.dissected(4, 3),
                    eta({{2, 7}, {4, 2}}).scaled(16), 200, 3));
  c.push_back(entry("a1-mod3-final", "a1(8n+7) = 0 (mod 3): no odd powers in 16 f2^7 f4^2",
                    "w_3(24n+23) mod-3 chain, conclusion", a1.dissected(4, 3).dissected(2, 1),
                    Expr::zero(), 120, 3));

  // reductions used by the mod 5, 7 and 11 congruences
  c.push_back(entry("pentagonal-5-3-vanishes", "f1 has no terms q^{5n+3}",
                    "pentagonal exponents avoid 3 mod 5", Expr::named("f").dissected(5, 3),
                    Expr::zero(), 200));
  c.push_back(entry("pentagonal-5-4-vanishes", "f1 has no terms q^{5n+4}",
                    "pentagonal exponents avoid 4 mod 5", Expr::named("f").dissected(5, 4),
                    Expr::zero(), 200));
  c.push_back(entry("jacobi-cube-5-3-vanishes-mod5", "terms q^{5n+3} of f1^3 vanish mod 5",
                    "Jacobi identity modulo 5", Expr::named("f_cubed").dissected(5, 3),
                    Expr::zero(), 200, 5));
  c.push_back(entry("jacobi-cube-7-6-vanishes-mod7", "terms q^{7n+6} of f1^3 vanish mod 7",
                    "Jacobi identity modulo 7", Expr::named("f_cubed").dissected(7, 6),
                    Expr::zero(), 200, 7));
  c.push_back(entry("w-mod5-reduction-t0", "f2^5/(f1^4 f_t^2) = f1 f10/(f5 f_t^2) (mod 5), t=5",
                    "mod 5 congruence, t = 0 mod 5", w(5),
                    eta_t({{1, 1}, {10, 1}, {5, -1}}, 5, -2), 200, 5));
  c.push_back(entry("w-mod5-reduction", "f2^5/(f1^4 f_t^2) = f1 f_t^3 f10/(f5 f_{5t}) (mod 5), t=1",
                    "mod 5 congruence, t = 1 or 4 mod 5", w(1),
                    eta({{1, 1}, {1, 3}, {10, 1}, {5, -1}, {5, -1}}), 200, 5));
  c.push_back(entry("w2-mod7-reduction", "f2^3/f1^4 = f1^3 f2^3/f7 (mod 7)",
                    "mod 7 congruence for w_2", w(2), eta({{1, 3}, {2, 3}, {7, -1}}), 200, 7));
  c.push_back(entry("w2-mod11-reduction", "f2^3/f1^4 = f2^14/(f1^4 f22) (mod 11)",
                    "mod 11 congruence for w_2", w(2), eta({{2, 14}, {1, -4}, {22, -1}}), 200,
                    11));

  // parity-weighted counts
  c.push_back(entry("c-t0-psi-form", "f2/((q^2;q^4)^2 f_t^2) = psi(q^2)/f_t^2, t=5",
                    "parity-weighted multirank, t = 0 mod 5", Expr::named("c_t", {.t = 5}),
                    Expr::closed_form("psi").substituted(2) * Expr::product(f(5, -2)), 200));
  c.push_back(entry("c4-equals-p-half", "f2/((q^2;q^4)^2 f4^2) = 1/f2, so c_4(n) = p(n/2)",
                    "parity-weighted multirank, t = 4", Expr::named("c_t", {.t = 4}),
                    Expr::named("p").substituted(2), 200));
  c.push_back(entry("d-pentagonal", "sum d(n) q^n = f2 = sum (-1)^m q^{m(3m+1)}",
                    "parity-weighted vector crank", Expr::named("d"), Expr::closed_form("d"),
                    500));
  return c;
}

}  // namespace

const std::vector<IdentityEntry>& catalog() {
  static const std::vector<IdentityEntry> entries = make_catalog();
  return entries;
}

const IdentityEntry& find_entry(const std::string& id) {
  for (const IdentityEntry& e : catalog()) {
    if (e.id == id) return e;
  }
  throw std::out_of_range("no identity with id '" + id + "'");
}

Report verify_entry(const IdentityEntry& entry, std::optional<std::size_t> precision) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = precision.value_or(entry.default_precision);
  Report report;
  report.id = entry.id;
  report.anchor = entry.anchor;
  report.kind = "identity";
  report.range = "q^0..q^" + std::to_string(n == 0 ? 0 : n - 1);
  if (entry.modulus) report.range += " mod " + std::to_string(*entry.modulus);

  if (n == 0) {
    report.status = Status::Pass;
    report.range = "empty";
    report.note = "vacuous: precision 0 compares no coefficients";
    return report;
  }

  const QSeries lhs = entry.lhs.evaluate(n);
  const QSeries rhs = entry.rhs.evaluate(n);
  std::optional<Integer> modulus;
  if (entry.modulus) modulus = Integer(*entry.modulus);
  const Comparison cmp = equal_upto(lhs, rhs, n, modulus);
  report.status = cmp.equal ? Status::Pass : Status::Fail;
  if (cmp.mismatch) {
    Counterexample ce;
    ce.index = cmp.mismatch->index;
    ce.detail = "coefficients of q^" + std::to_string(ce.index) + " differ";
    ce.values = {{"lhs", to_decimal(cmp.mismatch->lhs)}, {"rhs", to_decimal(cmp.mismatch->rhs)}};
    report.counterexample = std::move(ce);
  }
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace heptaq
