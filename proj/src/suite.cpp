#include "heptaq/suite.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "heptaq/catalog.hpp"

namespace heptaq {
namespace {

std::size_t capped(std::size_t n_max, const std::optional<std::size_t>& cap) {
  return cap ? std::min(n_max, *cap) : n_max;
}

SuiteItem congruence_item(CongruenceSpec spec, std::vector<std::string> tags,
                          const std::optional<std::size_t>& cap) {
  spec.n_max = capped(spec.n_max, cap);
  spec.validate();
  SuiteItem item{spec.id, spec.anchor, "congruence", std::move(tags), spec.required_precision(), {}};
  item.run = [spec](SeriesCache& cache) { return check_congruence(spec, cache); };
  return item;
}

CongruenceSpec w_congruence(long t, std::size_t a, std::size_t b, long modulus, std::size_t n_max,
                            std::string anchor) {
  CongruenceSpec spec;
  spec.id = "w" + std::to_string(t) + "-" + std::to_string(a) + "n+" + std::to_string(b) + "-mod" +
            std::to_string(modulus);
  spec.anchor = std::move(anchor);
  spec.source = SourceRef{"w_t", {.t = t}};
  spec.a = a;
  spec.b = b;
  spec.modulus = modulus;
  spec.n_max = n_max;
  return spec;
}

CongruenceSpec c_congruence(long t, std::size_t a, std::size_t b, std::optional<long> modulus,
                            std::size_t n_max, std::string anchor) {
  CongruenceSpec spec;
  spec.id = "c" + std::to_string(t) + "-" + std::to_string(a) + "n+" + std::to_string(b) +
            (modulus ? "-mod" + std::to_string(*modulus) : std::string("-vanishes"));
  spec.anchor = std::move(anchor);
  spec.source = SourceRef{"c_t", {.t = t}};
  spec.a = a;
  spec.b = b;
  spec.modulus = modulus;
  spec.n_max = n_max;
  return spec;
}

SuiteItem equidistribution_item(EquidistributionSpec spec, std::vector<std::string> tags,
                                const std::optional<std::size_t>& cap) {
  spec.n_max = capped(spec.n_max, cap);
  spec.validate();
  SuiteItem item{spec.id, spec.anchor, "equidistribution", std::move(tags),
                 spec.required_precision(), {}};
  item.run = [spec](SeriesCache& cache) { return check_equidistribution(spec, cache); };
  return item;
}

EquidistributionSpec rank_spec(int t, std::size_t b) {
  EquidistributionSpec spec;
  spec.id = "rank-V" + std::to_string(t) + "-5n+" + std::to_string(b);
  spec.anchor = "multirank classes mod 5 of V_t are equal on 5n+" + std::to_string(b);
  spec.family = Family::V;
  spec.t = t;
  spec.m = 5;
  spec.a = 5;
  spec.b = b;
  spec.n_max = 30;
  return spec;
}

SuiteItem fixed_item(std::string id, std::string anchor, std::string kind,
                     std::vector<std::string> tags, std::size_t required,
                     std::function<Report(SeriesCache&)> run) {
  return SuiteItem{std::move(id), std::move(anchor), std::move(kind), std::move(tags), required,
                   std::move(run)};
}

Report spot_value(SeriesCache& cache, const SourceRef& source, std::size_t index, long expected,
                  std::string id, std::string anchor) {
  Report r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.kind = "property";
  r.range = source.label() + "[" + std::to_string(index) + "]";
  if (index >= cache.precision()) {
    r.note = "needs precision " + std::to_string(index + 1);
    return r;
  }
  const Integer& value = (*cache.univariate(source))[index];
  if (value == expected) {
    r.status = Status::Pass;
  } else {
    r.status = Status::Fail;
    r.counterexample = Counterexample{
        index, "unexpected value", {{"value", to_decimal(value)}, {"expected", std::to_string(expected)}}};
  }
  return r;
}

SuiteItem identity_item(const IdentityEntry& entry, std::vector<std::string> tags,
                        bool expect_failure = false) {
  SuiteItem item{entry.id, entry.anchor, "identity", std::move(tags), entry.default_precision, {}};
  item.run = [entry, expect_failure](SeriesCache&) {
    Report r = verify_entry(entry);
    r.expect_failure = expect_failure;
    return r;
  };
  return item;
}

std::vector<std::string> identity_tags(const std::string& id) {
  std::vector<std::string> tags = {"identity"};
  auto has = [&](const char* s) { return id.find(s) != std::string::npos; };
  if (has("2-dissection") || has("even-part") || has("odd-part")) tags.push_back("dissection2");
  if (has("3-dissection") || has("key-identity")) tags.push_back("dissection3");
  if (has("mod3")) tags.push_back("mod3");
  if (has("product-form") || has("pentagonal-number") || id == "jacobi-cube") tags.push_back("theta");
  return tags;
}

}  // namespace

std::vector<SuiteItem> suite_items(const std::optional<std::size_t>& cap) {
  std::vector<SuiteItem> items;

  for (const IdentityEntry& entry : catalog()) items.push_back(identity_item(entry, identity_tags(entry.id)));

  items.push_back(fixed_item("theta-dual-forms", "product and sum forms of phi, psi, phi(-q), f1, f1^3",
                             "property", {"theta"}, 1000,
                             [](SeriesCache&) { return check_dual_forms(1000); }));
  items.push_back(fixed_item("table1-multirank-w4-3",
                             "multirank table for the 28 vectors of size 3, t = 4", "property",
                             {"table1"}, 4, [](SeriesCache&) { return check_table1(); }));

  for (long t : {2, 4, 6}) {
    items.push_back(congruence_item(
        w_congruence(t, 2, 1, 4, 100, "w_t(2n+1) = 0 mod 4 for even t"), {"congruence", "mod4"}, cap));
  }
  for (long t : {3, 6}) {
    items.push_back(congruence_item(w_congruence(t, 3, 1, 4, 100, "w_t(3n+1) = 0 mod 4 for t = 0 mod 3"),
                                    {"congruence", "mod4"}, cap));
    items.push_back(congruence_item(w_congruence(t, 3, 2, 9, 100, "w_t(3n+2) = 0 mod 9 for t = 0 mod 3"),
                                    {"congruence", "mod9"}, cap));
  }
  items.push_back(congruence_item(w_congruence(3, 24, 23, 27, 80, "w_3(24n+23) = 0 mod 27"),
                                  {"congruence", "mod27"}, cap));
  items.push_back(congruence_item(w_congruence(3, 24, 23, 729, 40, "remark (numeric): w_3(24n+23) = 0 mod 729"),
                                  {"congruence", "mod729"}, cap));

  struct Mod5Case {
    long t;
    std::size_t b;
  };
  const Mod5Case mod5_cases[] = {{5, 3}, {5, 4}, {10, 3}, {10, 4}, {1, 4}, {6, 4}, {4, 3}, {9, 3}};
  for (const auto& c : mod5_cases) {
    std::vector<std::string> tags = {"congruence", "mod5"};
    if (c.t == 4) tags.push_back("sellers");
    items.push_back(congruence_item(
        w_congruence(c.t, 5, c.b, 5, 100, "w_t(5n+" + std::to_string(c.b) + ") = 0 mod 5"),
        std::move(tags), cap));
  }
  for (const auto& c : mod5_cases) {
    items.push_back(equidistribution_item(rank_spec(static_cast<int>(c.t), c.b),
                                          {"equidistribution", "mod5"}, cap));
  }

  items.push_back(congruence_item(w_congruence(2, 7, 4, 7, 100, "w_2(7n+4) = 0 mod 7"),
                                  {"congruence", "mod7"}, cap));
  items.push_back(fixed_item("w2-4-equals-63", "w_2(4) = 63", "property", {"mod7"}, 5,
                             [](SeriesCache& cache) {
                               return spot_value(cache, SourceRef{"w_t", {.t = 2}}, 4, 63,
                                                 "w2-4-equals-63", "w_2(4) = 63");
                             }));
  {
    EquidistributionSpec spec;
    spec.id = "crank-W2-7n+4";
    spec.anchor = "vector crank classes mod 7 of W_2 are equal on 7n+4";
    spec.family = Family::W2;
    spec.t = 2;
    spec.m = 7;
    spec.a = 7;
    spec.b = 4;
    spec.n_max = 10;
    items.push_back(equidistribution_item(spec, {"equidistribution", "mod7"}, cap));
  }

  items.push_back(congruence_item(w_congruence(2, 11, 10, 11, 100, "w_2(11n+10) = 0 mod 11"),
                                  {"congruence", "mod11"}, cap));
  {
    const std::size_t n_max = capped(150, cap);
    items.push_back(fixed_item("a2-11n+120-relation", "a2(11n+120) = 11^4 a2(n/11) for f2^14/f1^4",
                               "relation", {"relation", "mod11"}, 11 * n_max + 121,
                               [n_max](SeriesCache& cache) { return check_relation_chl(n_max, cache); }));
  }

  items.push_back(fixed_item("multirank-nonnegative", "N_{V_t}(m, n) >= 0", "property",
                             {"nonnegativity"}, 155, [](SeriesCache& cache) {
                               return check_nonnegativity({1, 2, 4, 5}, 155, cache);
                             }));
  for (int t : {1, 2, 4, 5}) {
    items.push_back(fixed_item("oracle-V-t" + std::to_string(t), "multirank generating function",
                               "property", {"oracle"}, 11,
                               [t](SeriesCache&) { return check_oracle_equivalence(Family::V, t, 10); }));
  }
  items.push_back(fixed_item("oracle-W2-t2", "vector crank generating function", "property",
                             {"oracle"}, 11,
                             [](SeriesCache&) { return check_oracle_equivalence(Family::W2, 2, 10); }));
  items.push_back(fixed_item("starred-crank-generating-function",
                             "sum over P* of wt* z^c* q^sigma* = f1/((zq;q)(z^-1 q;q))", "property",
                             {"oracle"}, 15, [](SeriesCache&) { return check_kim_identity(15); }));

  const std::size_t parity_n = capped(100, cap);
  for (long t : {5, 10}) {
    for (std::size_t b : {3, 4}) {
      items.push_back(congruence_item(
          c_congruence(t, 5, b, std::nullopt, parity_n, "c_t(5n+" + std::to_string(b) + ") = 0 for t = 0 mod 5"),
          {"parity", "congruence"}, cap));
    }
  }
  for (long t : {1, 6}) {
    items.push_back(congruence_item(c_congruence(t, 5, 4, 5, parity_n, "c_t(5n+4) = 0 mod 5"),
                                    {"parity", "congruence"}, cap));
  }
  items.push_back(congruence_item(c_congruence(9, 5, 3, 5, parity_n, "c_t(5n+3) = 0 mod 5"),
                                  {"parity", "congruence"}, cap));
  for (int t : {1, 4, 5, 6, 9, 10}) {
    items.push_back(fixed_item("parity-enumeration-t" + std::to_string(t),
                               "c_t(n) = sum (-1)^m N_{V_t}(m,n) = coefficient of f2/((q^2;q^4)^2 f_t^2)",
                               "property", {"parity", "oracle"}, 11,
                               [t](SeriesCache&) { return check_parity_enumeration(t, 10); }));
  }
  {
    const std::size_t n_max = capped(200, cap);
    items.push_back(fixed_item("d-pentagonal-formula",
                               "d(n) = M*_e(n) - M*_o(n) = (-1)^m at n = m(3m+-1)", "property",
                               {"parity"}, n_max + 1, [n_max](SeriesCache& cache) {
                                 return check_vector_crank_parity(n_max, 10, cache);
                               }));
  }
  {
    const std::size_t k_max = capped(100, cap);
    items.push_back(fixed_item("c4-partition-numbers", "c_4(n) = p(n/2)", "property", {"parity"},
                               2 * k_max + 2,
                               [k_max](SeriesCache& cache) { return check_c4_partition(k_max, cache); }));
  }

  items.push_back(congruence_item(c_congruence(4, 5, 3, 5, parity_n, "c_t(5n+3) = 0 mod 5"),
                                  {"parity", "sellers", "congruence"}, cap));
  items.push_back(congruence_item(c_congruence(4, 25, 23, 25, 40, "c_4(25n+23) = 0 mod 25"),
                                  {"sellers", "congruence"}, cap));
  items.push_back(congruence_item(w_congruence(4, 25, 23, 25, 40, "w_4(25n+23) = 0 mod 25"),
                                  {"sellers", "congruence"}, cap));
  return items;
}

std::vector<SuiteItem> negative_controls() {
  std::vector<SuiteItem> items;
  auto control = [](CongruenceSpec spec) {
    spec.expect_failure = true;
    return congruence_item(std::move(spec), {"control"}, std::nullopt);
  };
  {
    CongruenceSpec spec = w_congruence(2, 7, 3, 7, 100, "false claim: w_2(7n+3) = 0 mod 7");
    spec.id = "control-" + spec.id;
    items.push_back(control(spec));
  }
  {
    CongruenceSpec spec = w_congruence(4, 5, 1, 5, 100, "false claim: w_4(5n+1) = 0 mod 5");
    spec.id = "control-" + spec.id;
    items.push_back(control(spec));
  }
  {
    CongruenceSpec spec = c_congruence(5, 5, 2, std::nullopt, 100, "false claim: c_5(5n+2) = 0");
    spec.id = "control-" + spec.id;
    items.push_back(control(spec));
  }
  {
    EquidistributionSpec spec = rank_spec(2, 4);
    spec.id = "control-" + spec.id;
    spec.anchor = "false claim: multirank classes mod 5 of V_2 are equal on 5n+4";
    spec.expect_failure = true;
    items.push_back(equidistribution_item(spec, {"control"}, std::nullopt));
  }
  {
    const IdentityEntry entry{
        "control-f1inv4-wrong-sign",
        "1/f1^4 = f4^14/(f2^14 f8^4) - 4q f4^2 f8^4/f2^10",
        "false claim: sign flipped in the 2-dissection of 1/f1^4",
        Expr::product(eta_quotient({{1, -4}})),
        Expr::product(eta_quotient({{4, 14}, {2, -14}, {8, -4}})) -
            Expr::product(eta_quotient({{4, 2}, {8, 4}, {2, -10}})).scaled(4).shifted(1),
        std::nullopt,
        200};
    items.push_back(identity_item(entry, {"control"}, true));
  }
  return items;
}

bool matches(const SuiteItem& item, const std::vector<std::string>& filters) {
  if (filters.empty()) return true;
  for (const std::string& f : filters) {
    if (f == item.id) return true;
    if (std::find(item.tags.begin(), item.tags.end(), f) != item.tags.end()) return true;
  }
  return false;
}

std::vector<Report> run_suite(const SuiteOptions& options) {
  std::vector<SuiteItem> selected;
  for (SuiteItem& item : suite_items(options.n_max)) {
    if (matches(item, options.filters)) selected.push_back(std::move(item));
  }
  if (options.include_controls) {
    for (SuiteItem& item : negative_controls()) {
      if (matches(item, options.filters)) selected.push_back(std::move(item));
    }
  }

  SeriesCache cache(options.precision);
  std::vector<Report> reports(selected.size());
  auto run_one = [&](std::size_t i) {
    const SuiteItem& item = selected[i];
    if (item.required_precision > options.precision) {
      Report r;
      r.id = item.id;
      r.anchor = item.anchor;
      r.kind = item.kind;
      r.status = Status::Skipped;
      r.note = "needs precision " + std::to_string(item.required_precision) + ", have " +
               std::to_string(options.precision);
      reports[i] = std::move(r);
      return;
    }
    try {
      reports[i] = item.run(cache);
    } catch (const std::exception& e) {
      Report r;
      r.id = item.id;
      r.anchor = item.anchor;
      r.kind = item.kind;
      r.status = Status::Fail;
      r.note = std::string("error: ") + e.what();
      reports[i] = std::move(r);
    }
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) run_one(i);
      });
    }
  }
  return reports;
}

bool suite_passed(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.as_expected(); });
}

}  // namespace heptaq
