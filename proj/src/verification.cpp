#include "heptaq/verification.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "heptaq/parity.hpp"

namespace heptaq {
namespace {

class Stopwatch {
 public:
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Report make_report(std::string id, std::string anchor, std::string kind, bool expect_failure = false) {
  Report r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  r.kind = std::move(kind);
  r.expect_failure = expect_failure;
  return r;
}

Report& skip(Report& r, std::size_t needed, std::size_t available) {
  r.status = Status::Skipped;
  r.note = "needs precision " + std::to_string(needed) + ", have " + std::to_string(available);
  return r;
}

Report& fail(Report& r, std::size_t index, std::string detail,
             std::vector<std::pair<std::string, std::string>> values) {
  r.status = Status::Fail;
  r.counterexample = Counterexample{index, std::move(detail), std::move(values)};
  return r;
}

std::string index_range(std::size_t a, std::size_t b, std::size_t n_max) {
  std::ostringstream os;
  os << "n=0.." << n_max << " (indices " << b << ".." << a * n_max + b << " step " << a << ")";
  return os.str();
}

SourceRef w_source(Family family, int t) {
  return SourceRef{"w_t", {.t = family == Family::W2 ? 2 : t}};
}

std::string join(const std::vector<Integer>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += to_decimal(values[i]);
  }
  return out + "]";
}

}  // namespace

void CongruenceSpec::validate() const {
  if (a < 1) throw std::invalid_argument(id + ": progression step must be positive");
  if (b >= a) throw std::invalid_argument(id + ": progression offset must be below the step");
  if (modulus && *modulus < 2) throw std::invalid_argument(id + ": modulus must be at least 2");
}

void EquidistributionSpec::validate() const {
  if (m < 2) throw std::invalid_argument(id + ": statistic modulus must be at least 2");
  if (a < 1 || b >= a) throw std::invalid_argument(id + ": invalid progression");
  if (family == Family::W2 && t != 2) throw std::invalid_argument(id + ": W2 requires t = 2");
}

template <typename T, typename Make>
std::shared_ptr<const T> SeriesCache::lookup(
    std::map<std::string, std::shared_future<std::shared_ptr<const T>>>& table,
    const std::string& key, Make make) {
  std::promise<std::shared_ptr<const T>> promise;
  std::shared_future<std::shared_ptr<const T>> future;
  bool owner = false;
  {
    std::lock_guard lock(mutex_);
    auto it = table.find(key);
    if (it == table.end()) {
      future = promise.get_future().share();
      table.emplace(key, future);
      owner = true;
    } else {
      future = it->second;
    }
  }
  if (owner) {
    try {
      promise.set_value(std::make_shared<const T>(make()));
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return future.get();
}

std::shared_ptr<const QSeries> SeriesCache::univariate(const SourceRef& source) {
  return lookup<QSeries>(univariate_, source.label(),
                         [&] { return build(source.name, source.params, precision_); });
}

std::shared_ptr<const BivariateSeries> SeriesCache::bivariate(Family family, int t,
                                                              std::size_t precision) {
  const std::string key = to_string(family) + ":" + std::to_string(t) + "@" + std::to_string(precision);
  return lookup<BivariateSeries>(bivariate_, key,
                                 [&] { return series_counts(family, t, precision); });
}

Report check_congruence(const CongruenceSpec& spec, const QSeries& source) {
  spec.validate();
  Stopwatch clock;
  Report r = make_report(spec.id, spec.anchor, "congruence", spec.expect_failure);
  r.range = index_range(spec.a, spec.b, spec.n_max);
  if (spec.modulus) {
    r.range += " mod " + std::to_string(*spec.modulus);
  } else {
    r.range += " exact zero";
  }
  const std::size_t needed = spec.required_precision();
  if (needed > source.precision()) return skip(r, needed, source.precision());

  r.status = Status::Pass;
  const Integer modulus = spec.modulus.value_or(0);
  for (std::size_t n = 0; n <= spec.n_max; ++n) {
    const std::size_t index = spec.a * n + spec.b;
    const Integer& value = source[index];
    const bool ok = spec.modulus ? mpz_divisible_p(value.get_mpz_t(), modulus.get_mpz_t()) != 0
                                 : sgn(value) == 0;
    if (!ok) {
      std::vector<std::pair<std::string, std::string>> values = {
          {spec.source.label() + "[" + std::to_string(index) + "]", to_decimal(value)}};
      if (spec.modulus) {
        Integer residue;
        mpz_fdiv_r(residue.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
        values.emplace_back("residue mod " + std::to_string(*spec.modulus), to_decimal(residue));
      }
      fail(r, n, "n=" + std::to_string(n) + " gives index " + std::to_string(index),
           std::move(values));
      break;
    }
  }
  r.millis = clock.millis();
  return r;
}

Report check_congruence(const CongruenceSpec& spec, SeriesCache& cache) {
  if (spec.required_precision() > cache.precision()) {
    Report r = make_report(spec.id, spec.anchor, "congruence", spec.expect_failure);
    r.range = index_range(spec.a, spec.b, spec.n_max);
    return skip(r, spec.required_precision(), cache.precision());
  }
  Stopwatch clock;
  Report r = check_congruence(spec, *cache.univariate(spec.source));
  r.millis = clock.millis();
  return r;
}

Report check_equidistribution(const EquidistributionSpec& spec, SeriesCache& cache) {
  spec.validate();
  Stopwatch clock;
  Report r = make_report(spec.id, spec.anchor, "equidistribution", spec.expect_failure);
  r.range = index_range(spec.a, spec.b, spec.n_max) + " classes mod " + std::to_string(spec.m);
  const std::size_t needed = spec.required_precision();
  if (needed > cache.precision()) return skip(r, needed, cache.precision());

  const auto gf = cache.bivariate(spec.family, spec.t, needed);
  const auto totals = cache.univariate(w_source(spec.family, spec.t));
  const auto buckets = residue_buckets(*gf, static_cast<std::size_t>(spec.m));
  const auto classes = static_cast<std::size_t>(spec.m);

  std::string enumerated;
  r.status = Status::Pass;
  for (std::size_t n = 0; n <= spec.n_max && r.status == Status::Pass; ++n) {
    const std::size_t index = spec.a * n + spec.b;
    std::vector<Integer> counts(classes);
    Integer gf_total = 0;
    for (std::size_t k = 0; k < classes; ++k) {
      counts[k] = buckets[k][index];
      gf_total += counts[k];
    }
    const Integer& total = (*totals)[index];
    if (gf_total != total) {
      fail(r, n, "generating-function classes do not sum to w(" + std::to_string(index) + ")",
           {{"classes", join(counts)}, {"w", to_decimal(total)}});
      break;
    }
    const Integer share = total / spec.m;
    const bool equal = std::all_of(counts.begin(), counts.end(),
                                   [&](const Integer& c) { return c == counts[0]; });
    if (!equal || share * spec.m != total || counts[0] != share) {
      fail(r, n, "residue classes differ at index " + std::to_string(index),
           {{"classes", join(counts)}, {"w", to_decimal(total)}});
      break;
    }
    if (static_cast<long>(index) <= spec.enumeration_limit) {
      const auto by_enumeration = residue_counts(
          statistic_distribution(spec.family, spec.t, static_cast<int>(index)), spec.m);
      if (by_enumeration != counts) {
        fail(r, n, "enumeration disagrees with the generating function at index " +
                       std::to_string(index),
             {{"gf", join(counts)}, {"enumeration", join(by_enumeration)}});
        break;
      }
      enumerated += (enumerated.empty() ? "" : ",") + std::to_string(index);
    }
  }
  r.note = "gf route at every index; enumeration route at indices {" + enumerated + "}";
  r.millis = clock.millis();
  return r;
}

Report check_relation_chl(std::size_t n_max, SeriesCache& cache) {
  Stopwatch clock;
  Report r = make_report("a2-11n+120-relation", "a2(11n+120) = 11^4 a2(n/11) for f2^14/f1^4",
                         "relation");
  r.range = "n=0.." + std::to_string(n_max);
  const std::size_t needed = 11 * n_max + 121;
  if (needed > cache.precision()) return skip(r, needed, cache.precision());

  const auto a2 = cache.univariate(SourceRef{"a2", {}});
  const Integer factor = 14641;  // 11^4
  std::size_t mismatches = 0;
  r.status = Status::Pass;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Integer& lhs = (*a2)[11 * n + 120];
    const Integer rhs = n % 11 == 0 ? Integer(factor * (*a2)[n / 11]) : Integer(0);
    if (lhs != rhs) {
      ++mismatches;
      if (!r.counterexample) {
        fail(r, n, "a2(" + std::to_string(11 * n + 120) + ") differs from 11^4 a2(n/11)",
             {{"a2(11n+120)", to_decimal(lhs)}, {"11^4 a2(n/11)", to_decimal(rhs)}});
      }
    }
  }
  r.note = "a2(120)/a2(0) = " + to_decimal((*a2)[120]) + "/" + to_decimal((*a2)[0]);
  if (mismatches) r.note += "; " + std::to_string(mismatches) + " mismatching n";
  r.millis = clock.millis();
  return r;
}

const std::vector<TableRow>& table1_rows() {
  static const std::vector<TableRow> rows = {
      {"3_2", 1, 1},           {"3_3", 1, -1},          {"3_4", 1, 2},
      {"3_5", 1, -2},          {"2_1+1_2", -1, 1},      {"2_1+1_3", -1, -1},
      {"2_1+1_4", -1, 2},      {"2_1+1_5", -1, -2},     {"1_2+1_2+1_2", 1, 3},
      {"1_3+1_3+1_3", 1, -3},  {"1_4+1_4+1_4", 1, 6},   {"1_5+1_5+1_5", 1, -6},
      {"1_2+1_2+1_3", 1, 1},   {"1_2+1_2+1_4", 1, 4},   {"1_2+1_2+1_5", 1, 0},
      {"1_2+1_3+1_3", 1, -1},  {"1_3+1_3+1_4", 1, 0},   {"1_3+1_3+1_5", 1, -4},
      {"1_2+1_4+1_4", 1, 5},   {"1_3+1_4+1_4", 1, 3},   {"1_4+1_4+1_5", 1, 2},
      {"1_2+1_5+1_5", 1, -3},  {"1_3+1_5+1_5", 1, -5},  {"1_4+1_5+1_5", 1, -2},
      {"1_2+1_3+1_4", 1, 2},   {"1_2+1_3+1_5", 1, -2},  {"1_2+1_4+1_5", 1, 1},
      {"1_3+1_4+1_5", 1, -1},
  };
  return rows;
}

VectorPartition parse_colored(const std::string& label, int t) {
  std::array<std::vector<int>, 7> parts;
  std::istringstream in(label);
  std::string token;
  while (std::getline(in, token, '+')) {
    const auto underscore = token.find('_');
    if (underscore == std::string::npos) throw std::invalid_argument("bad colored part '" + token + "'");
    const int value = std::stoi(token.substr(0, underscore));
    const int color = std::stoi(token.substr(underscore + 1));
    if (color < 1 || color > 7) throw std::invalid_argument("color out of range in '" + token + "'");
    int part = value;
    if (color >= 6) {
      if (value % t != 0) throw std::invalid_argument("part '" + token + "' is not a multiple of t");
      part = value / t;
    }
    parts[static_cast<std::size_t>(color - 1)].push_back(part);
  }
  VectorPartition v;
  v.family = Family::V;
  v.t = t;
  for (std::size_t i = 0; i < 5; ++i) v.head[i] = Partition(parts[i]);
  v.tail[0] = StarPartition(Partition(parts[5]));
  v.tail[1] = StarPartition(Partition(parts[6]));
  return v;
}

Report check_table1() {
  Stopwatch clock;
  Report r = make_report("table1-multirank-w4-3", "multirank table for the 28 vectors of size 3, t = 4",
                         "property");
  r.range = "V_4, n=3";
  const auto vectors = enumerate_vectors(Family::V, 4, 3);
  const auto& rows = table1_rows();
  r.status = Status::Pass;
  if (vectors.size() != rows.size()) {
    fail(r, 3, "enumeration size differs from the table",
         {{"enumerated", std::to_string(vectors.size())}, {"table", std::to_string(rows.size())}});
  }
  std::map<std::string, const VectorPartition*> by_render;
  for (const auto& v : vectors) by_render[v.render()] = &v;
  for (std::size_t i = 0; i < rows.size() && r.status == Status::Pass; ++i) {
    const VectorPartition expected = parse_colored(rows[i].label, 4);
    const auto it = by_render.find(expected.render());
    if (it == by_render.end()) {
      fail(r, i, "table row " + rows[i].label + " is not enumerated", {{"row", rows[i].label}});
      break;
    }
    const VectorPartition& v = *it->second;
    if (v.weight() != rows[i].weight || multirank(v) != rows[i].multirank) {
      fail(r, i, "row " + rows[i].label + " has different (weight, multirank)",
           {{"table", std::to_string(rows[i].weight) + "," + std::to_string(rows[i].multirank)},
            {"computed", std::to_string(v.weight()) + "," + std::to_string(multirank(v))}});
    }
    by_render.erase(it);
  }
  if (r.status == Status::Pass && !by_render.empty()) {
    fail(r, 0, "enumerated vector missing from the table", {{"vector", by_render.begin()->first}});
  }
  const auto classes = residue_counts(statistic_distribution(Family::V, 4, 3), 5);
  const Integer w4_3 = build("w_t", {.t = 4}, 4)[3];
  Integer total = 0;
  for (const auto& c : classes) total += c;
  if (r.status == Status::Pass &&
      (classes != std::vector<Integer>(5, Integer(4)) || total != 20 || w4_3 != 20)) {
    fail(r, 3, "residue classes mod 5 are not [4,4,4,4,4] summing to w_4(3) = 20",
         {{"classes", join(classes)}, {"w_4(3)", to_decimal(w4_3)}});
  }
  r.note = "classes mod 5 = " + join(classes);
  r.millis = clock.millis();
  return r;
}

Report check_oracle_equivalence(Family family, int t, int n_max) {
  Stopwatch clock;
  Report r = make_report("oracle-" + to_string(family) + "-t" + std::to_string(t),
                         family == Family::V ? "multirank generating function"
                                             : "vector crank generating function",
                         "property");
  r.range = "n=0.." + std::to_string(n_max);
  const auto precision = static_cast<std::size_t>(n_max) + 1;
  const BivariateSeries gf = series_counts(family, t, precision);
  const QSeries totals = build("w_t", {.t = family == Family::W2 ? 2 : t}, precision);
  r.status = Status::Pass;
  if (!gf.is_symmetric()) {
    return fail(r, 0, "generating function is not symmetric under z -> 1/z", {});
  }
  for (int n = 0; n <= n_max; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const Distribution dist = statistic_distribution(family, t, n);
    Distribution from_gf;
    for (const auto& [m, c] : gf.terms(un)) from_gf[m] = c;
    if (dist != from_gf) {
      long first = 0;
      for (const auto& [m, c] : dist) {
        if (gf.coefficient(un, m) != c) {
          first = m;
          break;
        }
      }
      auto it = dist.find(first);
      return fail(r, un, "distribution differs from the generating function",
                  {{"statistic", std::to_string(first)},
                   {"enumerated", it == dist.end() ? "0" : to_decimal(it->second)},
                   {"gf", to_decimal(gf.coefficient(un, first))}});
    }
    Integer sum = 0;
    for (const auto& [m, c] : dist) {
      sum += c;
      auto mirror = dist.find(-m);
      if (mirror == dist.end() || mirror->second != c) {
        return fail(r, un, "distribution is not symmetric", {{"statistic", std::to_string(m)}});
      }
      if (family == Family::V && sgn(c) < 0) {
        return fail(r, un, "negative weighted count", {{"statistic", std::to_string(m)},
                                                       {"count", to_decimal(c)}});
      }
    }
    if (sum != totals[un]) {
      return fail(r, un, "distribution does not sum to w(n)",
                  {{"sum", to_decimal(sum)}, {"w", to_decimal(totals[un])}});
    }
  }
  r.millis = clock.millis();
  return r;
}

Report check_nonnegativity(const std::vector<int>& ts, std::size_t precision, SeriesCache& cache) {
  Stopwatch clock;
  Report r = make_report("multirank-nonnegative", "N_{V_t}(m, n) >= 0", "property");
  std::string list;
  for (int t : ts) list += (list.empty() ? "" : ",") + std::to_string(t);
  r.range = "t in {" + list + "}, n < " + std::to_string(precision);
  if (precision > cache.precision()) return skip(r, precision, cache.precision());
  r.status = Status::Pass;
  for (int t : ts) {
    const auto gf = cache.bivariate(Family::V, t, precision);
    for (std::size_t n = 0; n < precision; ++n) {
      for (const auto& [m, c] : gf->terms(n)) {
        if (sgn(c) < 0) {
          return fail(r, n, "negative coefficient for t=" + std::to_string(t),
                      {{"m", std::to_string(m)}, {"count", to_decimal(c)}});
        }
      }
    }
  }
  r.millis = clock.millis();
  return r;
}

Report check_kim_identity(std::size_t precision) {
  Stopwatch clock;
  Report r = make_report("starred-crank-generating-function",
                         "sum over P* of wt* z^c* q^sigma* = f1/((zq;q)(z^-1 q;q))", "property");
  r.range = "q^0..q^" + std::to_string(precision == 0 ? 0 : precision - 1);
  std::vector<std::map<long, Integer>> terms(precision);
  for (std::size_t n = 0; n < precision; ++n) {
    for (const StarPartition& p : enumerate_star(static_cast<int>(n))) terms[n][p.crank()] += p.weight();
    std::erase_if(terms[n], [](const auto& e) { return sgn(e.second) == 0; });
  }
  const BivariateSeries enumerated = BivariateSeries::from_terms(terms);
  ProductSpec spec;
  spec.factors = {{0, 1, 1, 1}, {1, 1, 1, -1}, {-1, 1, 1, -1}};
  const BivariateSeries gf = expand_bivariate(spec, precision);
  r.status = Status::Pass;
  for (std::size_t n = 0; n < precision; ++n) {
    if (enumerated.terms(n) != gf.terms(n)) {
      fail(r, n, "starred crank distribution differs from the product", {});
      break;
    }
  }
  r.millis = clock.millis();
  return r;
}

Report check_parity_enumeration(int t, int n_max) {
  Stopwatch clock;
  Report r = make_report("parity-enumeration-t" + std::to_string(t),
                         "c_t(n) = sum (-1)^m N_{V_t}(m,n) = coefficient of f2/((q^2;q^4)^2 f_t^2)",
                         "property");
  r.range = "n=0.." + std::to_string(n_max);
  r.status = Status::Pass;
  for (int n = 0; n <= n_max; ++n) {
    const CrossChecked c = parity_weighted(t, n, n_max);
    if (!c.consistent()) {
      fail(r, static_cast<std::size_t>(n), "c_t routes disagree",
           {{"series", to_decimal(c.value)}, {"enumerated", to_decimal(*c.enumerated)}});
      break;
    }
  }
  r.millis = clock.millis();
  return r;
}

Report check_vector_crank_parity(std::size_t n_max, int enumeration_limit, SeriesCache& cache) {
  Stopwatch clock;
  Report r = make_report("d-pentagonal-formula", "d(n) = M*_e(n) - M*_o(n) = (-1)^m at n = m(3m+-1)",
                         "property");
  r.range = "n=0.." + std::to_string(n_max) + ", enumeration n<=" + std::to_string(enumeration_limit);
  if (n_max + 1 > cache.precision()) return skip(r, n_max + 1, cache.precision());
  const auto d = cache.univariate(SourceRef{"d", {}});
  r.status = Status::Pass;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Integer formula = pentagonal_d(static_cast<long>(n));
    if ((*d)[n] != formula) {
      return fail(r, n, "f2 coefficient differs from the pentagonal formula",
                  {{"series", to_decimal((*d)[n])}, {"formula", to_decimal(formula)}});
    }
    if (static_cast<long>(n) <= enumeration_limit) {
      Integer alternating = 0;
      for (const auto& [m, c] : statistic_distribution(Family::W2, 2, static_cast<int>(n))) {
        if (m % 2 == 0) {
          alternating += c;
        } else {
          alternating -= c;
        }
      }
      if (alternating != formula) {
        return fail(r, n, "even minus odd vector cranks differs from the formula",
                    {{"enumerated", to_decimal(alternating)}, {"formula", to_decimal(formula)}});
      }
    }
  }
  r.millis = clock.millis();
  return r;
}

Report check_c4_partition(std::size_t k_max, SeriesCache& cache) {
  Stopwatch clock;
  Report r = make_report("c4-partition-numbers", "c_4(n) = p(n/2)", "property");
  r.range = "n=0.." + std::to_string(2 * k_max + 1);
  const std::size_t needed = 2 * k_max + 2;
  if (needed > cache.precision()) return skip(r, needed, cache.precision());
  const auto c4 = cache.univariate(SourceRef{"c_t", {.t = 4}});
  const auto p = partition_numbers(k_max + 1);
  r.status = Status::Pass;
  for (std::size_t n = 0; n < needed; ++n) {
    const Integer expected = n % 2 ? Integer(0) : p[n / 2];
    if ((*c4)[n] != expected) {
      return fail(r, n, "c_4(n) differs from p(n/2)",
                  {{"c_4", to_decimal((*c4)[n])}, {"p(n/2)", to_decimal(expected)}});
    }
  }
  r.millis = clock.millis();
  return r;
}

Report check_dual_forms(std::size_t precision) {
  Stopwatch clock;
  Report r = make_report("theta-dual-forms", "product and sum forms of phi, psi, phi(-q), f1, f1^3",
                         "property");
  r.range = "q^0..q^" + std::to_string(precision == 0 ? 0 : precision - 1);
  r.status = Status::Pass;
  for (const char* name : {"phi", "psi", "phi_neg", "f", "f_cubed"}) {
    const QSeries product = build(name, {}, precision);
    const QSeries sum = build_closed_form(name, {}, precision);
    const Comparison cmp = equal_upto(product, sum, precision);
    if (!cmp) {
      return fail(r, cmp.mismatch->index, std::string(name) + ": forms differ",
                  {{"product", to_decimal(cmp.mismatch->lhs)}, {"sum", to_decimal(cmp.mismatch->rhs)}});
    }
  }
  r.millis = clock.millis();
  return r;
}

}  // namespace heptaq
