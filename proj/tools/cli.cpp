#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "heptaq/catalog.hpp"
#include "heptaq/report_json.hpp"
#include "heptaq/suite.hpp"
#include "heptaq/theta.hpp"
#include "heptaq/vector_partition.hpp"

namespace heptaq::cli {
namespace {

constexpr const char* kPrecisionEnv = "HEPTAQ_PRECISION";

struct ExpandArgs {
  std::string series;
  std::optional<long> t, k;
  std::size_t precision = 2000;
  std::string format = "plain";
  std::optional<std::size_t> dissect;
  std::size_t residue = 0;
};

struct VerifyArgs {
  bool list = false;
  std::vector<std::string> ids;
  std::optional<std::size_t> precision;
  bool no_timing = false;
};

struct SuiteArgs {
  std::size_t precision = 2000;
  std::vector<std::string> filters;
  std::string output;
  bool include_controls = false;
  bool no_timing = false;
  std::optional<std::size_t> n_max;
  unsigned jobs = 1;
};

struct TableArgs {
  std::string family;
  std::optional<int> t;
  int n = 0;
  std::optional<long> modulus;
  std::string format = "csv";
  bool distribution = false;
  bool allow_large = false;
};

struct SweepArgs {
  std::string series;
  std::optional<long> t, k;
  std::size_t a = 1, b = 0;
  std::optional<long> modulus;
  std::size_t n_max = 100;
  std::size_t precision = 2000;
  bool no_timing = false;
};

std::string quoted(const std::string& value) {
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string bracketed(const std::vector<Integer>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + to_decimal(values[i]);
  return out + "]";
}

int cmd_expand(const ExpandArgs& a, std::ostream& out) {
  const SeriesParams params{a.t, a.k};
  std::string label = series_label(a.series, params);
  QSeries s;
  if (a.dissect) {
    const std::size_t m = *a.dissect;
    if (a.residue >= m) throw CLI::ValidationError("--residue", "must be below --dissect");
    const std::size_t source_precision = a.precision == 0 ? 0 : m * (a.precision - 1) + a.residue + 1;
    s = dissect(build(a.series, params, source_precision), m, a.residue).truncated(a.precision);
    label += " dissected " + std::to_string(m) + "n+" + std::to_string(a.residue);
  } else {
    s = build(a.series, params, a.precision);
  }
  if (a.format == "json") {
    Json j;
    j["series"] = label;
    j["precision"] = s.precision();
    j["coefficients"] = to_json(s);
    out << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    out << "n,coefficient\r\n";
    for (std::size_t n = 0; n < s.precision(); ++n) out << n << ',' << to_decimal(s[n]) << "\r\n";
  } else {
    for (std::size_t n = 0; n < s.precision(); ++n) out << n << ": " << to_decimal(s[n]) << '\n';
  }
  return Ok;
}

int write_reports(const std::vector<Report>& reports, bool timing, const std::string& path,
                  std::ostream& out, std::ostream& err) {
  const std::string text = to_json(reports, timing).dump(2) + "\n";
  if (path.empty() || path == "-") {
    out << text;
  } else {
    std::ofstream file(path);
    if (!file || !(file << text)) {
      err << "error: cannot write " << path << '\n';
      return InternalError;
    }
  }
  std::size_t pass = 0, fail = 0, skipped = 0, unexpected = 0;
  for (const Report& r : reports) {
    (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : skipped)++;
    if (!r.as_expected()) ++unexpected;
  }
  err << reports.size() << " checks: " << pass << " pass, " << fail << " fail, " << skipped
      << " skipped, " << unexpected << " unexpected\n";
  return unexpected ? VerificationFailure : Ok;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.list) {
    out << catalog_json().dump(2) << '\n';
    return Ok;
  }
  std::vector<Report> reports;
  if (a.ids.empty()) {
    for (const IdentityEntry& e : catalog()) reports.push_back(verify_entry(e, a.precision));
  } else {
    for (const std::string& id : a.ids) {
      const IdentityEntry* entry = nullptr;
      try {
        entry = &find_entry(id);
      } catch (const std::out_of_range&) {
        throw CLI::ValidationError("--id", "unknown identity '" + id + "'");
      }
      reports.push_back(verify_entry(*entry, a.precision));
    }
  }
  return write_reports(reports, !a.no_timing, "", out, err);
}

int cmd_suite(const SuiteArgs& a, std::ostream& out, std::ostream& err) {
  SuiteOptions options;
  options.precision = a.precision;
  for (const std::string& f : a.filters) {
    std::size_t start = 0;
    while (start <= f.size()) {
      const std::size_t comma = std::min(f.find(',', start), f.size());
      if (comma > start) options.filters.push_back(f.substr(start, comma - start));
      start = comma + 1;
    }
  }
  options.include_controls = a.include_controls;
  options.n_max = a.n_max;
  options.jobs = a.jobs;
  return write_reports(run_suite(options), !a.no_timing, a.output, out, err);
}

int cmd_table(TableArgs a, bool crank_default, std::ostream& out) {
  if (a.family.empty()) a.family = crank_default ? "W2" : "V";
  const Family family = parse_family(a.family);
  if (family == Family::W2 && a.t.value_or(2) != 2) {
    throw CLI::ValidationError("--t", "family W2 is defined only for t = 2");
  }
  const int t = a.t.value_or(family == Family::V ? 4 : 2);
  const long modulus = a.modulus.value_or(family == Family::V ? 5 : 7);
  if (modulus < 1) throw CLI::ValidationError("--modulus", "must be positive");
  const EnumerationOptions limits{.max_size = EnumerationOptions{}.max_size, .allow_large = a.allow_large};

  const std::vector<VectorPartition> rows = enumerate_vectors(family, t, a.n, limits);
  const Distribution dist = statistic_distribution(family, t, a.n, 2, limits);
  const std::vector<Integer> classes = residue_counts(dist, modulus);
  Integer total = 0;
  for (const Integer& c : classes) total += c;
  const char* stat_name = family == Family::V ? "multirank" : "crank";

  if (a.format == "json") {
    Json j;
    j["family"] = to_string(family);
    j["t"] = t;
    j["n"] = a.n;
    j["modulus"] = modulus;
    Json list = Json::array();
    for (const VectorPartition& v : rows) {
      list.push_back({{"components", v.render()}, {"weight", v.weight()}, {stat_name, v.statistic()}});
    }
    j["rows"] = std::move(list);
    Json cls = Json::array();
    for (const Integer& c : classes) cls.push_back(to_decimal(c));
    j["classes"] = std::move(cls);
    j["total"] = to_decimal(total);
    if (a.distribution) {
      Json d = Json::object();
      for (const auto& [m, c] : dist) d[std::to_string(m)] = to_decimal(c);
      j["distribution"] = std::move(d);
    }
    out << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    out << "components,weight," << stat_name << "\r\n";
    for (const VectorPartition& v : rows) {
      out << quoted(v.render()) << ',' << v.weight() << ',' << v.statistic() << "\r\n";
    }
    out << "\r\nresidue,weighted_count\r\n";
    for (std::size_t i = 0; i < classes.size(); ++i) out << i << ',' << to_decimal(classes[i]) << "\r\n";
    if (a.distribution) {
      out << "\r\n" << stat_name << ",weighted_count\r\n";
      for (const auto& [m, c] : dist) out << m << ',' << to_decimal(c) << "\r\n";
    }
  } else {
    for (const VectorPartition& v : rows) {
      out << v.render() << "  weight " << v.weight() << "  " << stat_name << ' ' << v.statistic() << '\n';
    }
    out << rows.size() << " vectors; classes mod " << modulus << ": " << bracketed(classes) << " total "
        << to_decimal(total) << '\n';
    if (a.distribution) {
      for (const auto& [m, c] : dist) out << stat_name << ' ' << m << ": " << to_decimal(c) << '\n';
    }
  }
  return Ok;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  CongruenceSpec spec;
  spec.id = "sweep";
  spec.anchor = "user-supplied";
  spec.source = SourceRef{a.series, {a.t, a.k}};
  spec.a = a.a;
  spec.b = a.b;
  spec.modulus = a.modulus;
  spec.n_max = a.n_max;
  spec.validate();
  const QSeries source = build(a.series, spec.source.params, a.precision);
  return write_reports({check_congruence(spec, source)}, !a.no_timing, "", out, err);
}

const std::vector<std::string> kFormats = {"plain", "json", "csv"};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Truncated q-series, vector partition statistics and congruence checks", "heptaq-cli"};
  app.require_subcommand(1);

  ExpandArgs expand;
  auto* ex = app.add_subcommand("expand", "Print coefficients of a named series");
  ex->add_option("--series", expand.series, "Series name")->required()->check(CLI::IsMember(series_names()));
  ex->add_option("--t", expand.t, "Parameter t")->check(CLI::PositiveNumber);
  ex->add_option("--k", expand.k, "Parameter k")->check(CLI::PositiveNumber);
  ex->add_option("--precision", expand.precision, "Number of coefficients")->envname(kPrecisionEnv)->check(CLI::NonNegativeNumber);
  ex->add_option("--format", expand.format)->check(CLI::IsMember(kFormats));
  auto* dissect_opt = ex->add_option("--dissect", expand.dissect, "Take coefficients at m*n + residue")->check(CLI::PositiveNumber);
  ex->add_option("--residue", expand.residue)->needs(dissect_opt);

  VerifyArgs verify;
  auto* ve = app.add_subcommand("verify", "Check catalog identities");
  ve->add_flag("--list", verify.list, "Print the catalog");
  ve->add_option("--id", verify.ids, "Identity id (repeatable)");
  ve->add_option("--precision", verify.precision, "Override the default precision");
  ve->add_flag("--no-timing", verify.no_timing);

  SuiteArgs suite;
  auto* su = app.add_subcommand("suite", "Run the full check suite");
  su->add_option("--precision", suite.precision)->envname(kPrecisionEnv)->check(CLI::NonNegativeNumber);
  su->add_option("--filter", suite.filters, "Tag or id, comma separated");
  su->add_option("--output", suite.output, "Report path (stdout by default)");
  su->add_flag("--include-controls", suite.include_controls, "Also run the negative controls");
  su->add_flag("--no-timing", suite.no_timing, "Omit wall-clock timings");
  su->add_option("--n-max", suite.n_max, "Cap sweep ranges");
  su->add_option("--jobs", suite.jobs)->check(CLI::Range(1u, 256u));

  TableArgs rank, crank;
  auto table_options = [](CLI::App* sub, TableArgs& a) {
    sub->add_option("--family", a.family)->check(CLI::IsMember({"V", "W2"}));
    sub->add_option("--t", a.t)->check(CLI::PositiveNumber);
    sub->add_option("--n", a.n)->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--modulus", a.modulus);
    sub->add_option("--format", a.format)->check(CLI::IsMember(kFormats));
    sub->add_flag("--distribution", a.distribution, "Also print the statistic distribution");
    sub->add_flag("--allow-large", a.allow_large, "Lift the enumeration size limit");
  };
  auto* rt = app.add_subcommand("ranktable", "Enumerate vector partitions with their multirank");
  table_options(rt, rank);
  auto* ct = app.add_subcommand("cranktable", "Enumerate vector partitions with their crank");
  table_options(ct, crank);

  SweepArgs sweep;
  auto* sw = app.add_subcommand("sweep", "Check a user-supplied congruence");
  sw->add_option("--series", sweep.series)->required()->check(CLI::IsMember(series_names()));
  sw->add_option("--t", sweep.t)->check(CLI::PositiveNumber);
  sw->add_option("--k", sweep.k)->check(CLI::PositiveNumber);
  sw->add_option("--a", sweep.a)->check(CLI::PositiveNumber);
  sw->add_option("--b", sweep.b);
  sw->add_option("--modulus", sweep.modulus, "Omit to require exact vanishing");
  sw->add_option("--n-max", sweep.n_max);
  sw->add_option("--precision", sweep.precision)->envname(kPrecisionEnv);
  sw->add_flag("--no-timing", sweep.no_timing);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (ex->parsed()) return cmd_expand(expand, out);
    if (ve->parsed()) return cmd_verify(verify, out, err);
    if (su->parsed()) return cmd_suite(suite, out, err);
    if (rt->parsed()) return cmd_table(rank, false, out);
    if (ct->parsed()) return cmd_table(crank, true, out);
    if (sw->parsed()) return cmd_sweep(sweep, out, err);
    return UsageError;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return UsageError;
  } catch (const GuardrailError& e) {
    err << "error: " << e.what() << '\n';
    return UsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return UsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return InternalError;
  }
}

}  // namespace heptaq::cli
