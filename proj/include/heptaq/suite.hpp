#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "heptaq/report.hpp"
#include "heptaq/verification.hpp"

namespace heptaq {

struct SuiteItem {
  std::string id;
  std::string anchor;
  std::string kind;
  std::vector<std::string> tags;
  std::size_t required_precision = 0;  // series precision the item needs
  std::function<Report(SeriesCache&)> run;
};

struct SuiteOptions {
  std::size_t precision = 2000;
  std::vector<std::string> filters;  // tag or id; empty selects everything
  bool include_controls = false;
  std::optional<std::size_t> n_max;  // caps the range of sweeps
  unsigned jobs = 1;
};

/// The checks that must pass.
std::vector<SuiteItem> suite_items(const std::optional<std::size_t>& n_max = std::nullopt);

/// Deliberately false claims; each must fail with a counterexample.
std::vector<SuiteItem> negative_controls();

/// Whether an item is selected by the filters (exact tag or id match).
bool matches(const SuiteItem& item, const std::vector<std::string>& filters);

/// Runs the selected items in catalog order. Items whose required
/// precision exceeds options.precision are reported skipped without running.
std::vector<Report> run_suite(const SuiteOptions& options);

/// True when no report is an unexpected outcome.
bool suite_passed(const std::vector<Report>& reports);

}  // namespace heptaq
