#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace heptaq {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status status);

/// Concrete witness attached to every failing check.
struct Counterexample {
  std::size_t index = 0;
  std::string detail;
  // name -> decimal value, in insertion order
  std::vector<std::pair<std::string, std::string>> values;
};

struct Report {
  std::string id;
  std::string anchor;
  std::string kind;  // identity | congruence | equidistribution | relation | property
  Status status = Status::Skipped;
  std::string range;
  std::optional<Counterexample> counterexample;
  std::string note;
  double millis = 0.0;
  bool expect_failure = false;

  /// True when the outcome is what the check was designed to produce.
  bool as_expected() const {
    if (status == Status::Skipped) return true;
    return expect_failure ? status == Status::Fail : status == Status::Pass;
  }
};

}  // namespace heptaq
