#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "heptaq/expr.hpp"
#include "heptaq/report.hpp"

namespace heptaq {

/// One displayed identity: lhs == rhs coefficientwise, optionally only
/// modulo `modulus`.
struct IdentityEntry {
  std::string id;
  std::string description;
  std::string anchor;
  Expr lhs;
  Expr rhs;
  std::optional<long> modulus;
  std::size_t default_precision = 120;
};

/// The full identity catalog, in a stable order.
const std::vector<IdentityEntry>& catalog();

/// Looks an entry up by id; throws std::out_of_range if absent.
const IdentityEntry& find_entry(const std::string& id);

/// Compares both sides at `precision` (the entry default when omitted).
/// Precision 0 is a vacuous pass and says so in the note.
Report verify_entry(const IdentityEntry& entry, std::optional<std::size_t> precision = std::nullopt);

}  // namespace heptaq
