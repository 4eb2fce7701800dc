#pragma once

#include <vector>

#include <json.hpp>

#include "heptaq/qseries.hpp"
#include "heptaq/report.hpp"

namespace heptaq {

using Json = nlohmann::ordered_json;

/// {id, anchor, kind, status, range, counterexample?, note?, millis}.
/// Without timing, millis is omitted so output is reproducible.
Json to_json(const Report& report, bool timing = true);
Json to_json(const std::vector<Report>& reports, bool timing = true);

/// Coefficients as decimal strings.
Json to_json(const QSeries& series);

/// [{id, description, anchor, default_precision, modulus?}, ...]
Json catalog_json();

}  // namespace heptaq
