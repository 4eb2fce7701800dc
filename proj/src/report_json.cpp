#include "heptaq/report_json.hpp"

#include "heptaq/catalog.hpp"

namespace heptaq {

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "unknown";
}

Json to_json(const Report& report, bool timing) {
  Json j;
  j["id"] = report.id;
  j["anchor"] = report.anchor;
  j["kind"] = report.kind;
  j["status"] = to_string(report.status);
  if (report.expect_failure) j["expect_failure"] = true;
  j["range"] = report.range;
  if (report.counterexample) {
    const Counterexample& c = *report.counterexample;
    Json values = Json::object();
    for (const auto& [name, value] : c.values) values[name] = value;
    j["counterexample"] = {{"index", c.index}, {"detail", c.detail}, {"values", values}};
  }
  if (!report.note.empty()) j["note"] = report.note;
  if (timing) j["millis"] = report.millis;
  return j;
}

Json to_json(const std::vector<Report>& reports, bool timing) {
  Json out = Json::array();
  for (const Report& r : reports) out.push_back(to_json(r, timing));
  return out;
}

Json to_json(const QSeries& series) {
  Json out = Json::array();
  for (const Integer& c : series.coefficients()) out.push_back(to_decimal(c));
  return out;
}

Json catalog_json() {
  Json out = Json::array();
  for (const IdentityEntry& e : catalog()) {
    Json j;
    j["id"] = e.id;
    j["description"] = e.description;
    j["anchor"] = e.anchor;
    j["default_precision"] = e.default_precision;
    if (e.modulus) j["modulus"] = *e.modulus;
    out.push_back(j);
  }
  return out;
}

}  // namespace heptaq
