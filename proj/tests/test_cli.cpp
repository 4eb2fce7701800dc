#include <doctest.h>

#include <cstdlib>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "heptaq/report_json.hpp"
#include "heptaq/theta.hpp"
#include "heptaq/vector_partition.hpp"

using namespace heptaq;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) {
    if (!l.empty() && l.back() == '\r') l.pop_back();
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("expand prints coefficients") {
  const Result w = run({"expand", "--series", "w_t", "--t", "4", "--precision", "4"});
  CHECK(w.code == 0);
  CHECK(has_line(w.out, "3: 20"));

  const Result d = run({"expand", "--series", "d", "--precision", "15"});
  std::vector<std::string> nonzero;
  std::istringstream in(d.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.substr(line.find(':')) != ": 0") nonzero.push_back(line.substr(0, line.find(':')));
  }
  CHECK(nonzero == std::vector<std::string>{"0", "2", "4", "10", "14"});

  const Result f = run({"expand", "--series", "f", "--k", "1", "--precision", "3"});
  CHECK(f.out == "0: 1\n1: -1\n2: -1\n");
}

TEST_CASE("expand formats and dissection") {
  const Result j = run({"expand", "--series", "p", "--precision", "5", "--format", "json"});
  const Json parsed = Json::parse(j.out);
  CHECK(parsed["coefficients"].dump() == R"(["1","1","2","3","5"])");

  const Result c = run({"expand", "--series", "p", "--precision", "3", "--format", "csv"});
  CHECK(c.out == "n,coefficient\r\n0,1\r\n1,1\r\n2,2\r\n");

  const Result d = run({"expand", "--series", "p", "--precision", "3", "--dissect", "5", "--residue", "4"});
  CHECK(d.out == "0: 5\n1: 30\n2: 135\n");
  CHECK(run({"expand", "--series", "p", "--dissect", "3", "--residue", "3"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"expand"}).code == 2);
  CHECK(run({"expand", "--series", "nope"}).code == 2);
  CHECK(run({"expand", "--series", "w_t", "--precision", "3"}).code == 2);
  CHECK(run({"expand", "--series", "p", "--format", "xml"}).code == 2);
  CHECK(run({"ranktable", "--family", "W2", "--t", "3", "--n", "1"}).code == 2);
  CHECK(run({"ranktable", "--family", "V", "--n", "30"}).code == 2);
  CHECK(run({"verify", "--id", "missing"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("rank table reproduces the size-three table") {
  const Result r = run({"ranktable", "--family", "V", "--t", "4", "--n", "3"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "components,weight,multirank\r");
  int rows = 0;
  while (std::getline(in, line) && line != "\r") ++rows;
  CHECK(rows == 28);
  for (int k = 0; k < 5; ++k) CHECK(has_line(r.out, std::to_string(k) + ",4"));
}

TEST_CASE("rank table edge cases") {
  const Result empty = run({"ranktable", "--family", "V", "--t", "4", "--n", "0"});
  CHECK(has_line(empty.out, "\"[];[];[];[];[];[];[]\",1,0"));

  const Result w2 = run({"cranktable", "--n", "1", "--format", "json"});
  const Json j = Json::parse(w2.out);
  CHECK(j["rows"].size() == 4);
  std::multiset<long> cranks;
  for (const auto& row : j["rows"]) cranks.insert(row["crank"].get<long>());
  CHECK(cranks == std::multiset<long>{-2, -1, 1, 2});
}

TEST_CASE("table output is a thin view of the library") {
  const Result r = run({"ranktable", "--family", "V", "--t", "2", "--n", "4", "--format", "json", "--distribution"});
  const Json j = Json::parse(r.out);
  const auto rows = enumerate_vectors(Family::V, 2, 4);
  REQUIRE(j["rows"].size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(j["rows"][i]["components"] == rows[i].render());
    CHECK(j["rows"][i]["multirank"] == rows[i].statistic());
  }
  for (const auto& [m, c] : statistic_distribution(Family::V, 2, 4)) {
    CHECK(j["distribution"][std::to_string(m)] == to_decimal(c));
  }
}

TEST_CASE("suite command") {
  const Result low = run({"suite", "--precision", "10", "--no-timing"});
  CHECK(low.code == 0);
  const Json reports = Json::parse(low.out);
  CHECK(reports.size() >= 20);
  bool any_skipped = false;
  for (const auto& r : reports) any_skipped = any_skipped || r["status"] == "skipped";
  CHECK(any_skipped);

  const Result mod5 = run({"suite", "--filter", "mod5", "--precision", "600", "--no-timing"});
  CHECK(mod5.code == 0);
  CHECK(Json::parse(mod5.out).size() == 16);

  const Result two = run({"suite", "--filter", "mod7,mod11", "--precision", "1300", "--no-timing"});
  CHECK(two.code == 0);
  CHECK(Json::parse(two.out).size() == 5);

  CHECK(run({"suite", "--precision", "10", "--output", "/nonexistent-dir/x.json"}).code == 3);
}

TEST_CASE("suite output is byte-identical across runs without timing") {
  const std::vector<std::string> args = {"suite", "--filter", "table1,oracle", "--no-timing", "--include-controls"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("precision from the environment") {
  setenv("HEPTAQ_PRECISION", "3", 1);
  const Result r = run({"expand", "--series", "p"});
  unsetenv("HEPTAQ_PRECISION");
  CHECK(r.out == "0: 1\n1: 1\n2: 2\n");
}

TEST_CASE("verify and sweep") {
  const Result list = run({"verify", "--list"});
  CHECK(Json::parse(list.out).size() >= 14);
  const Result one = run({"verify", "--id", "key-identity", "--no-timing"});
  CHECK(one.code == 0);
  CHECK(Json::parse(one.out)[0]["status"] == "pass");

  const Result good = run({"sweep", "--series", "w_t", "--t", "2", "--a", "11", "--b", "10", "--modulus", "11",
                           "--n-max", "20", "--precision", "300"});
  CHECK(good.code == 0);
  const Result bad = run({"sweep", "--series", "w_t", "--t", "2", "--a", "7", "--b", "3", "--modulus", "7",
                          "--n-max", "20", "--precision", "300"});
  CHECK(bad.code == 1);
  CHECK(Json::parse(bad.out)[0].contains("counterexample"));
  const Result starved = run({"sweep", "--series", "w_t", "--t", "2", "--a", "7", "--b", "3", "--modulus", "7",
                              "--n-max", "20", "--precision", "30"});
  CHECK(starved.code == 0);
  CHECK(Json::parse(starved.out)[0]["status"] == "skipped");
}
