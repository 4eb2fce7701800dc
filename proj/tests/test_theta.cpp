#include <doctest.h>

#include "heptaq/catalog.hpp"
#include "heptaq/expr.hpp"
#include "heptaq/theta.hpp"
#include "oracles.hpp"

using namespace heptaq;

TEST_CASE("named series against independent products") {
  const std::size_t n = 150;
  CHECK(build("w_t", {.t = 3}, n) == QSeries(oracle::eta({{2, 5}, {1, -4}, {3, -2}}, n)));
  CHECK(build("a2", {}, n) == QSeries(oracle::eta({{2, 14}, {1, -4}}, n)));
  CHECK(build("a1", {}, n) == QSeries(oracle::eta({{2, 4}, {3, 4}, {6, 1}, {1, -10}}, n)));
  CHECK(build("c_t", {.t = 5}, n) ==
        QSeries(oracle::product({{2, 2, 1}, {2, 4, -2}, {5, 5, -2}}, n)));
  CHECK(build("w_t_def", {.t = 7}, n) == build("w_t", {.t = 7}, n));
}

TEST_CASE("published small values") {
  CHECK(build("w_t", {.t = 4}, 4)[3] == 20);
  CHECK(build("w_t", {.t = 2}, 6) == QSeries::from_ints({1, 4, 11, 28, 63, 132}));
  CHECK(build("w_t", {.t = 4}, 6) == QSeries::from_ints({1, 4, 9, 20, 42, 80}));
  const QSeries d = build("d", {}, 15);
  for (std::size_t i = 0; i < 15; ++i) {
    const bool nonzero = i == 0 || i == 2 || i == 4 || i == 10 || i == 14;
    CHECK((sgn(d[i]) != 0) == nonzero);
  }
  CHECK(build("f", {.k = 1}, 3) == QSeries::from_ints({1, -1, -1}));
}

TEST_CASE("a2 at 120, by the naive product") {
  const auto a2 = oracle::eta({{2, 14}, {1, -4}}, 121);
  CHECK(a2[120] == 14641);
  CHECK(build("a2", {}, 121)[120] == a2[120]);
}

TEST_CASE("closed forms agree with products") {
  for (const std::string& name : series_names()) {
    if (!has_closed_form(name)) continue;
    CAPTURE(name);
    CHECK(build_closed_form(name, {}, 400) == build(name, {}, 400));
  }
  CHECK(build_closed_form("f", {.k = 3}, 200) == build("f", {.k = 3}, 200));
}

TEST_CASE("unknown names and missing parameters") {
  CHECK_THROWS_AS(build("nope", {}, 5), UnknownSeriesError);
  CHECK_THROWS_AS(build_closed_form("w_t", {.t = 2}, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_closed_form("nope", {}, 5), UnknownSeriesError);
  CHECK(series_label("w_t", {.t = 4}) == "w_t(t=4)");
}

TEST_CASE("expressions propagate precision through transformations") {
  const Expr p = Expr::named("p");
  const QSeries direct = build("p", {}, 300);
  CHECK(p.dissected(5, 4).evaluate(20) == dissect(direct, 5, 4).truncated(20));
  CHECK(p.substituted(3).evaluate(30) == substitute_power(direct, 3).truncated(30));
  CHECK(p.shifted(2).evaluate(10) == shift(direct, 2).truncated(10));
  CHECK((p * Expr::named("f", {.k = 1})).evaluate(40) == QSeries::one(40));
  CHECK((p.pow(-1) - Expr::named("f", {.k = 1})).evaluate(40).is_zero());
  CHECK(p.scaled(3).evaluate(5) == scale(direct.truncated(5), 3));
  CHECK(Expr::constant(2).evaluate(3) == QSeries::from_ints({2, 0, 0}));
  CHECK(p.dissected(7, 6).substituted(2).evaluate(0).precision() == 0);
}

TEST_CASE("catalog entries hold at their default precision") {
  CHECK(catalog().size() >= 14);
  for (const IdentityEntry& e : catalog()) {
    CAPTURE(e.id);
    const Report r = verify_entry(e);
    CHECK(r.status == Status::Pass);
    CHECK_FALSE(r.counterexample.has_value());
  }
}

TEST_CASE("catalog lookups and vacuous precision") {
  CHECK_THROWS_AS(find_entry("missing"), std::out_of_range);
  const Report r = verify_entry(find_entry("key-identity"), 0);
  CHECK(r.status == Status::Pass);
  CHECK_FALSE(r.note.empty());
}

TEST_CASE("a false identity produces a counterexample") {
  const IdentityEntry wrong{"wrong",
                            "f1 = f2",
                            "deliberately false",
                            Expr::named("f", {.k = 1}),
                            Expr::named("f", {.k = 2}),
                            std::nullopt,
                            10};
  const Report r = verify_entry(wrong);
  CHECK(r.status == Status::Fail);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->index == 1);
}
