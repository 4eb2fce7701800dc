#include <doctest.h>

#include "heptaq/qseries.hpp"
#include "oracles.hpp"

using namespace heptaq;

namespace {

QSeries random_series(std::mt19937_64& g, std::size_t precision, long lead = 0) {
  QSeries s(precision);
  for (std::size_t n = 0; n < precision; ++n) s[n] = oracle::uniform(g, -50, 50);
  if (lead != 0 && precision) s[0] = lead;
  return s;
}

}  // namespace

TEST_CASE("construction and access") {
  const QSeries s = QSeries::from_ints({1, -2, 3});
  CHECK(s.precision() == 3);
  CHECK(s[1] == -2);
  CHECK_THROWS_AS(s.at(3), PrecisionError);
  CHECK_THROWS_AS(s.truncated(4), PrecisionError);
  CHECK(s.truncated(2) == QSeries::from_ints({1, -2}));
  CHECK(QSeries(4).is_zero());
  CHECK(QSeries::one(3) == QSeries::from_ints({1, 0, 0}));
}

TEST_CASE("binary operations keep the smaller precision") {
  const QSeries a = QSeries::from_ints({1, 1, 1, 1});
  const QSeries b = QSeries::from_ints({1, -1});
  CHECK((a + b).precision() == 2);
  CHECK((a * b) == QSeries::from_ints({1, 0}));
  CHECK((a - a).is_zero());
}

TEST_CASE("inverse, power and errors") {
  const QSeries one_minus_q = QSeries::from_ints({1, -1, 0, 0, 0});
  CHECK(inverse(one_minus_q) == QSeries::from_ints({1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(inverse(QSeries::from_ints({2, 1})), NonUnitError);
  CHECK_THROWS_AS(inverse(QSeries::from_ints({0, 1})), NonUnitError);
  CHECK(power(one_minus_q, -2) == QSeries::from_ints({1, 2, 3, 4, 5}));
  CHECK(power(one_minus_q, 0) == QSeries::one(5));
  CHECK(power(one_minus_q, 2) == QSeries::from_ints({1, -2, 1, 0, 0}));
}

TEST_CASE("shift, substitution and dissection") {
  const QSeries s = QSeries::from_ints({1, 2, 3, 4, 5, 6, 7});
  CHECK(shift(s, 2) == QSeries::from_ints({0, 0, 1, 2, 3, 4, 5, 6, 7}));
  const QSeries sub = substitute_power(QSeries::from_ints({1, 2, 3}), 2);
  CHECK(sub == QSeries::from_ints({1, 0, 2, 0, 3, 0}));
  CHECK_THROWS(substitute_power(s, 0));
  CHECK(dissect(s, 3, 1) == QSeries::from_ints({2, 5}));
  CHECK(dissect(s, 3, 0) == QSeries::from_ints({1, 4, 7}));
  CHECK(dissect(s, 2, 1).precision() == 3);
  CHECK_THROWS(dissect(s, 3, 3));
}

TEST_CASE("comparison reports the first mismatch") {
  const QSeries a = QSeries::from_ints({1, 2, 3, 4});
  const QSeries b = QSeries::from_ints({1, 2, 10, 4});
  const Comparison exact = equal_upto(a, b, 4);
  REQUIRE_FALSE(exact.equal);
  CHECK(exact.mismatch->index == 2);
  CHECK(exact.mismatch->lhs == 3);
  CHECK(equal_upto(a, b, 2).equal);
  CHECK(equal_upto(a, b, 4, Integer(7)).equal);
  CHECK_THROWS_AS(equal_upto(a, b, 5), PrecisionError);
}

TEST_CASE("pochhammer series against the factor-by-factor oracle") {
  for (std::size_t offset = 1; offset <= 4; ++offset) {
    for (std::size_t step = 1; step <= 4; ++step) {
      const auto expected = oracle::product({{offset, step, 1}}, 60);
      CHECK(pochhammer_series(offset, step, 60) == QSeries(expected));
    }
  }
}

TEST_CASE("property: commutative ring axioms on random truncated series") {
  auto g = oracle::rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(oracle::uniform(g, 1, 25));
    const QSeries a = random_series(g, n), b = random_series(g, n), c = random_series(g, n);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * QSeries::one(n) == a);
    CHECK((a + (-a)).is_zero());
  }
}

TEST_CASE("property: inverse and exponent laws for unit series") {
  auto g = oracle::rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(oracle::uniform(g, 1, 20));
    const QSeries a = random_series(g, n, oracle::uniform(g, 0, 1) ? 1 : -1);
    CHECK(a * inverse(a) == QSeries::one(n));
    const long j = oracle::uniform(g, -3, 3), k = oracle::uniform(g, -3, 3);
    CHECK(power(a, j + k) == power(a, j) * power(a, k));
  }
}

TEST_CASE("property: dissection components reassemble the series") {
  auto g = oracle::rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(oracle::uniform(g, 1, 40));
    const auto m = static_cast<std::size_t>(oracle::uniform(g, 1, 5));
    const QSeries s = random_series(g, n);
    QSeries rebuilt(n);
    for (std::size_t r = 0; r < m; ++r) {
      const QSeries part = dissect(s, m, r);
      for (std::size_t i = 0; i < part.precision(); ++i) rebuilt[m * i + r] = part[i];
    }
    CHECK(rebuilt == s);
  }
}

TEST_CASE("decimal rendering of large coefficients") {
  const Integer big("123456789012345678901234567890");
  CHECK(to_decimal(big) == "123456789012345678901234567890");
  CHECK(to_decimal(-big) == "-123456789012345678901234567890");
}
