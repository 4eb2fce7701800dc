#include <doctest.h>

#include "heptaq/partitions.hpp"
#include "heptaq/product_spec.hpp"
#include "oracles.hpp"

using namespace heptaq;

TEST_CASE("expansion of simple products") {
  CHECK(expand(f(1), 8) == QSeries::from_ints({1, -1, -1, 0, 0, 1, 0, 1}));
  CHECK(expand(f(1, -1), 8) == QSeries::from_ints({1, 1, 2, 3, 5, 7, 11, 15}));
  CHECK(expand(ProductSpec{}, 3) == QSeries::one(3));
  CHECK(expand(f(1), 0).precision() == 0);
}

TEST_CASE("scalar and q-shift are applied") {
  ProductSpec spec = f(1, -1);
  spec.scalar = 3;
  spec.q_shift = 2;
  CHECK(expand(spec, 5) == QSeries::from_ints({0, 0, 3, 3, 6}));
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(expand(pochhammer(0, 1), 5), std::invalid_argument);
  CHECK_THROWS_AS(expand(pochhammer(1, 0), 5), std::invalid_argument);
  ProductSpec bivariate;
  bivariate.factors.push_back(Factor{1, 1, 1, -1});
  CHECK_FALSE(bivariate.is_univariate());
  CHECK_THROWS(expand(bivariate, 5));
}

TEST_CASE("partition numbers from the recurrence against counting") {
  const auto p = partition_numbers(60);
  std::vector<int> all;
  for (int k = 1; k < 60; ++k) all.push_back(k);
  for (int n = 0; n < 60; ++n) CHECK(p[static_cast<std::size_t>(n)] == oracle::count_partitions(n, all, false));
  CHECK(partition_p(100) == Integer("190569292"));
  CHECK(expand(f(1, -1), 101)[100] == Integer("190569292"));
}

TEST_CASE("property: expansion matches the naive product for random specs") {
  auto g = oracle::rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    ProductSpec spec;
    std::vector<oracle::Factor> reference;
    const long count = oracle::uniform(g, 1, 4);
    for (long i = 0; i < count; ++i) {
      const auto step = static_cast<std::size_t>(oracle::uniform(g, 1, 6));
      const auto offset = static_cast<std::size_t>(oracle::uniform(g, 1, 7));
      long e = oracle::uniform(g, -5, 5);
      if (e == 0) e = 1;
      spec.factors.push_back(Factor{0, offset, step, e});
      reference.push_back({offset, step, e});
    }
    const std::size_t n = 70;
    CHECK(expand(spec, n) == QSeries(oracle::product(reference, n)));
  }
}

TEST_CASE("property: prefix stability") {
  const ProductSpec spec = eta_quotient({{2, 5}, {1, -4}, {3, -2}});
  const QSeries long_run = expand(spec, 300);
  for (std::size_t m : {0u, 1u, 17u, 150u, 299u}) CHECK(long_run.truncated(m) == expand(spec, m));
}

TEST_CASE("composition of specs multiplies the series") {
  ProductSpec a = eta_quotient({{1, 2}});
  const ProductSpec b = eta_quotient({{2, -1}});
  const QSeries product = expand(a, 50) * expand(b, 50);
  a *= b;
  CHECK(expand(a, 50) == product);
}
