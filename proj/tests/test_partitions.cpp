#include <doctest.h>

#include <set>

#include "heptaq/partitions.hpp"
#include "oracles.hpp"

using namespace heptaq;

namespace {

std::vector<int> parts_upto(int n, int start, int step) {
  std::vector<int> out;
  for (int k = start; k <= n; k += step) out.push_back(k);
  return out;
}

}  // namespace

TEST_CASE("partition basics") {
  const Partition p({1, 3, 1});
  CHECK(p.parts() == std::vector<int>{3, 1, 1});
  CHECK(p.sum() == 5);
  CHECK(p.length() == 3);
  CHECK(p.ones() == 2);
  CHECK(p.to_string() == "[3,1,1]");
  CHECK(p.belongs_to(PartitionClass::Odd));
  CHECK_FALSE(p.belongs_to(PartitionClass::DistinctOdd));
  CHECK(Partition({4, 2}).belongs_to(PartitionClass::DistinctEven));
  CHECK_THROWS(Partition({2, 0}));
}

TEST_CASE("crank values") {
  CHECK(crank(Partition()) == 0);
  CHECK(crank(Partition({4})) == 4);
  CHECK(crank(Partition({1})) == -1);
  CHECK(crank(Partition({3, 1, 1})) == -1);
  CHECK(crank(Partition({3, 2, 1})) == 1);
}

TEST_CASE("enumeration counts match the counting oracle") {
  for (int n = 0; n <= 20; ++n) {
    CAPTURE(n);
    CHECK(enumerate(n, PartitionClass::All).size() == oracle::count_partitions(n, parts_upto(n, 1, 1), false));
    CHECK(enumerate(n, PartitionClass::Odd).size() == oracle::count_partitions(n, parts_upto(n, 1, 2), false));
    CHECK(enumerate(n, PartitionClass::DistinctOdd).size() ==
          oracle::count_partitions(n, parts_upto(n, 1, 2), true));
    CHECK(enumerate(n, PartitionClass::DistinctEven).size() ==
          oracle::count_partitions(n, parts_upto(n, 2, 2), true));
  }
  CHECK_THROWS(enumerate(3, PartitionClass::Starred));
}

TEST_CASE("property: enumerated partitions are distinct members of their class") {
  for (PartitionClass cls : {PartitionClass::All, PartitionClass::Odd, PartitionClass::DistinctEven,
                             PartitionClass::DistinctOdd}) {
    for (int n = 0; n <= 14; ++n) {
      const auto list = enumerate(n, cls);
      std::set<Partition> unique(list.begin(), list.end());
      CHECK(unique.size() == list.size());
      for (const Partition& p : list) {
        CHECK(p.sum() == n);
        CHECK(p.belongs_to(cls));
      }
    }
  }
}

TEST_CASE("starred partitions at size one") {
  const auto star = enumerate_star(1);
  REQUIRE(star.size() == 3);
  int weight = 0;
  std::multiset<int> cranks;
  for (const StarPartition& s : star) {
    weight += s.weight();
    cranks.insert(s.crank());
  }
  CHECK(weight == 1);
  CHECK(cranks == std::multiset<int>{-1, 0, 1});
  CHECK(StarPartition::one_star().to_string() == "[1*]");
  CHECK(StarPartition::one_double_star().to_string() == "[1**]");
  CHECK(StarPartition(Partition({1})).weight() == -1);
  CHECK(StarPartition(Partition({1})).crank() == 0);
}

TEST_CASE("property: starred weights sum to p(n) and cranks are symmetric") {
  const auto p = partition_numbers(16);
  for (int n = 0; n < 16; ++n) {
    std::map<int, Integer> dist;
    Integer total = 0;
    for (const StarPartition& s : enumerate_star(n)) {
      CHECK(s.size() == n);
      dist[s.crank()] += s.weight();
      total += s.weight();
    }
    CHECK(total == p[static_cast<std::size_t>(n)]);
    for (const auto& [c, w] : dist) CHECK(dist[-c] == w);
  }
}
