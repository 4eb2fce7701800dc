#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "heptaq/qseries.hpp"

namespace heptaq {

enum class PartitionClass {
  All,           // P
  Odd,           // O: odd parts
  DistinctEven,  // DE: distinct even parts
  DistinctOdd,   // DO: distinct odd parts
  Starred,       // P*: P with two extra copies of the partition 1
};

std::string to_string(PartitionClass cls);

/// Ordinary partition, parts kept in non-increasing order.
class Partition {
 public:
  Partition() = default;
  /// Parts in any order; throws std::invalid_argument on a part < 1.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int sum() const noexcept;
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int ones() const noexcept;
  int parts_larger_than(int bound) const noexcept;

  bool belongs_to(PartitionClass cls) const;

  /// "[3,1,1]"; the empty partition renders as "[]".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Andrews-Garvan crank: the largest part when there are no ones, else
/// (number of parts larger than the number of ones) - (number of ones).
/// The empty partition has crank 0.
int crank(const Partition& p);

/// Element of P*. Kim's extension keeps every partition of P; the
/// partition (1) itself carries weight -1 and crank 0, and two tagged
/// copies 1* (crank 1) and 1** (crank -1) are added with weight +1.
class StarPartition {
 public:
  enum class Tag { Plain, One, OneStar, OneDoubleStar };

  StarPartition() = default;
  /// Wraps an ordinary partition; (1) becomes the One object.
  explicit StarPartition(Partition p);
  static StarPartition one_star();
  static StarPartition one_double_star();

  Tag tag() const noexcept { return tag_; }
  const Partition& base() const noexcept { return base_; }

  int weight() const noexcept;  // wt*
  int crank() const noexcept;   // c*
  int size() const noexcept;    // sigma*
  int length() const noexcept { return base_.length(); }

  /// "[3,1]", "[1]", "[1*]" or "[1**]".
  std::string to_string() const;

  friend bool operator==(const StarPartition&, const StarPartition&) = default;

 private:
  StarPartition(Partition p, Tag tag) : base_(std::move(p)), tag_(tag) {}
  Partition base_;
  Tag tag_ = Tag::Plain;
};

/// All partitions of n in the class, without duplicates, parts descending
/// and partitions in reverse lexicographic order. PartitionClass::Starred
/// is rejected here; use enumerate_star.
std::vector<Partition> enumerate(int n, PartitionClass cls);

/// All elements of P* of size n; n = 1 yields (1), 1* and 1**.
std::vector<StarPartition> enumerate_star(int n);

/// p(n) from Euler's pentagonal recurrence (independent of series code).
std::vector<Integer> partition_numbers(std::size_t count);
Integer partition_p(long n);

}  // namespace heptaq
