#include "heptaq/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace heptaq {

std::string to_string(PartitionClass cls) {
  switch (cls) {
    case PartitionClass::All: return "P";
    case PartitionClass::Odd: return "O";
    case PartitionClass::DistinctEven: return "DE";
    case PartitionClass::DistinctOdd: return "DO";
    case PartitionClass::Starred: return "P*";
  }
  return "?";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int part : parts_) {
    if (part < 1) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::sum() const noexcept {
  int s = 0;
  for (int part : parts_) s += part;
  return s;
}

int Partition::ones() const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), 1));
}

int Partition::parts_larger_than(int bound) const noexcept {
  return static_cast<int>(
      std::count_if(parts_.begin(), parts_.end(), [bound](int part) { return part > bound; }));
}

bool Partition::belongs_to(PartitionClass cls) const {
  const bool distinct = std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
  const bool all_odd = std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
  const bool all_even = std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 0; });
  switch (cls) {
    case PartitionClass::All:
    case PartitionClass::Starred: return true;
    case PartitionClass::Odd: return all_odd;
    case PartitionClass::DistinctEven: return distinct && all_even;
    case PartitionClass::DistinctOdd: return distinct && all_odd;
  }
  return false;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

int crank(const Partition& p) {
  if (p.length() == 0) return 0;
  const int n1 = p.ones();
  if (n1 == 0) return p.largest();
  return p.parts_larger_than(n1) - n1;
}

StarPartition::StarPartition(Partition p) : base_(std::move(p)) {
  if (base_.parts() == std::vector<int>{1}) tag_ = Tag::One;
}

StarPartition StarPartition::one_star() { return StarPartition(Partition({1}), Tag::OneStar); }

StarPartition StarPartition::one_double_star() {
  return StarPartition(Partition({1}), Tag::OneDoubleStar);
}

int StarPartition::weight() const noexcept { return tag_ == Tag::One ? -1 : 1; }

int StarPartition::crank() const noexcept {
  switch (tag_) {
    case Tag::Plain: return heptaq::crank(base_);
    case Tag::One: return 0;
    case Tag::OneStar: return 1;
    case Tag::OneDoubleStar: return -1;
  }
  return 0;
}

int StarPartition::size() const noexcept { return base_.sum(); }

std::string StarPartition::to_string() const {
  switch (tag_) {
    case Tag::OneStar: return "[1*]";
    case Tag::OneDoubleStar: return "[1**]";
    default: return base_.to_string();
  }
}

namespace {

void generate(int remaining, int max_part, int step, bool distinct, std::vector<int>& current,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  int start = max_part;
  if (start > remaining) start -= ((start - remaining + step - 1) / step) * step;
  for (int part = start; part >= 1; part -= step) {
    current.push_back(part);
    generate(remaining - part, distinct ? part - step : part, step, distinct, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate(int n, PartitionClass cls) {
  if (n < 0) throw std::invalid_argument("enumerate: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  switch (cls) {
    case PartitionClass::All:
      generate(n, n, 1, false, current, out);
      break;
    case PartitionClass::Odd: {
      const int top = n % 2 ? n : n - 1;
      if (n == 0) {
        out.emplace_back();
      } else {
        generate(n, top, 2, false, current, out);
      }
      break;
    }
    case PartitionClass::DistinctOdd: {
      const int top = n % 2 ? n : n - 1;
      if (n == 0) {
        out.emplace_back();
      } else {
        generate(n, top, 2, true, current, out);
      }
      break;
    }
    case PartitionClass::DistinctEven:
      if (n % 2 == 0) {
        if (n == 0) {
          out.emplace_back();
        } else {
          generate(n, n, 2, true, current, out);
        }
      }
      break;
    case PartitionClass::Starred:
      throw std::invalid_argument("enumerate: use enumerate_star for P*");
  }
  return out;
}

std::vector<StarPartition> enumerate_star(int n) {
  std::vector<StarPartition> out;
  for (Partition& p : enumerate(n, PartitionClass::All)) out.emplace_back(std::move(p));
  if (n == 1) {
    out.push_back(StarPartition::one_star());
    out.push_back(StarPartition::one_double_star());
  }
  return out;
}

std::vector<Integer> partition_numbers(std::size_t count) {
  std::vector<Integer> p(count);
  if (count == 0) return p;
  p[0] = 1;
  for (std::size_t n = 1; n < count; ++n) {
    // p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
    Integer acc = 0;
    for (std::size_t k = 1;; ++k) {
      const std::size_t g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const std::size_t g2 = k * (3 * k + 1) / 2;
      Integer term = p[n - g1];
      if (g2 <= n) term += p[n - g2];
      if (k % 2) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    p[n] = acc;
  }
  return p;
}

Integer partition_p(long n) {
  if (n < 0) return 0;
  return partition_numbers(static_cast<std::size_t>(n) + 1).back();
}

}  // namespace heptaq
