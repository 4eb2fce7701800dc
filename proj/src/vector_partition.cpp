#include "heptaq/vector_partition.hpp"

namespace heptaq {

std::string to_string(Family family) { return family == Family::V ? "V" : "W2"; }

Family parse_family(const std::string& text) {
  if (text == "V" || text == "v") return Family::V;
  if (text == "W2" || text == "w2" || text == "W") return Family::W2;
  throw std::invalid_argument("unknown family '" + text + "' (expected V or W2)");
}

int VectorPartition::size() const {
  int s = 0;
  for (const Partition& p : head) s += p.sum();
  for (const StarPartition& p : tail) s += t * p.size();
  return s;
}

int VectorPartition::weight() const {
  int w = head[0].length() % 2 ? -1 : 1;
  if (family == Family::W2) w *= tail[0].weight() * tail[1].weight();
  return w;
}

long VectorPartition::statistic(long h) const {
  return family == Family::V ? multirank(*this, h) : vector_crank(*this);
}

std::string VectorPartition::render() const {
  std::string out;
  for (const Partition& p : head) out += p.to_string() + ';';
  out += tail[0].to_string() + ';' + tail[1].to_string();
  return out;
}

long multirank(const VectorPartition& v, long h) {
  return (v.head[1].length() - v.head[2].length()) +
         2L * (v.head[3].length() - v.head[4].length()) +
         h * (v.tail[0].length() - v.tail[1].length());
}

long vector_crank(const VectorPartition& v) {
  return (v.head[1].length() - v.head[2].length()) +
         2L * (v.head[3].length() - v.head[4].length()) + v.tail[0].crank() +
         2L * v.tail[1].crank();
}

std::array<PartitionClass, 5> head_classes(Family) {
  // Both families use odd parts in components 2..5; the W_2 crank
  // generating function requires it (distinct odd parts would not
  // specialize to w_2 at z = 1).
  return {PartitionClass::DistinctEven, PartitionClass::Odd, PartitionClass::Odd,
          PartitionClass::Odd, PartitionClass::Odd};
}

namespace {

class VectorEnumerator {
 public:
  VectorEnumerator(Family family, int t, int n,
                   const std::function<void(const VectorPartition&)>& visit)
      : classes_(head_classes(family)), n_(n), visit_(visit) {
    current_.family = family;
    current_.t = t;
    for (int s = 0; s <= n; ++s) {
      distinct_even_.push_back(enumerate(s, PartitionClass::DistinctEven));
      odd_.push_back(enumerate(s, PartitionClass::Odd));
    }
    for (int s = 0; s * t <= n; ++s) {
      if (family == Family::W2) {
        tail_.push_back(enumerate_star(s));
      } else {
        std::vector<StarPartition> plain;
        for (Partition& p : enumerate(s, PartitionClass::All)) plain.emplace_back(std::move(p));
        tail_.push_back(std::move(plain));
      }
    }
  }

  void run() { head(0, n_); }

 private:
  const std::vector<Partition>& head_list(int component, int s) const {
    return classes_[static_cast<std::size_t>(component)] == PartitionClass::DistinctEven
               ? distinct_even_[static_cast<std::size_t>(s)]
               : odd_[static_cast<std::size_t>(s)];
  }

  void head(int component, int remaining) {
    if (component == 5) {
      tail(0, remaining);
      return;
    }
    for (int s = 0; s <= remaining; ++s) {
      for (const Partition& p : head_list(component, s)) {
        current_.head[static_cast<std::size_t>(component)] = p;
        head(component + 1, remaining - s);
      }
    }
  }

  void tail(int component, int remaining) {
    const int t = current_.t;
    if (component == 1) {
      if (remaining % t != 0) return;
      for (const StarPartition& p : tail_[static_cast<std::size_t>(remaining / t)]) {
        current_.tail[1] = p;
        visit_(current_);
      }
      return;
    }
    for (int s = 0; s * t <= remaining; ++s) {
      for (const StarPartition& p : tail_[static_cast<std::size_t>(s)]) {
        current_.tail[0] = p;
        tail(1, remaining - s * t);
      }
    }
  }

  std::array<PartitionClass, 5> classes_;
  int n_;
  const std::function<void(const VectorPartition&)>& visit_;
  VectorPartition current_;
  std::vector<std::vector<Partition>> distinct_even_;
  std::vector<std::vector<Partition>> odd_;
  std::vector<std::vector<StarPartition>> tail_;
};

void check_arguments(Family family, int t, int n, const EnumerationOptions& options) {
  if (n < 0) throw std::invalid_argument("vector partitions: n must be nonnegative");
  if (t < 1) throw std::invalid_argument("vector partitions: t must be positive");
  if (family == Family::W2 && t != 2) {
    throw std::invalid_argument("family W2 is defined only for t = 2");
  }
  if (n > options.max_size && !options.allow_large) {
    throw GuardrailError("enumeration of size " + std::to_string(n) + " exceeds the limit " +
                         std::to_string(options.max_size) + "; pass an override to proceed");
  }
}

}  // namespace

void for_each_vector(Family family, int t, int n,
                     const std::function<void(const VectorPartition&)>& visit,
                     const EnumerationOptions& options) {
  check_arguments(family, t, n, options);
  VectorEnumerator(family, t, n, visit).run();
}

std::vector<VectorPartition> enumerate_vectors(Family family, int t, int n,
                                               const EnumerationOptions& options) {
  std::vector<VectorPartition> out;
  for_each_vector(family, t, n, [&](const VectorPartition& v) { out.push_back(v); }, options);
  return out;
}

Distribution statistic_distribution(Family family, int t, int n, long h,
                                    const EnumerationOptions& options) {
  Distribution dist;
  for_each_vector(
      family, t, n, [&](const VectorPartition& v) { dist[v.statistic(h)] += v.weight(); },
      options);
  std::erase_if(dist, [](const auto& entry) { return sgn(entry.second) == 0; });
  return dist;
}

std::vector<Integer> residue_counts(const Distribution& distribution, long m) {
  if (m < 1) throw std::invalid_argument("residue_counts: modulus must be positive");
  std::vector<Integer> counts(static_cast<std::size_t>(m));
  for (const auto& [stat, count] : distribution) {
    counts[static_cast<std::size_t>(((stat % m) + m) % m)] += count;
  }
  return counts;
}

Integer weighted_count(Family family, int t, int n, long k, long m,
                       const EnumerationOptions& options) {
  const auto counts = residue_counts(statistic_distribution(family, t, n, 2, options), m);
  return counts[static_cast<std::size_t>(((k % m) + m) % m)];
}

ProductSpec statistic_generating_function(Family family, int t, long h) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  ProductSpec spec;
  if (family == Family::V) {
    const auto tt = static_cast<std::size_t>(t);
    spec.factors = {{0, 2, 2, 1},   {1, 1, 2, -1},  {-1, 1, 2, -1}, {2, 1, 2, -1},
                    {-2, 1, 2, -1}, {h, tt, tt, -1}, {-h, tt, tt, -1}};
  } else {
    if (t != 2) throw std::invalid_argument("family W2 is defined only for t = 2");
    spec.factors = {{0, 2, 2, 3}, {1, 1, 1, -1}, {-1, 1, 1, -1}, {2, 1, 1, -1}, {-2, 1, 1, -1}};
  }
  return spec;
}

BivariateSeries series_counts(Family family, int t, std::size_t precision, long h) {
  return expand_bivariate(statistic_generating_function(family, t, h), precision);
}

}  // namespace heptaq
