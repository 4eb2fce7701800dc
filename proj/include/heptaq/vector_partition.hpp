#pragma once

// Seven-component vector partitions and their statistics.
//
//   V_t : (DE, O, O, O, O, P, P)    weight (-1)^{l(l1)}, statistic r7 (multirank)
//   W_2 : (DE, O, O, O, O, P*, P*)  weight (-1)^{l(l1)} wt*(l6) wt*(l7), statistic c7
//
// Components 6 and 7 are scaled by t (t = 2 for W_2) in the size.

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "heptaq/bivariate.hpp"
#include "heptaq/partitions.hpp"

namespace heptaq {

enum class Family { V, W2 };

std::string to_string(Family family);
Family parse_family(const std::string& text);

class GuardrailError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  int max_size = 24;
  bool allow_large = false;
};

struct VectorPartition {
  Family family = Family::V;
  int t = 1;
  std::array<Partition, 5> head;     // lambda_1 .. lambda_5
  std::array<StarPartition, 2> tail;  // lambda_6, lambda_7 (scaled by t)

  int size() const;
  int weight() const;
  /// r7 for V_t (h weights the l6 - l7 term), c7 for W_2 (h ignored).
  long statistic(long h = 2) const;

  /// Components as "[..];[..];...;[..]" with components 6 and 7 unscaled.
  std::string render() const;
};

/// r7 = l(l2) - l(l3) + 2(l(l4) - l(l5)) + h(l(l6) - l(l7)).
long multirank(const VectorPartition& v, long h = 2);

/// c7 = l(l2) - l(l3) + 2(l(l4) - l(l5)) + c*(l6) + 2 c*(l7).
long vector_crank(const VectorPartition& v);

/// Component classes of the first five components of a family.
std::array<PartitionClass, 5> head_classes(Family family);

/// Calls `visit` once per vector partition of size n, directly from the
/// definitions. Throws GuardrailError for n above the configured limit.
void for_each_vector(Family family, int t, int n,
                     const std::function<void(const VectorPartition&)>& visit,
                     const EnumerationOptions& options = {});

std::vector<VectorPartition> enumerate_vectors(Family family, int t, int n,
                                               const EnumerationOptions& options = {});

/// statistic value -> weighted count, zero counts omitted.
using Distribution = std::map<long, Integer>;

Distribution statistic_distribution(Family family, int t, int n, long h = 2,
                                    const EnumerationOptions& options = {});

/// N(k, m, n): weighted count with statistic congruent to k mod m.
Integer weighted_count(Family family, int t, int n, long k, long m,
                       const EnumerationOptions& options = {});

/// [N(0,m,n), ..., N(m-1,m,n)].
std::vector<Integer> residue_counts(const Distribution& distribution, long m);

/// The two-variable generating function as a product:
///   V_t : (q^2;q^2) / ((zq, z^-1 q, z^2 q, z^-2 q; q^2) (z^h q^t, z^-h q^t; q^t))
///   W_2 : f2^3 / (zq, z^-1 q, z^2 q, z^-2 q; q)
ProductSpec statistic_generating_function(Family family, int t, long h = 2);

/// Expansion of statistic_generating_function.
BivariateSeries series_counts(Family family, int t, std::size_t precision, long h = 2);

}  // namespace heptaq
