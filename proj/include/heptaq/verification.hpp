#pragma once

#include <cstddef>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "heptaq/bivariate.hpp"
#include "heptaq/report.hpp"
#include "heptaq/theta.hpp"
#include "heptaq/vector_partition.hpp"

namespace heptaq {

/// A named coefficient family such as w_t with t = 3.
struct SourceRef {
  std::string name;
  SeriesParams params;

  std::string label() const { return series_label(name, params); }
};

/// source[a*n + b] == 0 (mod modulus) for 0 <= n <= n_max. Without a
/// modulus the coefficients must vanish exactly.
struct CongruenceSpec {
  std::string id;
  std::string anchor;
  SourceRef source;
  std::size_t a = 1;
  std::size_t b = 0;
  std::optional<long> modulus;
  std::size_t n_max = 100;
  bool expect_failure = false;

  void validate() const;
  std::size_t required_precision() const { return a * n_max + b + 1; }
};

/// Residue classes of the statistic modulo m carry equal weighted counts
/// at every index a*n + b, each equal to w(a*n + b) / m.
struct EquidistributionSpec {
  std::string id;
  std::string anchor;
  Family family = Family::V;
  int t = 1;
  long m = 5;
  std::size_t a = 5;
  std::size_t b = 4;
  std::size_t n_max = 30;
  int enumeration_limit = 10;  // largest index also checked by enumeration
  bool expect_failure = false;

  void validate() const;
  std::size_t required_precision() const { return a * n_max + b + 1; }
};

/// Series materialized once per (source, precision) and shared between
/// checks. Safe for concurrent use; concurrent requests for the same key
/// wait on a single computation.
class SeriesCache {
 public:
  explicit SeriesCache(std::size_t precision) : precision_(precision) {}

  std::size_t precision() const noexcept { return precision_; }

  /// The named series at the cache precision.
  std::shared_ptr<const QSeries> univariate(const SourceRef& source);

  /// The rank (V_t) or crank (W_2) generating function at `precision`.
  std::shared_ptr<const BivariateSeries> bivariate(Family family, int t, std::size_t precision);

 private:
  template <typename T, typename Make>
  std::shared_ptr<const T> lookup(std::map<std::string, std::shared_future<std::shared_ptr<const T>>>& table,
                                  const std::string& key, Make make);

  std::size_t precision_;
  std::mutex mutex_;
  std::map<std::string, std::shared_future<std::shared_ptr<const QSeries>>> univariate_;
  std::map<std::string, std::shared_future<std::shared_ptr<const BivariateSeries>>> bivariate_;
};

Report check_congruence(const CongruenceSpec& spec, const QSeries& source);
Report check_congruence(const CongruenceSpec& spec, SeriesCache& cache);

/// Uses residue buckets of the generating function for every n <= n_max
/// and, for indices up to enumeration_limit, also brute-force enumeration;
/// both routes must agree.
Report check_equidistribution(const EquidistributionSpec& spec, SeriesCache& cache);

/// a2(11n + 120) = 11^4 a2(n/11) for n <= n_max, where a2 = f2^14/f1^4
/// and a2 of a non-integer is 0.
Report check_relation_chl(std::size_t n_max, SeriesCache& cache);

/// The 28 vectors of V_4 at size 3 against the published multirank table.
Report check_table1();

/// Enumeration distributions against generating-function coefficients for
/// n <= n_max, plus symmetry, totals and (for V_t) nonnegativity.
Report check_oracle_equivalence(Family family, int t, int n_max);

/// N_{V_t}(m, n) >= 0 for all gf coefficients below `precision`.
Report check_nonnegativity(const std::vector<int>& ts, std::size_t precision, SeriesCache& cache);

/// sum over P* of wt* z^{c*} q^{sigma*} equals f1/((zq;q)(z^-1 q;q)).
Report check_kim_identity(std::size_t precision);

/// c_t(n) by enumeration against the generating function for n <= n_max.
Report check_parity_enumeration(int t, int n_max);

/// d(n) against the pentagonal formula for n <= n_max, and against the
/// vector-crank enumeration for n <= enumeration_limit.
Report check_vector_crank_parity(std::size_t n_max, int enumeration_limit, SeriesCache& cache);

/// c_4(2k) = p(k) for k <= k_max and c_4(odd) = 0.
Report check_c4_partition(std::size_t k_max, SeriesCache& cache);

/// Product and closed-sum forms of phi, psi, phi(-q), f1, f1^3.
Report check_dual_forms(std::size_t precision);

/// The published multirank table: label (parts written value_color) and
/// (weight, multirank).
struct TableRow {
  std::string label;
  int weight;
  long multirank;
};
const std::vector<TableRow>& table1_rows();

/// Parses "2_1+1_2" (value_color, colors 1..7 = components) into a vector
/// partition of V_t. Parts of colors 6 and 7 are the scaled values.
VectorPartition parse_colored(const std::string& label, int t);

}  // namespace heptaq
