#pragma once

// Truncated univariate power series in q with exact integer coefficients.
//
// A series of precision N stores exactly the coefficients of q^0 .. q^{N-1};
// everything at or beyond q^N is unknown. Binary operations yield the
// minimum of the operand precisions, and no operation ever reads an
// unknown coefficient.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace heptaq {

using Integer = mpz_class;

/// Raised when inverting a series whose constant term is not +1 or -1.
class NonUnitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a caller asks for coefficients beyond a series' precision.
class PrecisionError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class QSeries {
 public:
  QSeries() = default;

  /// Zero series known to precision N.
  explicit QSeries(std::size_t precision) : coeffs_(precision) {}

  /// Takes ownership of the coefficients; precision is their count.
  explicit QSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}

  static QSeries from_ints(std::initializer_list<long> values);
  static QSeries constant(const Integer& value, std::size_t precision);
  static QSeries one(std::size_t precision) { return constant(1, precision); }

  std::size_t precision() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }

  const Integer& operator[](std::size_t n) const { return coeffs_[n]; }
  Integer& operator[](std::size_t n) { return coeffs_[n]; }

  /// Bounds-checked read; throws PrecisionError past the precision.
  const Integer& at(std::size_t n) const;

  std::span<const Integer> coefficients() const noexcept { return coeffs_; }

  /// The first N coefficients. N must not exceed the precision.
  QSeries truncated(std::size_t n) const;

  bool is_zero() const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<Integer> coeffs_;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries& operator+=(QSeries& a, const QSeries& b);
QSeries& operator*=(QSeries& a, const QSeries& b);

QSeries scale(const QSeries& s, const Integer& factor);

/// Multiplicative inverse; the constant term must be +1 or -1.
QSeries inverse(const QSeries& s);

/// s^e for any integer e. Negative exponents go through inverse().
QSeries power(const QSeries& s, long exponent);

/// q^k * s. The low k coefficients become known zeros, so the precision
/// grows by k.
QSeries shift(const QSeries& s, std::size_t k);

/// s(q^k). Precision becomes precision(s) * k.
QSeries substitute_power(const QSeries& s, std::size_t k);

/// Series whose n-th coefficient is s[m*n + r], with precision
/// ceil((precision(s) - r) / m).
QSeries dissect(const QSeries& s, std::size_t m, std::size_t r);

/// Truncation of prod_{n>=0} (1 - q^{offset + n*step}).
QSeries pochhammer_series(std::size_t offset, std::size_t step, std::size_t precision);

struct Mismatch {
  std::size_t index = 0;
  Integer lhs;
  Integer rhs;
};

struct Comparison {
  bool equal = true;
  std::optional<Mismatch> mismatch;

  explicit operator bool() const noexcept { return equal; }
};

/// Compares the first N coefficients, optionally modulo `modulus`.
/// Asking for N beyond either precision is an error, never a silent pass.
Comparison equal_upto(const QSeries& a, const QSeries& b, std::size_t n,
                      const std::optional<Integer>& modulus = std::nullopt);

/// Decimal rendering used by reports and the CLI.
std::string to_decimal(const Integer& value);

}  // namespace heptaq
