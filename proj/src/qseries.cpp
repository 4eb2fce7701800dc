#include "heptaq/qseries.hpp"

#include <algorithm>

namespace heptaq {

QSeries QSeries::from_ints(std::initializer_list<long> values) {
  std::vector<Integer> coeffs;
  coeffs.reserve(values.size());
  for (long v : values) coeffs.emplace_back(v);
  return QSeries(std::move(coeffs));
}

QSeries QSeries::constant(const Integer& value, std::size_t precision) {
  QSeries s(precision);
  if (precision > 0) s.coeffs_[0] = value;
  return s;
}

const Integer& QSeries::at(std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw PrecisionError("coefficient q^" + std::to_string(n) +
                         " is beyond precision " + std::to_string(coeffs_.size()));
  }
  return coeffs_[n];
}

QSeries QSeries::truncated(std::size_t n) const {
  if (n > coeffs_.size()) {
    throw PrecisionError("cannot truncate a series of precision " +
                         std::to_string(coeffs_.size()) + " to " + std::to_string(n));
  }
  return QSeries(std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + n));
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Integer& c) { return sgn(c) == 0; });
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  QSeries out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
  return out;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  QSeries out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
  return out;
}

QSeries operator-(const QSeries& a) {
  QSeries out(a.precision());
  for (std::size_t i = 0; i < a.precision(); ++i) out[i] = -a[i];
  return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  QSeries out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_srcptr ai = a[i].get_mpz_t();
    if (mpz_sgn(ai) == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      const mpz_srcptr bj = b[j].get_mpz_t();
      if (mpz_sgn(bj) == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), ai, bj);
    }
  }
  return out;
}

QSeries& operator+=(QSeries& a, const QSeries& b) { return a = a + b; }
QSeries& operator*=(QSeries& a, const QSeries& b) { return a = a * b; }

QSeries scale(const QSeries& s, const Integer& factor) {
  QSeries out(s.precision());
  for (std::size_t i = 0; i < s.precision(); ++i) out[i] = s[i] * factor;
  return out;
}

QSeries inverse(const QSeries& s) {
  const std::size_t n = s.precision();
  if (n == 0) return s;
  const int c0 = (s[0] == 1) ? 1 : (s[0] == -1 ? -1 : 0);
  if (c0 == 0) {
    throw NonUnitError("series with constant term " + to_decimal(s[0]) +
                       " is not a unit");
  }
  // b_0 = c0, b_k = -c0 * sum_{j=1..k} s_j b_{k-j}
  QSeries out(n);
  out[0] = c0;
  Integer acc;
  for (std::size_t k = 1; k < n; ++k) {
    acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      const mpz_srcptr sj = s[j].get_mpz_t();
      if (mpz_sgn(sj) == 0) continue;
      mpz_addmul(acc.get_mpz_t(), sj, out[k - j].get_mpz_t());
    }
    out[k] = (c0 == 1) ? Integer(-acc) : acc;
  }
  return out;
}

QSeries power(const QSeries& s, long exponent) {
  if (exponent < 0) return inverse(power(s, -exponent));
  QSeries result = QSeries::one(s.precision());
  QSeries base = s;
  auto e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

QSeries shift(const QSeries& s, std::size_t k) {
  QSeries out(s.precision() + k);
  for (std::size_t i = 0; i < s.precision(); ++i) out[i + k] = s[i];
  return out;
}

QSeries substitute_power(const QSeries& s, std::size_t k) {
  if (k == 0) throw std::invalid_argument("substitute_power: k must be positive");
  QSeries out(s.precision() * k);
  for (std::size_t i = 0; i < s.precision(); ++i) out[i * k] = s[i];
  return out;
}

QSeries dissect(const QSeries& s, std::size_t m, std::size_t r) {
  if (m == 0) throw std::invalid_argument("dissect: modulus must be positive");
  if (r >= m) {
    throw std::invalid_argument("dissect: residue " + std::to_string(r) +
                                " out of range for modulus " + std::to_string(m));
  }
  const std::size_t n = s.precision() > r ? (s.precision() - r + m - 1) / m : 0;
  QSeries out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = s[m * i + r];
  return out;
}

QSeries pochhammer_series(std::size_t offset, std::size_t step, std::size_t precision) {
  if (offset == 0 || step == 0) {
    throw std::invalid_argument("pochhammer_series: offset and step must be positive");
  }
  QSeries out = QSeries::one(precision);
  for (std::size_t d = offset; d < precision; d += step) {
    for (std::size_t n = precision; n-- > d;) out[n] -= out[n - d];
  }
  return out;
}

Comparison equal_upto(const QSeries& a, const QSeries& b, std::size_t n,
                      const std::optional<Integer>& modulus) {
  if (n > a.precision() || n > b.precision()) {
    throw PrecisionError("equal_upto: requested " + std::to_string(n) +
                         " coefficients but precisions are " +
                         std::to_string(a.precision()) + " and " +
                         std::to_string(b.precision()));
  }
  if (modulus && sgn(*modulus) <= 0) {
    throw std::invalid_argument("equal_upto: modulus must be positive");
  }
  Integer diff;
  for (std::size_t i = 0; i < n; ++i) {
    bool same;
    if (modulus) {
      diff = a[i] - b[i];
      same = mpz_divisible_p(diff.get_mpz_t(), modulus->get_mpz_t()) != 0;
    } else {
      same = a[i] == b[i];
    }
    if (!same) return Comparison{false, Mismatch{i, a[i], b[i]}};
  }
  return Comparison{};
}

std::string to_decimal(const Integer& value) { return value.get_str(10); }

}  // namespace heptaq
