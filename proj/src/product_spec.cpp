#include "heptaq/product_spec.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace heptaq {

bool ProductSpec::is_univariate() const {
  return z_shift == 0 && std::all_of(factors.begin(), factors.end(),
                                     [](const Factor& fc) { return fc.z_exponent == 0; });
}

void ProductSpec::validate() const {
  for (const Factor& fc : factors) {
    if (fc.q_offset == 0) {
      throw std::invalid_argument("product factor has q-offset 0; the product would not be a power series");
    }
    if (fc.q_step == 0) throw std::invalid_argument("product factor has q-step 0");
    if (fc.exponent == 0) throw std::invalid_argument("product factor has exponent 0");
  }
}

ProductSpec& ProductSpec::operator*=(const ProductSpec& other) {
  factors.insert(factors.end(), other.factors.begin(), other.factors.end());
  scalar *= other.scalar;
  z_shift += other.z_shift;
  q_shift += other.q_shift;
  return *this;
}

ProductSpec operator*(ProductSpec a, const ProductSpec& b) { return a *= b; }

std::string ProductSpec::describe() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << ' ';
    first = false;
  };
  if (scalar != 1 || factors.empty()) {
    sep();
    os << scalar.get_str();
  }
  if (z_shift != 0) {
    sep();
    os << "z^" << z_shift;
  }
  if (q_shift != 0) {
    sep();
    os << "q^" << q_shift;
  }
  for (const Factor& fc : factors) {
    sep();
    if (fc.z_exponent == 0 && fc.q_offset == fc.q_step) {
      os << 'f' << fc.q_step;
    } else {
      os << '(';
      if (fc.z_exponent != 0) os << "z^" << fc.z_exponent << ' ';
      os << "q^" << fc.q_offset << ";q^" << fc.q_step << ')';
    }
    if (fc.exponent != 1) os << '^' << fc.exponent;
  }
  return os.str();
}

ProductSpec f(std::size_t k, long exponent) {
  return ProductSpec{{Factor{0, k, k, exponent}}};
}

ProductSpec eta_quotient(std::initializer_list<std::pair<std::size_t, long>> powers) {
  ProductSpec spec;
  for (const auto& [k, e] : powers) spec.factors.push_back(Factor{0, k, k, e});
  return spec;
}

ProductSpec pochhammer(std::size_t offset, std::size_t step, long exponent) {
  return ProductSpec{{Factor{0, offset, step, exponent}}};
}

QSeries expand(const ProductSpec& spec, std::size_t precision) {
  spec.validate();
  if (!spec.is_univariate()) {
    throw std::invalid_argument("expand: spec carries z-exponents; use expand_bivariate");
  }
  if (precision <= spec.q_shift) return QSeries(precision);
  const std::size_t n_inner = precision - spec.q_shift;

  // q d/dq log prod (1 - q^d)^e = -e * sum_{r>=1} d q^{rd}
  std::vector<std::int64_t> log_deriv(n_inner, 0);
  for (const Factor& fc : spec.factors) {
    for (std::size_t d = fc.q_offset; d < n_inner; d += fc.q_step) {
      const auto contribution = -static_cast<std::int64_t>(fc.exponent) * static_cast<std::int64_t>(d);
      for (std::size_t j = d; j < n_inner; j += d) log_deriv[j] += contribution;
    }
  }

  QSeries inner(n_inner);
  inner[0] = 1;
  Integer acc;
  for (std::size_t n = 1; n < n_inner; ++n) {
    acc = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::int64_t l = log_deriv[j];
      if (l == 0) continue;
      const mpz_srcptr prev = inner[n - j].get_mpz_t();
      if (l > 0) {
        mpz_addmul_ui(acc.get_mpz_t(), prev, static_cast<unsigned long>(l));
      } else {
        mpz_submul_ui(acc.get_mpz_t(), prev, static_cast<unsigned long>(-l));
      }
    }
    mpz_divexact_ui(inner[n].get_mpz_t(), acc.get_mpz_t(), n);
  }

  QSeries out(precision);
  for (std::size_t n = 0; n < n_inner; ++n) out[n + spec.q_shift] = inner[n] * spec.scalar;
  return out;
}

}  // namespace heptaq
