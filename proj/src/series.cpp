#include "qparity/series.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qparity {

namespace {

void require_same_order(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw std::invalid_argument(std::string(op) + ": order mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

void require_positive_exponent(std::size_t e, const char* op) {
  if (e == 0) {
    throw std::invalid_argument(std::string(op) + ": binomial exponent must be >= 1");
  }
}

}  // namespace

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series Series::one(std::size_t order) {
  Series s(order);
  s.coeffs_[0] = 1;
  return s;
}

Series Series::make(std::size_t order, std::initializer_list<Term> terms) {
  return make(order, std::span<const Term>(terms.begin(), terms.size()));
}

Series Series::make(std::size_t order, std::span<const Term> terms) {
  Series s(order);
  std::vector<bool> seen(order + 1, false);
  for (const auto& t : terms) {
    if (t.exponent > order) {
      throw std::invalid_argument("make: exponent " + std::to_string(t.exponent) +
                                  " exceeds order " + std::to_string(order));
    }
    if (seen[t.exponent]) {
      throw std::invalid_argument("make: repeated exponent " + std::to_string(t.exponent));
    }
    seen[t.exponent] = true;
    s.coeffs_[t.exponent] = t.coefficient;
  }
  return s;
}

const mpz_class& Series::coefficient(std::size_t n) const {
  if (n > order()) {
    throw std::out_of_range("coefficient: index " + std::to_string(n) + " exceeds order " +
                            std::to_string(order()));
  }
  return coeffs_[n];
}

void Series::add_monomial(std::size_t exponent, long coefficient) {
  if (exponent <= order()) coeffs_[exponent] += coefficient;
}

void Series::add_shifted(const Series& t, std::size_t offset, Sign sign) {
  const std::size_t n = order();
  if (offset > n) return;
  const std::size_t last = std::min(t.order(), n - offset);
  for (std::size_t i = 0; i <= last; ++i) {
    if (sign == Sign::plus) {
      coeffs_[i + offset] += t.coeffs_[i];
    } else {
      coeffs_[i + offset] -= t.coeffs_[i];
    }
  }
}

Series add(const Series& a, const Series& b) {
  require_same_order(a.order(), b.order(), "add");
  Series r = a;
  r.add_shifted(b, 0, Sign::plus);
  return r;
}

Series sub(const Series& a, const Series& b) {
  require_same_order(a.order(), b.order(), "sub");
  Series r = a;
  r.add_shifted(b, 0, Sign::minus);
  return r;
}

Series mul(const Series& a, const Series& b) {
  require_same_order(a.order(), b.order(), "mul");
  const std::size_t n = a.order();
  Series r(n);
  auto& acc = r.coeffs_;
  for (std::size_t i = 0; i <= n; ++i) {
    const mpz_class& ai = a[i];
    if (sgn(ai) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (sgn(b[j]) != 0) mpz_addmul(acc[i + j].get_mpz_t(), ai.get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return r;
}

Series mul_binomial(Series s, Sign sign, std::size_t e) {
  require_positive_exponent(e, "mul_binomial");
  auto& c = s.coeffs_;
  const std::size_t n = s.order();
  if (e > n) return s;
  for (std::size_t i = n; i >= e; --i) {
    if (sign == Sign::plus) {
      c[i] += c[i - e];
    } else {
      c[i] -= c[i - e];
    }
  }
  return s;
}

Series div_binomial(Series s, Sign sign, std::size_t e) {
  require_positive_exponent(e, "div_binomial");
  auto& c = s.coeffs_;
  const std::size_t n = s.order();
  for (std::size_t i = e; i <= n; ++i) {
    if (sign == Sign::plus) {
      c[i] -= c[i - e];
    } else {
      c[i] += c[i - e];
    }
  }
  return s;
}

bool equal(const Series& a, const Series& b) { return !first_difference(a, b).has_value(); }

std::optional<std::size_t> first_difference(const Series& a, const Series& b) {
  require_same_order(a.order(), b.order(), "first_difference");
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

}  // namespace qparity
