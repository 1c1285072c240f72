#pragma once

// Truncated formal power series in q: an exact variant over arbitrary-precision
// integers and a bit-packed variant over GF(2).
//
// Both types carry a fixed inclusive truncation order N and hold exactly N+1
// coefficients. Binary operations on series of different orders throw rather
// than re-truncate.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qparity {

/// Sign of the q-power inside a binomial factor (1 + sign * q^e).
enum class Sign : int { minus = -1, plus = 1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::plus ? Sign::minus : Sign::plus;
}

struct Term {
  std::size_t exponent;
  mpz_class coefficient;
};

class ParitySeries;

class Series {
 public:
  explicit Series(std::size_t order);

  static Series zero(std::size_t order) { return Series(order); }
  static Series one(std::size_t order);
  /// Throws std::invalid_argument on an exponent above `order` or a repeated exponent.
  static Series make(std::size_t order, std::initializer_list<Term> terms);
  static Series make(std::size_t order, std::span<const Term> terms);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }

  const mpz_class& operator[](std::size_t n) const noexcept { return coeffs_[n]; }
  /// Bounds-checked; throws std::out_of_range when n > order().
  const mpz_class& coefficient(std::size_t n) const;
  std::span<const mpz_class> coefficients() const noexcept { return coeffs_; }

  // Construction helpers used by the builders. Contributions above the
  // truncation order are dropped.
  void add_monomial(std::size_t exponent, long coefficient);
  void add_shifted(const Series& t, std::size_t offset, Sign sign);

  friend Series mul(const Series& a, const Series& b);
  friend Series mul_binomial(Series s, Sign sign, std::size_t e);
  friend Series div_binomial(Series s, Sign sign, std::size_t e);

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<mpz_class> coeffs_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);

/// s * (1 + sign q^e) in one pass. e = 0 is rejected.
Series mul_binomial(Series s, Sign sign, std::size_t e);
/// The unique t with mul_binomial(t, sign, e) == s.
Series div_binomial(Series s, Sign sign, std::size_t e);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

bool equal(const Series& a, const Series& b);
/// Smallest exponent where a and b differ; nullopt when equal. Orders must match.
std::optional<std::size_t> first_difference(const Series& a, const Series& b);

/// Coefficients mod 2, packed 64 per word (bit i of word w is q^{64w+i}).
class ParitySeries {
 public:
  explicit ParitySeries(std::size_t order);

  static ParitySeries zero(std::size_t order) { return ParitySeries(order); }
  static ParitySeries one(std::size_t order);
  static ParitySeries from_support(std::size_t order, std::span<const std::size_t> exponents);

  std::size_t order() const noexcept { return order_; }

  bool operator[](std::size_t n) const noexcept { return (words_[n / 64] >> (n % 64)) & 1U; }
  bool bit(std::size_t n) const;
  void flip(std::size_t n);
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::vector<std::size_t> support() const;
  std::size_t popcount() const noexcept;

  void add_monomial(std::size_t exponent, long coefficient);
  void add_shifted(const ParitySeries& t, std::size_t offset, Sign sign);

  friend ParitySeries add(const ParitySeries& a, const ParitySeries& b);
  friend ParitySeries mul(const ParitySeries& a, const ParitySeries& b);
  friend ParitySeries mul_binomial(ParitySeries s, Sign sign, std::size_t e);
  friend ParitySeries div_binomial(ParitySeries s, Sign sign, std::size_t e);
  friend ParitySeries to_parity(const Series& s);

  friend bool operator==(const ParitySeries&, const ParitySeries&) = default;

 private:
  void xor_shifted(std::span<const std::uint64_t> src, std::size_t offset);
  void clear_tail() noexcept;

  std::size_t order_;
  std::vector<std::uint64_t> words_;
};

ParitySeries to_parity(const Series& s);
ParitySeries add(const ParitySeries& a, const ParitySeries& b);
ParitySeries sub(const ParitySeries& a, const ParitySeries& b);
ParitySeries mul(const ParitySeries& a, const ParitySeries& b);
ParitySeries mul_binomial(ParitySeries s, Sign sign, std::size_t e);
ParitySeries div_binomial(ParitySeries s, Sign sign, std::size_t e);

inline ParitySeries operator+(const ParitySeries& a, const ParitySeries& b) { return add(a, b); }
inline ParitySeries operator*(const ParitySeries& a, const ParitySeries& b) { return mul(a, b); }

// Names used where the exact and mod-2 pipelines appear side by side.
inline ParitySeries parity_add(const ParitySeries& a, const ParitySeries& b) { return add(a, b); }
inline ParitySeries parity_mul(const ParitySeries& a, const ParitySeries& b) { return mul(a, b); }
inline ParitySeries parity_mul_binomial(ParitySeries s, Sign sign, std::size_t e) {
  return mul_binomial(std::move(s), sign, e);
}
inline ParitySeries parity_div_binomial(ParitySeries s, Sign sign, std::size_t e) {
  return div_binomial(std::move(s), sign, e);
}

bool equal(const ParitySeries& a, const ParitySeries& b);
std::optional<std::size_t> first_difference(const ParitySeries& a, const ParitySeries& b);

}  // namespace qparity
