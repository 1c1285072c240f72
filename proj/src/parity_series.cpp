#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "qparity/series.hpp"

namespace qparity {

namespace {

constexpr std::size_t word_count(std::size_t order) { return order / 64 + 1; }

void require_same_order(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw std::invalid_argument(std::string(op) + ": order mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

ParitySeries::ParitySeries(std::size_t order) : order_(order), words_(word_count(order), 0) {}

ParitySeries ParitySeries::one(std::size_t order) {
  ParitySeries s(order);
  s.words_[0] = 1;
  return s;
}

ParitySeries ParitySeries::from_support(std::size_t order, std::span<const std::size_t> exponents) {
  ParitySeries s(order);
  for (auto e : exponents) {
    if (e > order) {
      throw std::invalid_argument("from_support: exponent " + std::to_string(e) +
                                  " exceeds order " + std::to_string(order));
    }
    s.flip(e);
  }
  return s;
}

bool ParitySeries::bit(std::size_t n) const {
  if (n > order_) {
    throw std::out_of_range("bit: index " + std::to_string(n) + " exceeds order " +
                            std::to_string(order_));
  }
  return (*this)[n];
}

void ParitySeries::flip(std::size_t n) {
  if (n > order_) return;
  words_[n / 64] ^= std::uint64_t{1} << (n % 64);
}

std::vector<std::size_t> ParitySeries::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t ParitySeries::popcount() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void ParitySeries::add_monomial(std::size_t exponent, long coefficient) {
  if (coefficient % 2 != 0) flip(exponent);
}

void ParitySeries::add_shifted(const ParitySeries& t, std::size_t offset, Sign) {
  if (offset > order_) return;
  xor_shifted(t.words_, offset);
}

// this ^= (src << offset), truncated at order_. src must not alias words_
// unless offset is zero or the caller iterates from the high end (handled here).
void ParitySeries::xor_shifted(std::span<const std::uint64_t> src, std::size_t offset) {
  const std::size_t word_shift = offset / 64;
  const unsigned bit_shift = static_cast<unsigned>(offset % 64);
  const std::size_t n = words_.size();
  if (word_shift >= n) return;
  // Descending order keeps the in-place case (src aliasing words_) correct.
  for (std::size_t dst = n; dst-- > word_shift;) {
    const std::size_t s = dst - word_shift;
    std::uint64_t v = s < src.size() ? src[s] << bit_shift : 0;
    if (bit_shift != 0 && s >= 1 && s - 1 < src.size()) v |= src[s - 1] >> (64 - bit_shift);
    words_[dst] ^= v;
  }
  clear_tail();
}

void ParitySeries::clear_tail() noexcept {
  const unsigned used = static_cast<unsigned>(order_ % 64) + 1;
  if (used < 64) words_.back() &= (std::uint64_t{1} << used) - 1;
}

ParitySeries to_parity(const Series& s) {
  ParitySeries p(s.order());
  for (std::size_t i = 0; i <= s.order(); ++i) {
    if (mpz_odd_p(s[i].get_mpz_t())) p.flip(i);
  }
  return p;
}

ParitySeries add(const ParitySeries& a, const ParitySeries& b) {
  require_same_order(a.order(), b.order(), "parity_add");
  ParitySeries r = a;
  for (std::size_t w = 0; w < r.words_.size(); ++w) r.words_[w] ^= b.words_[w];
  return r;
}

ParitySeries sub(const ParitySeries& a, const ParitySeries& b) { return add(a, b); }

ParitySeries mul(const ParitySeries& a, const ParitySeries& b) {
  require_same_order(a.order(), b.order(), "parity_mul");
  ParitySeries r(a.order());
  for (auto i : a.support()) r.xor_shifted(b.words_, i);
  return r;
}

ParitySeries mul_binomial(ParitySeries s, Sign, std::size_t e) {
  if (e == 0) throw std::invalid_argument("mul_binomial: binomial exponent must be >= 1");
  if (e > s.order_) return s;
  s.xor_shifted(s.words_, e);
  return s;
}

// Over GF(2), 1/(1 + q^e) = prod_{k>=0} (1 + q^{e 2^k}).
ParitySeries div_binomial(ParitySeries s, Sign, std::size_t e) {
  if (e == 0) throw std::invalid_argument("div_binomial: binomial exponent must be >= 1");
  for (std::size_t shift = e; shift <= s.order_; shift *= 2) {
    s.xor_shifted(s.words_, shift);
  }
  return s;
}

bool equal(const ParitySeries& a, const ParitySeries& b) {
  return !first_difference(a, b).has_value();
}

std::optional<std::size_t> first_difference(const ParitySeries& a, const ParitySeries& b) {
  require_same_order(a.order(), b.order(), "first_difference");
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) {
    if (const std::uint64_t d = wa[w] ^ wb[w]; d != 0) {
      return w * 64 + static_cast<std::size_t>(std::countr_zero(d));
    }
  }
  return std::nullopt;
}

}  // namespace qparity
