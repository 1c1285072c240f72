#pragma once

// Declarative descriptions of q-Pochhammer products, theta series and
// Slater-type sums. The builders in builders.hpp turn these into series of
// either flavour (exact or mod 2).

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qparity/series.hpp"

namespace qparity {

/// slope * n + offset, where n is the outer summation index.
struct Affine {
  std::int64_t slope = 0;
  std::int64_t offset = 0;

  constexpr Affine() = default;
  constexpr Affine(std::int64_t constant) : offset(constant) {}  // NOLINT(google-explicit-constructor)
  constexpr Affine(std::int64_t s, std::int64_t c) : slope(s), offset(c) {}

  constexpr std::int64_t at(std::int64_t n) const noexcept { return slope * n + offset; }
  constexpr bool constant() const noexcept { return slope == 0; }
  friend constexpr bool operator==(const Affine&, const Affine&) = default;
};

/// k*n + c, for writing index-dependent factor bounds.
constexpr Affine idx(std::int64_t k = 1, std::int64_t c = 0) { return Affine{k, c}; }

enum class Position { numerator, denominator };

/// prod_{k=0}^{count-1} (1 + sign q^{first + k*step})^{+-1}; count absent = infinite.
struct FactorSpec {
  Sign sign = Sign::minus;
  Affine first = 1;
  std::int64_t step = 1;
  std::optional<Affine> count;
  Position position = Position::numerator;

  friend bool operator==(const FactorSpec&, const FactorSpec&) = default;
};

inline FactorSpec numerator(Sign sign, Affine first, std::int64_t step,
                            std::optional<Affine> count = std::nullopt) {
  return {sign, first, step, count, Position::numerator};
}

inline FactorSpec denominator(Sign sign, Affine first, std::int64_t step,
                              std::optional<Affine> count = std::nullopt) {
  return {sign, first, step, count, Position::denominator};
}

/// Product of index-free factors.
struct ProductSpec {
  std::vector<FactorSpec> factors;

  friend bool operator==(const ProductSpec&, const ProductSpec&) = default;
};

enum class ThetaWeight { plain, alternating, cube };
enum class IndexDomain { all, nonnegative, positive };

/// plain:       sum_n q^{(P n^2 + (P - 2r) n)/2}
/// alternating: sum_n (-1)^n q^{(P n^2 + (P - 2r) n)/2}
/// cube:        sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2}
///
/// With Q = q^P and z = q^{-r} (or -q^{-r}) the triple product turns the first
/// two into prod (1 - q^{Pn})(1 +- q^{Pn-r})(1 +- q^{Pn-P+r}).
struct ThetaSpec {
  ThetaWeight weight = ThetaWeight::plain;
  std::int64_t modulus = 1;  // P
  std::int64_t shift = 0;    // r
  IndexDomain domain = IndexDomain::all;

  static ThetaSpec plain(std::int64_t p, std::int64_t r) {
    return {ThetaWeight::plain, p, r, IndexDomain::all};
  }
  static ThetaSpec alternating(std::int64_t p, std::int64_t r) {
    return {ThetaWeight::alternating, p, r, IndexDomain::all};
  }
  static ThetaSpec cube_weighted() { return {ThetaWeight::cube, 1, 0, IndexDomain::nonnegative}; }
  /// sum_{n>=0} q^{n(n+1)/2}
  static ThetaSpec triangular() { return {ThetaWeight::plain, 1, 0, IndexDomain::nonnegative}; }

  std::int64_t exponent(std::int64_t n) const noexcept;

  friend bool operator==(const ThetaSpec&, const ThetaSpec&) = default;
};

/// a n^2 + b n + c
struct Quadratic {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  constexpr std::int64_t at(std::int64_t n) const noexcept { return (a * n + b) * n + c; }
  friend constexpr bool operator==(const Quadratic&, const Quadratic&) = default;
};

enum class SignRule { positive, alternating };

/// sign(n) q^{lead(n)} prod factors(n), summed over n_start <= n (<= n_end).
struct GFTermSpec {
  std::int64_t n_start = 0;
  std::optional<std::int64_t> n_end;
  Quadratic lead;
  SignRule sign_rule = SignRule::positive;
  std::vector<FactorSpec> factors;

  friend bool operator==(const GFTermSpec&, const GFTermSpec&) = default;
};

/// prefactor * (sum of term families).
struct SlaterSpec {
  ProductSpec prefactor;
  std::vector<GFTermSpec> terms;

  friend bool operator==(const SlaterSpec&, const SlaterSpec&) = default;
};

struct Expr;

struct ExprSum {
  std::vector<Expr> operands;
};

struct ExprProduct {
  std::vector<Expr> operands;
};

/// One side of a catalogued identity.
struct Expr {
  std::variant<ProductSpec, ThetaSpec, SlaterSpec, ExprSum, ExprProduct> node;
};

inline Expr sum_of(std::vector<Expr> operands) { return Expr{ExprSum{std::move(operands)}}; }
inline Expr product_of(std::vector<Expr> operands) {
  return Expr{ExprProduct{std::move(operands)}};
}

}  // namespace qparity
