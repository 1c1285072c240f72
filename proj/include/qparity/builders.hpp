#pragma once

// Series builders, generic over the coefficient ring: every function template
// here is instantiated for both Series (exact) and ParitySeries (mod 2), so the
// two pipelines share one construction path.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "qparity/series.hpp"
#include "qparity/specs.hpp"

namespace qparity {

template <class S>
concept TruncatedSeries = requires(S s, const S& c, std::size_t n, Sign sign, long k) {
  { S::one(n) } -> std::same_as<S>;
  { S::zero(n) } -> std::same_as<S>;
  { c.order() } -> std::convertible_to<std::size_t>;
  { mul_binomial(std::move(s), sign, n) } -> std::same_as<S>;
  { div_binomial(std::move(s), sign, n) } -> std::same_as<S>;
  { add(c, c) } -> std::same_as<S>;
  { mul(c, c) } -> std::same_as<S>;
  s.add_monomial(n, k);
  s.add_shifted(c, n, sign);
};

enum class ThetaSign { plain, alternating };

class spec_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void validate(const FactorSpec& f);
void validate(const ProductSpec& p);
void validate(const ThetaSpec& t);
void validate(const GFTermSpec& t);

/// Applies one factor, evaluated at outer index n, to s.
template <TruncatedSeries S>
S apply_factor(S s, const FactorSpec& f, std::int64_t n) {
  const std::int64_t first = f.first.at(n);
  const std::int64_t order = static_cast<std::int64_t>(s.order());
  std::int64_t count = order + 1;  // more than enough for an infinite factor
  if (f.count) {
    count = f.count->at(n);
    if (count < 0) {
      throw spec_error("factor count evaluates to " + std::to_string(count) + " at n = " +
                       std::to_string(n));
    }
  }
  if (count > 0 && first < 1) {
    throw spec_error("factor exponent evaluates to " + std::to_string(first) + " at n = " +
                     std::to_string(n));
  }
  for (std::int64_t k = 0; k < count; ++k) {
    const std::int64_t e = first + k * f.step;
    if (e > order) break;
    const auto ue = static_cast<std::size_t>(e);
    s = f.position == Position::numerator ? mul_binomial(std::move(s), f.sign, ue)
                                          : div_binomial(std::move(s), f.sign, ue);
  }
  return s;
}

template <TruncatedSeries S>
S apply_product(S s, const ProductSpec& spec) {
  validate(spec);
  for (const auto& f : spec.factors) s = apply_factor(std::move(s), f, 0);
  return s;
}

template <TruncatedSeries S>
S build_product(const ProductSpec& spec, std::size_t order) {
  return apply_product(S::one(order), spec);
}

template <TruncatedSeries S>
S build_theta(const ThetaSpec& spec, std::size_t order) {
  validate(spec);
  S s = S::zero(order);
  const auto limit = static_cast<std::int64_t>(order);
  auto weight = [&](std::int64_t n) -> long {
    const long sign = (spec.weight != ThetaWeight::plain && n % 2 != 0) ? -1 : 1;
    return spec.weight == ThetaWeight::cube ? sign * (2 * n + 1) : sign;
  };
  // Exponents are nondecreasing along n = 0, 1, 2, ... and along n = -1, -2, ...
  for (std::int64_t n = 0;; ++n) {
    const std::int64_t e = spec.exponent(n);
    if (e > limit) break;
    s.add_monomial(static_cast<std::size_t>(e), weight(n));
  }
  if (spec.domain == IndexDomain::all) {
    for (std::int64_t n = -1;; --n) {
      const std::int64_t e = spec.exponent(n);
      if (e > limit) break;
      s.add_monomial(static_cast<std::size_t>(e), weight(n));
    }
  }
  return s;
}

/// prod_{n>=1} (1 - q^{Pn})(1 +- q^{Pn-r})(1 +- q^{Pn-P+r}).
inline ProductSpec triple_product_spec(std::int64_t p, std::int64_t r, ThetaSign mode) {
  if (p < 1 || r <= 0 || r >= p) {
    throw spec_error("triple product needs 0 < r < P (P = " + std::to_string(p) +
                     ", r = " + std::to_string(r) + ")");
  }
  const Sign inner = mode == ThetaSign::plain ? Sign::plus : Sign::minus;
  return ProductSpec{{numerator(Sign::minus, p, p), numerator(inner, p - r, p),
                      numerator(inner, r, p)}};
}

template <TruncatedSeries S>
S theta_product(std::int64_t p, std::int64_t r, ThetaSign mode, std::size_t order) {
  return build_product<S>(triple_product_spec(p, r, mode), order);
}

/// Sum of one term family at the given order.
template <TruncatedSeries S>
S build_terms(const GFTermSpec& term, std::size_t order) {
  validate(term);
  S acc = S::zero(order);
  const auto limit = static_cast<std::int64_t>(order);
  for (std::int64_t n = term.n_start; !term.n_end || n <= *term.n_end; ++n) {
    const std::int64_t e = term.lead.at(n);
    if (e < 0) {
      throw spec_error("lead exponent is negative at n = " + std::to_string(n));
    }
    if (e > limit) {
      // Past the vertex the lead only grows, so nothing further fits.
      if (term.lead.a * (2 * n + 1) + term.lead.b > 0) break;
      continue;
    }
    // Each summand only needs order - e coefficients before the shift by q^e.
    S t = S::one(static_cast<std::size_t>(limit - e));
    for (const auto& f : term.factors) t = apply_factor(std::move(t), f, n);
    const Sign sign =
        (term.sign_rule == SignRule::alternating && n % 2 != 0) ? Sign::minus : Sign::plus;
    acc.add_shifted(t, static_cast<std::size_t>(e), sign);
  }
  return acc;
}

template <TruncatedSeries S>
S build_slater_sum(const ProductSpec& prefactor, const std::vector<GFTermSpec>& terms,
                   std::size_t order) {
  S acc = S::zero(order);
  for (const auto& term : terms) acc = add(acc, build_terms<S>(term, order));
  return apply_product(std::move(acc), prefactor);
}

template <TruncatedSeries S>
S build_slater_sum(const SlaterSpec& spec, std::size_t order) {
  return build_slater_sum<S>(spec.prefactor, spec.terms, order);
}

template <TruncatedSeries S>
S evaluate(const Expr& expr, std::size_t order) {
  return std::visit(
      [&](const auto& node) -> S {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ProductSpec>) {
          return build_product<S>(node, order);
        } else if constexpr (std::is_same_v<T, ThetaSpec>) {
          return build_theta<S>(node, order);
        } else if constexpr (std::is_same_v<T, SlaterSpec>) {
          return build_slater_sum<S>(node, order);
        } else if constexpr (std::is_same_v<T, ExprSum>) {
          S acc = S::zero(order);
          for (const auto& e : node.operands) acc = add(acc, evaluate<S>(e, order));
          return acc;
        } else {
          S acc = S::one(order);
          for (const auto& e : node.operands) acc = mul(acc, evaluate<S>(e, order));
          return acc;
        }
      },
      expr.node);
}

}  // namespace qparity
