#include "qparity/identities.hpp"

#include <chrono>
#include <stdexcept>

#include "qparity/builders.hpp"
#include "qparity/partitions.hpp"

namespace qparity {

namespace {

constexpr Sign plus = Sign::plus;
constexpr Sign minus = Sign::minus;

Expr product(std::vector<FactorSpec> factors) { return Expr{ProductSpec{std::move(factors)}}; }
Expr theta(ThetaSpec t) { return Expr{t}; }

/// prod_{n>=1} (1 - q^{Pn})(1 - q^{Pn-a})(1 - q^{Pn-(P-a)}), or with + inside.
Expr triple(std::int64_t p, std::int64_t a, Sign inner) {
  return product({numerator(minus, p, p), numerator(inner, p - a, p), numerator(inner, a, p)});
}

Expr slater(std::vector<FactorSpec> prefactor, Quadratic lead, std::vector<FactorSpec> factors,
            SignRule rule = SignRule::positive) {
  return Expr{SlaterSpec{ProductSpec{std::move(prefactor)},
                         {GFTermSpec{0, std::nullopt, lead, rule, std::move(factors)}}}};
}

Expr gf(std::string_view partition) { return Expr{definition(partition).gf}; }

// (q;q)_inf
FactorSpec euler() { return numerator(minus, 1, 1); }

std::vector<IdentityEntry> make_catalog() {
  std::vector<IdentityEntry> out;

  for (auto [p, r] : std::initializer_list<std::pair<int, int>>{
           {3, 1}, {4, 1}, {5, 2}, {6, 1}, {6, 2}, {7, 1}, {7, 2}, {7, 3}, {8, 3}, {12, 2}}) {
    out.push_back({"jtp." + std::to_string(p) + "." + std::to_string(r),
                   "triple product at Q = q^" + std::to_string(p) + ", z = q^-" +
                       std::to_string(r),
                   {},
                   theta(ThetaSpec::plain(p, r)),
                   Expr{triple_product_spec(p, r, ThetaSign::plain)},
                   IdentityMode::exact,
                   {}});
  }

  out.push_back({"gauss",
                 "sum (-1)^n q^{n^2} = (q;q)_inf / (-q;q)_inf",
                 {},
                 theta(ThetaSpec::alternating(2, 1)),
                 product({euler(), denominator(plus, 1, 1)}),
                 IdentityMode::exact,
                 {}});

  // sum q^{n^2-n} z^n / ((q;q)_n (z;q)_n) = 1/(z;q)_inf at z = q^2, q -> q^4.
  out.push_back({"cauchy",
                 "sum q^{4n^2-2n} / ((q^4;q^4)_n (q^2;q^4)_n) = 1/(q^2;q^4)_inf",
                 {"andpage20"},
                 slater({}, {4, -2, 0},
                        {denominator(minus, 4, 4, idx()), denominator(minus, 2, 4, idx())}),
                 product({denominator(minus, 2, 4)}),
                 IdentityMode::exact,
                 "the two printed labels carry the same identity; one entry serves both"});

  out.push_back({"cube",
                 "sum (-1)^n (2n+1) q^{n(n+1)/2} = (q;q)_inf^3",
                 {},
                 theta(ThetaSpec::cube_weighted()),
                 product({euler(), euler(), euler()}),
                 IdentityMode::exact,
                 {}});

  out.push_back({"slater.eq7",
                 "(q;q)_inf sum q^{n(n+1)}/(q^2;q^2)_n = (q,q^3,q^4;q^4)_inf",
                 {},
                 slater({euler()}, {1, 1, 0}, {denominator(minus, 2, 2, idx())}),
                 triple(4, 1, minus),
                 IdentityMode::exact,
                 {}});

  out.push_back({"slater.eq18",
                 "(q;q)_inf sum q^{n^2}/(q;q)_n = (q^2,q^3,q^5;q^5)_inf",
                 {},
                 slater({euler()}, {1, 0, 0}, {denominator(minus, 1, 1, idx())}),
                 triple(5, 2, minus),
                 IdentityMode::exact,
                 {}});

  out.push_back({"slater.eq23",
                 "(q^2;q^2)_inf/(q;q^2)_inf sum (-1)^n q^{n^2}/(q^2;q^2)_n = (q^2,q^4,q^6;q^6)_inf",
                 {},
                 slater({numerator(minus, 2, 2), denominator(minus, 1, 2)}, {1, 0, 0},
                        {denominator(minus, 2, 2, idx())}, SignRule::alternating),
                 triple(6, 2, minus),
                 IdentityMode::exact,
                 {}});

  out.push_back({"slater.eq27",
                 "(q^2;q^2)_inf sum q^{2n(n+1)} (-q;q^2)_n / ((q;q^2)_{n+1} (q^4;q^4)_n) "
                 "= (q^6;q^6)_inf (-q,-q^5;q^6)_inf",
                 {},
                 slater({numerator(minus, 2, 2)}, {2, 2, 0},
                        {numerator(plus, 1, 2, idx()), denominator(minus, 1, 2, idx(1, 1)),
                         denominator(minus, 4, 4, idx())}),
                 triple(6, 1, plus),
                 IdentityMode::exact,
                 {}});

  out.push_back({"slater.eq29",
                 "(q^2;q^2)_inf/(-q;q^2)_inf sum q^{n^2} (-q;q^2)_n / (q;q)_{2n} "
                 "= (q^6;q^6)_inf (-q^2,-q^4;q^6)_inf",
                 {},
                 slater({numerator(minus, 2, 2), denominator(plus, 1, 2)}, {1, 0, 0},
                        {numerator(plus, 1, 2, idx()), denominator(minus, 1, 1, idx(2))}),
                 triple(6, 2, plus),
                 IdentityMode::exact,
                 {}});

  out.push_back({"slater.eq31",
                 "(q^2;q^2)_inf sum q^{2n(n+1)} / ((q^2;q^2)_n (-q;q)_{2n+1}) = (q,q^6,q^7;q^7)_inf",
                 {},
                 slater({numerator(minus, 2, 2)}, {2, 2, 0},
                        {denominator(minus, 2, 2, idx()), denominator(plus, 1, 1, idx(2, 1))}),
                 triple(7, 1, minus),
                 IdentityMode::exact,
                 {}});

  out.push_back({"slater.eq32",
                 "(q^2;q^2)_inf sum q^{2n(n+1)} / ((q^2;q^2)_n (-q;q)_{2n}) = (q^2,q^5,q^7;q^7)_inf",
                 {},
                 slater({numerator(minus, 2, 2)}, {2, 2, 0},
                        {denominator(minus, 2, 2, idx()), denominator(plus, 1, 1, idx(2))}),
                 triple(7, 2, minus),
                 IdentityMode::exact,
                 {}});

  out.push_back({"slater.eq33",
                 "(q^2;q^2)_inf sum q^{2n^2} / ((q^2;q^2)_n (-q;q)_{2n}) = (q^3,q^4,q^7;q^7)_inf",
                 {},
                 slater({numerator(minus, 2, 2)}, {2, 0, 0},
                        {denominator(minus, 2, 2, idx()), denominator(plus, 1, 1, idx(2))}),
                 triple(7, 3, minus),
                 IdentityMode::exact,
                 {}});

  out.push_back({"slater.eq36",
                 "(q^2;q^2)_inf/(-q;q^2)_inf sum q^{n^2} (-q;q^2)_n / (q^2;q^2)_n "
                 "= (q^3,q^5,q^8;q^8)_inf",
                 {},
                 slater({numerator(minus, 2, 2), denominator(plus, 1, 2)}, {1, 0, 0},
                        {numerator(plus, 1, 2, idx()), denominator(minus, 2, 2, idx())}),
                 triple(8, 3, minus),
                 IdentityMode::exact,
                 "prefactor denominator starts at 1 + q; starting at 1 + q^3 breaks the identity"});

  out.push_back({"slater.eq50",
                 "(q;q)_inf sum q^{n(n+2)} (-q;q^2)_n / (q;q)_{2n+1} = (q^2,q^10,q^12;q^12)_inf",
                 {},
                 slater({euler()}, {1, 2, 0},
                        {numerator(plus, 1, 2, idx()), denominator(minus, 1, 1, idx(2, 1))}),
                 triple(12, 2, minus),
                 IdentityMode::exact,
                 {}});

  // Mod-2 steps.
  out.push_back({"step.c1.quotient-cube",
                 "(q^4;q^4)_inf / (q;q)_inf == (q;q)_inf^3 (mod 2)",
                 {},
                 product({numerator(minus, 4, 4), denominator(minus, 1, 1)}),
                 product({euler(), euler(), euler()}),
                 IdentityMode::mod2,
                 {}});

  out.push_back({"step.c1.cube-triangular",
                 "(q;q)_inf^3 == sum_{n>=0} q^{n(n+1)/2} (mod 2)",
                 {},
                 product({euler(), euler(), euler()}),
                 theta(ThetaSpec::triangular()),
                 IdentityMode::mod2,
                 {}});

  out.push_back({"step.c1.chain",
                 "GF(c1) == sum_{n>=0} q^{n(n+1)/2} (mod 2)",
                 {},
                 gf("c1"),
                 theta(ThetaSpec::triangular()),
                 IdentityMode::mod2,
                 {}});

  out.push_back({"step.c2.theta-split",
                 "GF(c2) == sum_n q^{4n^2+n} + sum_{n>=0} q^{n(n+1)/2} (mod 2)",
                 {},
                 gf("c2"),
                 sum_of({theta(ThetaSpec::plain(8, 3)), theta(ThetaSpec::triangular())}),
                 IdentityMode::mod2,
                 {}});

  out.push_back({"step.c3.theta-split",
                 "GF(c3) == sum_n q^{n(3n+1)} + sum_{n>=0} q^{n(n+1)/2} (mod 2)",
                 {},
                 gf("c3"),
                 sum_of({theta(ThetaSpec::plain(6, 2)), theta(ThetaSpec::triangular())}),
                 IdentityMode::mod2,
                 {}});

  out.push_back({"step.c8.pentagonal-split",
                 "GF(c8) == sum_n q^{n(3n+1)/2} * sum_n q^{n(5n+1)/2} (mod 2)",
                 {},
                 gf("c8"),
                 product_of({theta(ThetaSpec::plain(3, 1)), theta(ThetaSpec::plain(5, 2))}),
                 IdentityMode::mod2,
                 {}});

  return out;
}

}  // namespace

const std::vector<IdentityEntry>& identity_catalog() {
  static const std::vector<IdentityEntry> catalog = make_catalog();
  return catalog;
}

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const auto& e : identity_catalog()) ids.push_back(e.id);
  return ids;
}

const IdentityEntry& find_identity(std::string_view id) {
  for (const auto& e : identity_catalog()) {
    if (e.id == id) return e;
    for (const auto& a : e.aliases) {
      if (a == id) return e;
    }
  }
  throw std::invalid_argument("unknown identity id: " + std::string(id));
}

Series evaluate_exact(const IdentityEntry& entry, IdentitySide side, std::size_t order) {
  return evaluate<Series>(side == IdentitySide::lhs ? entry.lhs : entry.rhs, order);
}

ParitySeries evaluate_parity(const IdentityEntry& entry, IdentitySide side, std::size_t order) {
  return evaluate<ParitySeries>(side == IdentitySide::lhs ? entry.lhs : entry.rhs, order);
}

VerificationReport verify_identity(const IdentityEntry& entry, std::size_t order) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.id = entry.id;
  r.order = order;
  std::optional<std::size_t> diff;
  if (entry.mode == IdentityMode::exact) {
    diff = first_difference(evaluate_exact(entry, IdentitySide::lhs, order),
                            evaluate_exact(entry, IdentitySide::rhs, order));
  } else {
    diff = first_difference(evaluate_parity(entry, IdentitySide::lhs, order),
                            evaluate_parity(entry, IdentitySide::rhs, order));
  }
  if (diff) r.first_failure = static_cast<std::int64_t>(*diff);
  r.passed = !diff;
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return r;
}

VerificationReport verify_identity(std::string_view id, std::size_t order) {
  return verify_identity(find_identity(id), order);
}

}  // namespace qparity
