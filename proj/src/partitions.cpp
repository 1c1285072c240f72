#include "qparity/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "qparity/builders.hpp"

namespace qparity {

namespace {

constexpr Sign plus = Sign::plus;
constexpr Sign minus = Sign::minus;

GFTermSpec term(std::int64_t n_start, Quadratic lead, std::vector<FactorSpec> factors) {
  return GFTermSpec{n_start, std::nullopt, lead, SignRule::positive, std::move(factors)};
}

SlaterSpec sum_of_terms(std::vector<GFTermSpec> terms) { return SlaterSpec{{}, std::move(terms)}; }

QuadraticFamily family(std::int64_t alpha, std::int64_t beta, std::int64_t gamma,
                       std::int64_t denominator, IndexDomain domain = IndexDomain::all,
                       std::optional<IndexResidues> side = std::nullopt) {
  return QuadraticFamily{alpha, beta, gamma, denominator, domain, std::move(side)};
}

ParityCharacterization whole(QuadraticFamily f) { return {std::nullopt, {std::move(f)}}; }

std::vector<CongruenceClaim> claims(std::int64_t m, std::initializer_list<std::int64_t> rs) {
  std::vector<CongruenceClaim> out;
  for (auto r : rs) out.push_back({m, r});
  return out;
}

std::vector<PartitionDef> make_definitions() {
  std::vector<PartitionDef> defs;

  // Staircase 1,1,2,2,...,(2n-1),(2n-1); parts up to 2n free; distinct above.
  defs.push_back({"c1",
                  sum_of_terms({term(0, {4, -2, 0},
                                     {denominator(minus, 1, 1, idx(2)),
                                      numerator(plus, idx(2, 1), 1)})}),
                  {whole(family(1, 1, 0, 2, IndexDomain::nonnegative))},
                  {}});

  defs.push_back({"c2",
                  sum_of_terms({term(1, {1, 0, 0},
                                     {denominator(minus, idx(2, 1), 2),
                                      numerator(plus, idx(2, 2), 2)})}),
                  {},
                  claims(5, {2})});

  defs.push_back(
      {"c3",
       sum_of_terms({term(1, {1, 0, 0},
                          {numerator(plus, 1, 1, 1), numerator(plus, 3, 2),
                           numerator(plus, 2, 2, idx()), numerator(plus, idx(4, 4), 4)})}),
       {
           // c3(5n+1): n = (j(j+1) - 2)/10, j >= 1, j = 1, 3 (mod 5)
           {Progression{5, 1},
            {family(1, 1, -2, 10, IndexDomain::positive, IndexResidues{5, {1, 3}})}},
           // c3(5n+2): n = ((5j+4)(15j+13) - 2)/5
           {Progression{5, 2}, {family(75, 125, 50, 5)}},
           // c3(5n+3): n = ((5j+2)(5j+3) - 6)/10, j >= 0
           {Progression{5, 3}, {family(25, 25, 0, 10, IndexDomain::nonnegative)}},
           // c3(5n+4): n = (j(3j+1) - 4)/5, j = 1, 2 (mod 5)
           {Progression{5, 4}, {family(3, 1, -4, 5, IndexDomain::all, IndexResidues{5, {1, 2}})}},
       },
       claims(11, {5, 7, 9})});

  defs.push_back({"c4",
                  sum_of_terms({term(0, {2, 2, 0},
                                     {numerator(plus, 1, 2, idx()),
                                      numerator(plus, idx(4, 2), 2)})}),
                  {whole(family(7, 3, 0, 2))},
                  {}});

  defs.push_back({"c5",
                  sum_of_terms({term(0, {2, 0, 0},
                                     {numerator(plus, 1, 2, idx()),
                                      numerator(plus, idx(4, 2), 2)})}),
                  {whole(family(7, 1, 0, 2))},
                  {}});

  defs.push_back({"c6",
                  sum_of_terms({term(0, {2, 2, 0},
                                     {numerator(plus, 1, 2, idx()),
                                      denominator(minus, idx(2, 1), 1, 1),
                                      numerator(plus, idx(4, 2), 2)})}),
                  {whole(family(7, 5, 0, 2))},
                  {}});

  defs.push_back({"c7",
                  sum_of_terms({term(0, {2, 2, 0},
                                     {numerator(plus, 2, 4), denominator(minus, idx(2, 1), 1, 1),
                                      numerator(plus, idx(4, 4), 4)})}),
                  {whole(family(3, 2, 0, 1))},
                  {}});

  defs.push_back({"c8",
                  sum_of_terms({term(0, {1, 0, 0},
                                     {numerator(plus, 1, 1, idx()),
                                      numerator(plus, idx(2, 2), 2)})}),
                  {},
                  claims(49, {6, 20, 27, 34, 41, 48})});

  {
    GFTermSpec distinct_above_one{0, 0, {0, 0, 0}, SignRule::positive, {numerator(plus, 2, 1)}};
    defs.push_back({"c9",
                    sum_of_terms({distinct_above_one,
                                  term(2, {1, 0, 0}, {numerator(plus, idx(1, 1), 1)})}),
                    {whole(family(5, 1, 0, 2))},
                    {}});
  }

  defs.push_back({"c10",
                  sum_of_terms({term(0, {1, 1, 0},
                                     {numerator(plus, 1, 2), numerator(plus, idx(2, 2), 2)})}),
                  {whole(family(2, 1, 0, 1))},
                  {}});

  defs.push_back({"c11",
                  sum_of_terms({term(1, {1, 0, 0},
                                     {denominator(minus, 1, 2), numerator(plus, idx(2, 2), 2)})}),
                  {},
                  claims(11, {5, 7, 9})});

  defs.push_back({"c12",
                  sum_of_terms({term(0, {1, 2, 0},
                                     {numerator(plus, 1, 2), numerator(plus, idx(2, 4), 2)})}),
                  {whole(family(6, 4, 0, 1))},
                  claims(2, {1})});

  return defs;
}

// Multiplicity rules, one per function, read off the prose definitions with
// the generating function settling ambiguities.

constexpr MultiplicityRange none{0, 0};
constexpr MultiplicityRange at_most_once{0, 1};
constexpr MultiplicityRange exactly(std::int64_t m) { return {m, m}; }
constexpr MultiplicityRange between(std::int64_t lo, std::int64_t hi) { return {lo, hi}; }
constexpr MultiplicityRange at_least(std::int64_t lo) { return {lo, std::nullopt}; }

constexpr bool odd(std::int64_t k) { return k % 2 != 0; }

using Rule = std::function<MultiplicityRange(std::int64_t j, std::int64_t k)>;

const std::map<std::string, Rule, std::less<>>& rules() {
  static const std::map<std::string, Rule, std::less<>> table{
      {"c1",
       [](std::int64_t j, std::int64_t k) {
         if (j == 0 || k > 2 * j) return at_most_once;
         return k < 2 * j ? at_least(2) : at_least(0);
       }},
      {"c2",
       [](std::int64_t j, std::int64_t k) {
         if (odd(k)) return k < 2 * j ? exactly(1) : at_least(0);
         return k >= 2 * j + 2 ? at_most_once : none;
       }},
      {"c3",
       [](std::int64_t j, std::int64_t k) {
         if (k == 1) return between(j * j, j * j + 1);
         if (odd(k) || k <= 2 * j) return at_most_once;
         return (k >= 4 * j + 4 && k % 4 == 0) ? at_most_once : none;
       }},
      {"c4",
       [](std::int64_t j, std::int64_t k) {
         if (odd(k)) return k < 2 * j ? at_most_once : none;
         if (k <= 2 * j) return exactly(2);
         return k >= 4 * j + 2 ? at_most_once : none;
       }},
      {"c5",
       [](std::int64_t j, std::int64_t k) {
         if (odd(k)) return k < 2 * j ? between(2, 3) : none;
         return k >= 4 * j + 2 ? at_most_once : none;
       }},
      {"c6",
       [](std::int64_t j, std::int64_t k) {
         if (odd(k)) {
           if (k < 2 * j) return at_most_once;
           return k == 2 * j + 1 ? at_least(0) : none;
         }
         if (k <= 2 * j) return exactly(2);
         return k >= 4 * j + 2 ? at_most_once : none;
       }},
      {"c7",
       [](std::int64_t j, std::int64_t k) {
         if (odd(k)) return k == 2 * j + 1 ? at_least(0) : none;
         const bool two_mod_four = k % 4 == 2;
         if (k <= 2 * j) return two_mod_four ? between(2, 3) : exactly(2);
         if (two_mod_four) return at_most_once;
         return k >= 4 * j + 4 ? at_most_once : none;
       }},
      {"c8",
       [](std::int64_t j, std::int64_t k) {
         const std::int64_t base = (odd(k) && k < 2 * j) ? 1 : 0;
         if (k <= j) return between(base, base + 1);
         if (base == 1) return exactly(1);
         return (!odd(k) && k >= 2 * j + 2) ? at_most_once : none;
       }},
      {"c9",
       [](std::int64_t j, std::int64_t k) {
         if (j == 0) return k == 1 ? none : at_most_once;
         if (k == 1) return exactly(j * j);
         return k > j ? at_most_once : none;
       }},
      {"c10",
       [](std::int64_t j, std::int64_t k) {
         if (k <= j) return odd(k) ? between(2, 3) : exactly(2);
         if (odd(k)) return at_most_once;
         return k >= 2 * j + 2 ? at_most_once : none;
       }},
      {"c11",
       [](std::int64_t j, std::int64_t k) {
         if (odd(k)) return k < 2 * j ? at_least(1) : at_least(0);
         return k >= 2 * j + 2 ? at_most_once : none;
       }},
      {"c12",
       [](std::int64_t j, std::int64_t k) {
         if (k < j) return odd(k) ? between(2, 3) : exactly(2);
         if (k == j) return odd(k) ? between(3, 4) : exactly(3);
         if (odd(k)) return at_most_once;
         return k >= 2 * j + 4 ? at_most_once : none;
       }},
  };
  return table;
}

const Rule& rule(std::string_view id) {
  const auto& table = rules();
  auto it = table.find(id);
  if (it == table.end()) throw std::invalid_argument("unknown partition id: " + std::string(id));
  return it->second;
}

// Every rule forces parts only up to 2j (the staircase), so scanning to 2j + 1 is enough.
std::int64_t forced_limit(std::int64_t j) { return 2 * j + 1; }

class Enumerator {
 public:
  Enumerator(const Rule& rule, std::int64_t j, std::int64_t n) : rule_(rule), j_(j), n_(n) {
    ranges_.resize(static_cast<std::size_t>(n + 1));
    forced_below_.assign(static_cast<std::size_t>(n + 2), 0);
    for (std::int64_t k = 1; k <= n; ++k) {
      ranges_[static_cast<std::size_t>(k)] = rule_(j_, k);
      forced_below_[static_cast<std::size_t>(k + 1)] =
          forced_below_[static_cast<std::size_t>(k)] + k * ranges_[static_cast<std::size_t>(k)].lo;
    }
  }

  std::vector<PartitionInstance> run() {
    for (std::int64_t k = n_ + 1; k <= std::max(n_, forced_limit(j_)); ++k) {
      if (rule_(j_, k).lo > 0) return {};  // a forced part larger than n
    }
    recurse(n_, n_);
    std::sort(found_.begin(), found_.end(), std::greater<>());
    std::vector<PartitionInstance> out;
    out.reserve(found_.size());
    for (auto& parts : found_) out.push_back({j_, std::move(parts)});
    return out;
  }

 private:
  void recurse(std::int64_t k, std::int64_t remaining) {
    if (k == 0) {
      if (remaining == 0) found_.push_back(current_);
      return;
    }
    const auto& range = ranges_[static_cast<std::size_t>(k)];
    const std::int64_t reserve = forced_below_[static_cast<std::size_t>(k)];
    std::int64_t top = (remaining - reserve) / k;
    if (range.hi) top = std::min(top, *range.hi);
    for (std::int64_t m = top; m >= range.lo; --m) {
      current_.insert(current_.end(), static_cast<std::size_t>(m), k);
      recurse(k - 1, remaining - m * k);
      current_.resize(current_.size() - static_cast<std::size_t>(m));
    }
  }

  const Rule& rule_;
  std::int64_t j_;
  std::int64_t n_;
  std::vector<MultiplicityRange> ranges_;
  std::vector<std::int64_t> forced_below_;
  std::vector<std::int64_t> current_;
  std::vector<std::vector<std::int64_t>> found_;
};

}  // namespace

const std::vector<PartitionDef>& definitions() {
  static const std::vector<PartitionDef> defs = make_definitions();
  return defs;
}

const PartitionDef& definition(std::string_view id) {
  for (const auto& d : definitions()) {
    if (d.id == id) return d;
  }
  throw std::invalid_argument("unknown partition id: " + std::string(id));
}

std::vector<std::string> partition_ids() {
  std::vector<std::string> ids;
  for (const auto& d : definitions()) ids.push_back(d.id);
  return ids;
}

Series gf_series(std::string_view id, std::size_t order) {
  return build_slater_sum<Series>(definition(id).gf, order);
}

ParitySeries gf_parity(std::string_view id, std::size_t order) {
  return build_slater_sum<ParitySeries>(definition(id).gf, order);
}

bool admissible_index(std::string_view id, std::int64_t j) {
  (void)rule(id);
  if (j < 0) return false;
  if (id == "c2" || id == "c3" || id == "c11") return j >= 1;
  if (id == "c9") return j == 0 || j >= 2;
  return true;
}

MultiplicityRange multiplicity_rule(std::string_view id, std::int64_t j, std::int64_t k) {
  if (!admissible_index(id, j)) {
    throw std::invalid_argument("index j = " + std::to_string(j) + " is not admissible for " +
                                std::string(id));
  }
  if (k < 1) throw std::invalid_argument("part sizes are positive");
  return rule(id)(j, k);
}

bool restriction_predicate(std::string_view id, std::int64_t j,
                           std::span<const std::int64_t> parts) {
  if (!admissible_index(id, j)) return false;
  const Rule& r = rule(id);
  std::map<std::int64_t, std::int64_t> mult;
  for (auto p : parts) {
    if (p < 1) return false;
    ++mult[p];
  }
  for (const auto& [k, m] : mult) {
    if (!r(j, k).contains(m)) return false;
  }
  for (std::int64_t k = 1; k <= forced_limit(j); ++k) {
    if (!mult.contains(k) && !r(j, k).contains(0)) return false;
  }
  return true;
}

std::vector<PartitionInstance> bruteforce_list(std::string_view id, std::int64_t n,
                                               std::int64_t oracle_bound) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > oracle_bound) {
    throw std::out_of_range("n = " + std::to_string(n) + " exceeds the oracle bound " +
                            std::to_string(oracle_bound));
  }
  const Rule& r = rule(id);
  std::vector<PartitionInstance> out;
  // Every admissible j >= 1 forces a staircase of weight at least j.
  for (std::int64_t j = 0; j <= n + 1; ++j) {
    if (!admissible_index(id, j)) continue;
    auto batch = Enumerator(r, j, n).run();
    out.insert(out.end(), std::make_move_iterator(batch.begin()),
               std::make_move_iterator(batch.end()));
  }
  return out;
}

std::int64_t bruteforce_count(std::string_view id, std::int64_t n, std::int64_t oracle_bound) {
  return static_cast<std::int64_t>(bruteforce_list(id, n, oracle_bound).size());
}

std::int64_t distinct_partition_count(std::span<const PartitionInstance> pairs) {
  std::set<std::vector<std::int64_t>> seen;
  for (const auto& p : pairs) seen.insert(p.parts);
  return static_cast<std::int64_t>(seen.size());
}

}  // namespace qparity
