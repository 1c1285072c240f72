#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qparity/partitions.hpp"

using namespace qparity;

namespace {

using Parts = std::vector<std::int64_t>;

PartitionInstance pair(std::int64_t j, Parts parts) { return {j, std::move(parts)}; }

}  // namespace

TEST_CASE("c2(7) has exactly the two pairs (6,1) and (3,3,1)") {
  CHECK(gf_series("c2", 7)[7] == 2);
  const auto list = bruteforce_list("c2", 7);
  CHECK(list == std::vector<PartitionInstance>{pair(1, {6, 1}), pair(1, {3, 3, 1})});
}

TEST_CASE("c9(11) lists nine partitions") {
  CHECK(gf_series("c9", 11)[11] == 9);
  const auto list = bruteforce_list("c9", 11);
  const std::vector<PartitionInstance> expected{
      pair(0, {11}),          pair(0, {9, 2}),    pair(0, {8, 3}),
      pair(0, {7, 4}),        pair(0, {6, 5}),    pair(0, {6, 3, 2}),
      pair(0, {5, 4, 2}),     pair(2, {7, 1, 1, 1, 1}), pair(2, {4, 3, 1, 1, 1, 1})};
  CHECK(list == expected);
}

TEST_CASE("small coefficients") {
  CHECK(gf_series("c1", 0)[0] == 1);
  CHECK(bruteforce_count("c1", 0) == 1);
  const auto c2 = gf_series("c2", 8);
  std::vector<long> got;
  for (const auto& c : c2.coefficients()) got.push_back(c.get_si());
  CHECK(got == std::vector<long>{0, 1, 0, 0, 2, 1, 1, 2, 2});
}

TEST_CASE("restriction predicates") {
  const Parts c9_excluded{6, 1, 1, 1, 1, 1};
  CHECK_FALSE(restriction_predicate("c9", 2, c9_excluded));
  CHECK(restriction_predicate("c9", 2, Parts{6, 1, 1, 1, 1}));

  CHECK(restriction_predicate("c2", 1, Parts{3, 1}));
  CHECK(restriction_predicate("c2", 2, Parts{3, 1}));
  CHECK_FALSE(restriction_predicate("c2", 1, Parts{3, 1, 1}));
  CHECK(bruteforce_count("c2", 4) == 2);
  const auto pairs = bruteforce_list("c2", 4);
  CHECK(distinct_partition_count(pairs) == 1);

  CHECK(restriction_predicate("c1", 0, Parts{}));
  CHECK_FALSE(restriction_predicate("c1", 0, Parts{1, 1}));
  CHECK(restriction_predicate("c1", 1, Parts{2, 2, 2, 1, 1}));
  CHECK_FALSE(restriction_predicate("c1", 1, Parts{2, 2, 2}));
}

TEST_CASE("admissible indices") {
  CHECK_FALSE(admissible_index("c2", 0));
  CHECK(admissible_index("c2", 1));
  CHECK_FALSE(admissible_index("c9", 1));
  CHECK(admissible_index("c9", 0));
  CHECK(admissible_index("c9", 2));
  CHECK(admissible_index("c1", 0));
  CHECK_FALSE(admissible_index("c1", -1));
}

TEST_CASE("brute force agrees with the generating function") {
  constexpr std::int64_t bound = 40;
  for (const auto& id : partition_ids()) {
    CAPTURE(id);
    const auto s = gf_series(id, bound);
    for (std::int64_t n = 0; n <= bound; ++n) {
      CAPTURE(n);
      CHECK(s[static_cast<std::size_t>(n)] == bruteforce_count(id, n));
    }
  }
}

TEST_CASE("listed pairs are valid, sum to n, and never repeat") {
  for (const auto& id : partition_ids()) {
    CAPTURE(id);
    for (std::int64_t n : {0, 1, 7, 18, 25}) {
      const auto list = bruteforce_list(id, n);
      std::set<std::pair<std::int64_t, Parts>> seen;
      for (const auto& p : list) {
        CHECK(std::accumulate(p.parts.begin(), p.parts.end(), std::int64_t{0}) == n);
        CHECK(std::is_sorted(p.parts.begin(), p.parts.end(), std::greater<>()));
        CHECK(admissible_index(id, p.j));
        CHECK(restriction_predicate(id, p.j, p.parts));
        CHECK(seen.insert({p.j, p.parts}).second);
      }
      CHECK(std::is_sorted(list.begin(), list.end(), [](const auto& a, const auto& b) {
        return a.j != b.j ? a.j < b.j : a.parts > b.parts;
      }));
    }
  }
}

TEST_CASE("forced parts stay inside the staircase") {
  for (const auto& id : partition_ids()) {
    CAPTURE(id);
    for (std::int64_t j = 0; j <= 6; ++j) {
      if (!admissible_index(id, j)) continue;
      for (std::int64_t k = 2 * j + 2; k <= 60; ++k) {
        CAPTURE(j);
        CAPTURE(k);
        CHECK(multiplicity_rule(id, j, k).lo == 0);
      }
    }
  }
}

TEST_CASE("generating function coefficients are non-negative") {
  for (const auto& id : partition_ids()) {
    CAPTURE(id);
    const auto s = gf_series(id, 2000);
    CHECK(std::all_of(s.coefficients().begin(), s.coefficients().end(),
                      [](const mpz_class& c) { return sgn(c) >= 0; }));
  }
}

TEST_CASE("oracle bound is enforced") {
  CHECK_THROWS_AS(bruteforce_list("c1", default_oracle_bound + 1), std::out_of_range);
  CHECK_THROWS_AS(bruteforce_count("c4", 11, 10), std::out_of_range);
  CHECK_NOTHROW(bruteforce_count("c4", 10, 10));
  CHECK_THROWS_AS(bruteforce_count("c13", 3), std::invalid_argument);
  CHECK_THROWS_AS(gf_series("c0", 3), std::invalid_argument);
}

TEST_CASE("definition records") {
  CHECK(partition_ids().size() == 12);
  const auto& c4 = definition("c4");
  REQUIRE(c4.characterizations.size() == 1);
  const auto& f = c4.characterizations[0].support.at(0);
  CHECK(f.alpha == 7);
  CHECK(f.beta == 3);
  CHECK(f.denominator == 2);

  std::set<std::int64_t> c8_residues;
  for (const auto& c : definition("c8").congruences) {
    CHECK(c.modulus == 49);
    c8_residues.insert(c.residue);
  }
  CHECK(c8_residues == std::set<std::int64_t>{6, 20, 27, 34, 41, 48});

  const auto& c3 = definition("c3");
  CHECK(c3.characterizations.size() == 4);
  for (std::int64_t r = 1; r <= 4; ++r) {
    CHECK(std::ranges::any_of(c3.characterizations, [&](const ParityCharacterization& c) {
      return c.on == Progression{5, r};
    }));
  }
  CHECK(definition("c12").congruences == std::vector<CongruenceClaim>{{2, 1}});
}
