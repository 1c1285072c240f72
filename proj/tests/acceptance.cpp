// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance        run all criteria
//   acceptance 3 7    run only criteria 3 and 7
//
// Exit status is 0 iff every selected criterion passed.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qparity/analysis.hpp"
#include "qparity/identities.hpp"
#include "qparity/partitions.hpp"
#include "qparity/theorems.hpp"

using namespace qparity;

namespace {

using Ints = std::vector<std::int64_t>;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& what) {
    passed = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const VerificationReport& r) {
  std::string s = r.id;
  if (r.first_failure) s += " first failure at n = " + std::to_string(*r.first_failure);
  return s;
}

std::string join(const Ints& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return "{" + out.str() + "}";
}

Outcome identities() {
  const auto start = Clock::now();
  Outcome o;
  std::size_t checked = 0;
  for (const auto& e : identity_catalog()) {
    if (e.mode != IdentityMode::exact) continue;
    ++checked;
    const auto r = verify_identity(e, 1000);
    if (!r.passed) o.fail(describe(r));
  }
  // ten Slater, Gauss, cube, Cauchy, ten triple products
  if (checked != 23) o.fail("expected 23 exact identities, found " + std::to_string(checked));
  const double secs = seconds_since(start);
  if (secs >= 60) o.fail("took " + std::to_string(secs) + " s");
  if (o.passed) o.detail = std::to_string(checked) + " identities in " + std::to_string(secs) + " s";
  return o;
}

Outcome anchors() {
  Outcome o;
  using Parts = std::vector<std::int64_t>;
  if (gf_series("c2", 7)[7] != 2) o.fail("c2(7) != 2");
  const std::vector<PartitionInstance> c2{{1, Parts{6, 1}}, {1, Parts{3, 3, 1}}};
  if (bruteforce_list("c2", 7) != c2) o.fail("c2(7) pairs differ");

  if (gf_series("c9", 11)[11] != 9) o.fail("c9(11) != 9");
  std::vector<Parts> expected{{11},        {9, 2},    {8, 3},    {7, 4},          {7, 1, 1, 1, 1},
                              {6, 5},      {6, 3, 2}, {5, 4, 2}, {4, 3, 1, 1, 1, 1}};
  std::vector<Parts> listed;
  for (const auto& p : bruteforce_list("c9", 11)) listed.push_back(p.parts);
  std::ranges::sort(expected);
  std::ranges::sort(listed);
  if (listed != expected) o.fail("c9(11) partitions differ");
  return o;
}

Outcome run_theorems(const std::vector<std::pair<std::string, std::size_t>>& checks) {
  Outcome o;
  for (const auto& [id, order] : checks) {
    const auto r = verify_theorem(id, order);
    if (!r.passed) o.fail(describe(r) + " (N = " + std::to_string(order) + ")");
  }
  return o;
}

Outcome characterizations() {
  return run_theorems({{"T-c1", 2000},
                       {"T-c4", 2000},
                       {"T-c5", 2000},
                       {"T-c6", 2000},
                       {"T-c7", 2000},
                       {"T-c9", 2000},
                       {"T-c10", 2000},
                       {"T-c12", 2000},
                       {"T-c3-mod5", 2000}});
}

Outcome congruences() {
  return run_theorems({{"T-c2", 2000},
                       {"T-c3-mod11", 2000},
                       {"T-c11-mod11", 2000},
                       {"T-c8", 4900},
                       {"C-c12-odd", 2000}});
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  Outcome o;
  constexpr std::int64_t bound = 60;
  for (const auto& id : partition_ids()) {
    const auto s = gf_series(id, bound);
    for (std::int64_t n = 0; n <= bound; ++n) {
      const auto count = bruteforce_count(id, n, bound);
      if (s[static_cast<std::size_t>(n)] != count) {
        o.fail(id + "(" + std::to_string(n) + "): series " + s[static_cast<std::size_t>(n)].get_str() +
               ", enumeration " + std::to_string(count));
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 600) o.fail("took " + std::to_string(secs) + " s");
  if (o.passed) o.detail = "c1..c12, n <= 60, in " + std::to_string(secs) + " s";
  return o;
}

Outcome residue_lists() {
  Outcome o;
  auto expect = [&](const char* what, const Ints& got, const Ints& want) {
    if (got != want) o.fail(std::string(what) + " gave " + join(got));
  };
  expect("n(6n+1) mod 49", quad_residues_mod(6, 1, 49),
         {0, 1, 2, 5, 7, 8, 12, 14, 15, 19, 21, 22, 26, 28, 29, 33, 35, 36, 40, 42, 43, 47});
  expect("n(10n+1) mod 49", quad_residues_mod(10, 1, 49),
         {0, 2, 3, 7, 9, 10, 11, 14, 16, 17, 21, 23, 24, 28, 30, 31, 35, 37, 38, 42, 44, 45});
  expect("n(3n+1) mod 5", quad_residues_mod(3, 1, 5), {0, 2, 4});
  expect("n(n+1)/2 mod 5", quad_residues_mod(1, 1, 5, IndexDomain::nonnegative, 0, 2), {0, 1, 3});
  return o;
}

Outcome scanner() {
  Outcome o;
  auto expect = [&](const char* id, std::int64_t m, const Ints& want) {
    const auto got = scan_zero_progressions(gf_parity(id, 2000), m, 20);
    if (got != want) o.fail(std::string("scan(") + id + ", " + std::to_string(m) + ") = " + join(got));
  };
  expect("c2", 5, {2});
  expect("c3", 11, {5, 7, 9});
  expect("c11", 11, {5, 7, 9});

  // Soundness: half the trials use partition series, half sparse random bit patterns.
  std::mt19937_64 rng(20240601);
  const auto ids = partition_ids();
  std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1), order(100, 2000);
  std::uniform_int_distribution<std::int64_t> modulus(2, 60), support(1, 20);
  std::bernoulli_distribution bit(0.02);
  std::size_t reported = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = order(rng);
    ParitySeries p(n);
    if (trial % 2 == 0) {
      p = gf_parity(ids[pick(rng)], n);
    } else {
      for (std::size_t i = 0; i <= n; ++i) {
        if (bit(rng)) p.flip(i);
      }
    }
    const auto m = modulus(rng);
    for (auto r : scan_zero_progressions(p, m, support(rng))) {
      ++reported;
      if (!verify_congruence(p, {m, r}).passed) {
        o.fail("trial " + std::to_string(trial) + ": residue " + std::to_string(r) + " mod " +
               std::to_string(m) + " is not all even");
      }
    }
  }
  if (o.passed) o.detail = "100 random trials, " + std::to_string(reported) + " reported residues re-verified";
  return o;
}

Outcome proof_steps() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& e : identity_catalog()) {
    if (e.mode != IdentityMode::mod2) continue;
    ++checked;
    const auto r = verify_identity(e, 2000);
    if (!r.passed) o.fail(describe(r));
  }
  if (checked == 0) o.fail("no mod-2 steps catalogued");
  return o;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Outcome()> check;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "identity suite exact to N = 1000 in under 60 s", identities},
      {2, "anchors c2(7) and c9(11)", anchors},
      {3, "parity characterizations at N = 2000", characterizations},
      {4, "congruences at N = 2000 (c8 at N = 4900)", congruences},
      {5, "brute force equals generating function for n <= 60 in under 10 min", oracle_equivalence},
      {6, "residue lists mod 49 and mod 5", residue_lists},
      {7, "scanner rediscovery and soundness", scanner},
      {8, "mod-2 proof steps at N = 2000", proof_steps},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    try {
      selected.push_back(std::stoi(argv[i]));
    } catch (const std::exception&) {
      std::cerr << "usage: acceptance [criterion...]\n";
      return 2;
    }
  }
  bool all_passed = true;
  for (const auto& c : criteria()) {
    if (!selected.empty() && std::ranges::find(selected, c.number) == selected.end()) continue;
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all_passed = all_passed && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  [" << c.number << "] " << c.title;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
  }
  return all_passed ? 0 : 1;
}
