#include "qparity/analysis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qparity {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

bool side_ok(const QuadraticFamily& f, std::int64_t j) {
  if (!f.side) return true;
  const std::int64_t r = floor_mod(j, f.side->modulus);
  return std::find(f.side->residues.begin(), f.side->residues.end(), r) != f.side->residues.end();
}

std::optional<std::int64_t> symmetric_difference_min(const ParitySeries& p,
                                                     std::span<const std::int64_t> members) {
  ParitySeries expected(p.order());
  for (auto m : members) expected.flip(static_cast<std::size_t>(m));
  if (auto d = first_difference(p, expected)) return static_cast<std::int64_t>(*d);
  return std::nullopt;
}

}  // namespace

std::vector<std::int64_t> family_members(const QuadraticFamily& f, std::int64_t limit) {
  if (f.alpha <= 0) throw std::invalid_argument("family needs alpha > 0");
  if (f.denominator <= 0) throw std::invalid_argument("family needs a positive denominator");
  std::set<std::int64_t> out;
  const std::int64_t ceiling = f.denominator * limit;
  auto value = [&](std::int64_t j) { return (f.alpha * j + f.beta) * j + f.gamma; };
  auto visit = [&](std::int64_t j) {
    const std::int64_t v = value(j);
    if (v < 0 || v > ceiling || v % f.denominator != 0 || !side_ok(f, j)) return;
    out.insert(v / f.denominator);
  };

  const std::int64_t start = f.domain == IndexDomain::positive ? 1 : 0;
  for (std::int64_t j = start;; ++j) {
    visit(j);
    if (value(j) > ceiling && f.alpha * (2 * j + 1) + f.beta > 0) break;
  }
  if (f.domain == IndexDomain::all) {
    for (std::int64_t j = -1;; --j) {
      visit(j);
      if (value(j) > ceiling && f.alpha * (1 - 2 * j) - f.beta > 0) break;
    }
  }
  return {out.begin(), out.end()};
}

std::vector<std::int64_t> family_union(std::span<const QuadraticFamily> families,
                                       std::int64_t limit) {
  std::set<std::int64_t> out;
  for (const auto& f : families) {
    for (auto m : family_members(f, limit)) out.insert(m);
  }
  return {out.begin(), out.end()};
}

ParitySeries restrict_to_progression(const ParitySeries& p, const Progression& on) {
  if (on.modulus < 1 || on.residue < 0) throw std::invalid_argument("invalid progression");
  const auto order = static_cast<std::int64_t>(p.order());
  if (on.residue > order) throw std::invalid_argument("progression starts beyond the order");
  const std::int64_t sub_order = (order - on.residue) / on.modulus;
  ParitySeries out(static_cast<std::size_t>(sub_order));
  for (std::int64_t n = 0; n <= sub_order; ++n) {
    if (p[static_cast<std::size_t>(on.modulus * n + on.residue)]) {
      out.flip(static_cast<std::size_t>(n));
    }
  }
  return out;
}

VerificationReport parity_matches_families(const ParitySeries& p,
                                           std::span<const QuadraticFamily> families) {
  VerificationReport r;
  r.order = p.order();
  const auto members = family_union(families, static_cast<std::int64_t>(p.order()));
  r.first_failure = symmetric_difference_min(p, members);
  r.passed = !r.first_failure;
  return r;
}

VerificationReport check_characterization(const ParitySeries& p, const ParityCharacterization& c) {
  if (!c.on) return parity_matches_families(p, c.support);
  auto r = parity_matches_families(restrict_to_progression(p, *c.on), c.support);
  r.order = p.order();
  if (r.first_failure) *r.first_failure = c.on->modulus * *r.first_failure + c.on->residue;
  return r;
}

VerificationReport verify_congruence(const ParitySeries& p, const CongruenceClaim& c) {
  if (c.modulus < 2 || c.residue < 0 || c.residue >= c.modulus) {
    throw std::invalid_argument("congruence needs m >= 2 and 0 <= r < m");
  }
  VerificationReport r;
  r.order = p.order();
  const auto order = static_cast<std::int64_t>(p.order());
  for (std::int64_t n = c.residue; n <= order; n += c.modulus) {
    if (p[static_cast<std::size_t>(n)]) {
      r.first_failure = n;
      break;
    }
  }
  r.passed = !r.first_failure;
  return r;
}

std::vector<std::int64_t> scan_zero_progressions(const ParitySeries& p, std::int64_t modulus,
                                                 std::int64_t min_support) {
  if (modulus < 2) throw std::invalid_argument("scan needs a modulus >= 2");
  if (min_support < 1) throw std::invalid_argument("min_support must be >= 1");
  const auto order = static_cast<std::int64_t>(p.order());
  std::vector<std::int64_t> out;
  for (std::int64_t r = 0; r < modulus; ++r) {
    const std::int64_t checked = r <= order ? (order - r) / modulus + 1 : 0;
    if (checked < min_support) continue;
    bool all_even = true;
    for (std::int64_t n = r; n <= order && all_even; n += modulus) {
      all_even = !p[static_cast<std::size_t>(n)];
    }
    if (all_even) out.push_back(r);
  }
  return out;
}

std::vector<std::int64_t> quad_residues_mod(std::int64_t alpha, std::int64_t beta, std::int64_t m,
                                            IndexDomain domain, std::int64_t gamma,
                                            std::int64_t denominator, std::int64_t j_offset) {
  if (m < 2) throw std::invalid_argument("residues need a modulus >= 2");
  if (denominator < 1) throw std::invalid_argument("denominator must be positive");
  const std::int64_t period = denominator * m;
  std::int64_t start = j_offset;
  if (domain == IndexDomain::nonnegative) start = std::max<std::int64_t>(start, 0);
  if (domain == IndexDomain::positive) start = std::max<std::int64_t>(start, 1);
  std::set<std::int64_t> out;
  for (std::int64_t j = start; j < start + period; ++j) {
    const std::int64_t v = (alpha * j + beta) * j + gamma;
    if (v % denominator != 0) continue;
    out.insert(floor_mod(v / denominator, m));
  }
  return {out.begin(), out.end()};
}

}  // namespace qparity
