#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qparity/claims.hpp"
#include "qparity/series.hpp"

namespace qparity {

inline constexpr std::int64_t default_min_support = 20;

/// Outcome of a bounded check. A pass means "holds for every coefficient up to order".
struct VerificationReport {
  std::string id;
  std::size_t order = 0;
  bool passed = false;
  std::optional<std::int64_t> first_failure;
  std::int64_t elapsed_ms = 0;
};

/// Sorted, de-duplicated members of f in [0, limit].
std::vector<std::int64_t> family_members(const QuadraticFamily& f, std::int64_t limit);

/// Union of family_members over several families.
std::vector<std::int64_t> family_union(std::span<const QuadraticFamily> families,
                                       std::int64_t limit);

/// Bits of p along modulus * n + residue, re-indexed by n.
ParitySeries restrict_to_progression(const ParitySeries& p, const Progression& on);

/// Pass iff the odd coefficients of p are exactly the union of the families.
/// first_failure is the smallest index in the symmetric difference.
VerificationReport parity_matches_families(const ParitySeries& p,
                                           std::span<const QuadraticFamily> families);

/// Checks a characterization on the whole series or on one progression of it.
/// first_failure is reported as an exponent of p itself.
VerificationReport check_characterization(const ParitySeries& p, const ParityCharacterization& c);

/// Pass iff every coefficient at modulus * n + residue <= order is even.
VerificationReport verify_congruence(const ParitySeries& p, const CongruenceClaim& c);

/// Residues r whose progression has at least min_support checked indices, all even.
std::vector<std::int64_t> scan_zero_progressions(const ParitySeries& p, std::int64_t modulus,
                                                 std::int64_t min_support = default_min_support);

/// { ((alpha j^2 + beta j + gamma) / denominator) mod m } over all admissible j
/// for which the division is exact. One period of j (denominator * m values) suffices.
std::vector<std::int64_t> quad_residues_mod(std::int64_t alpha, std::int64_t beta, std::int64_t m,
                                            IndexDomain domain = IndexDomain::all,
                                            std::int64_t gamma = 0, std::int64_t denominator = 1,
                                            std::int64_t j_offset = 0);

}  // namespace qparity
