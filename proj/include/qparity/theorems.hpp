#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qparity/analysis.hpp"
#include "qparity/claims.hpp"

namespace qparity {

/// A parity statement about one partition function, as a bundle of checks.
struct Theorem {
  std::string id;
  std::string partition;
  std::vector<ParityCharacterization> characterizations;
  std::vector<CongruenceClaim> congruences;
  std::size_t default_order = 2000;
};

const std::vector<Theorem>& theorem_registry();
std::vector<std::string> theorem_ids();
const Theorem& find_theorem(std::string_view id);

/// Runs every check of the theorem on the mod-2 generating function at `order`.
/// first_failure is the smallest failing exponent across all checks.
VerificationReport verify_theorem(const Theorem& theorem, std::size_t order);
VerificationReport verify_theorem(std::string_view id, std::size_t order);

/// Ad-hoc congruence claim against one partition function.
VerificationReport verify_claim(std::string_view partition, const CongruenceClaim& claim,
                                std::size_t order);

}  // namespace qparity
