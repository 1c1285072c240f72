#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qparity/specs.hpp"

namespace qparity {

/// Side condition on the family index: j mod modulus must lie in residues.
struct IndexResidues {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> residues;

  friend bool operator==(const IndexResidues&, const IndexResidues&) = default;
};

/// { n : denominator * n = alpha j^2 + beta j + gamma for an admissible j }.
struct QuadraticFamily {
  std::int64_t alpha = 1;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  std::int64_t denominator = 1;
  IndexDomain domain = IndexDomain::all;
  std::optional<IndexResidues> side;

  friend bool operator==(const QuadraticFamily&, const QuadraticFamily&) = default;
};

/// c(modulus * n + residue) is even for every n >= 0.
struct CongruenceClaim {
  std::int64_t modulus = 2;
  std::int64_t residue = 0;

  friend bool operator==(const CongruenceClaim&, const CongruenceClaim&) = default;
};

/// The arithmetic progression modulus * n + residue, n >= 0.
struct Progression {
  std::int64_t modulus = 1;
  std::int64_t residue = 0;

  friend bool operator==(const Progression&, const Progression&) = default;
};

/// Odd values of c(n), or of c(m n + r) as a function of n when `on` is set,
/// occur exactly on the union of `support`.
struct ParityCharacterization {
  std::optional<Progression> on;
  std::vector<QuadraticFamily> support;
};

}  // namespace qparity
