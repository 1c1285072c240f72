#pragma once

// The twelve restricted partition functions c1..c12.
//
// Each function is described twice: by its generating function (authoritative)
// and by a multiplicity rule per summation index j, which drives an independent
// backtracking enumerator. Counts are over (j, partition) pairs, matching the
// generating function; a partition admissible at two indices counts twice.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qparity/claims.hpp"
#include "qparity/series.hpp"
#include "qparity/specs.hpp"

namespace qparity {

inline constexpr std::int64_t default_oracle_bound = 60;

/// Allowed multiplicities lo..hi of one part size; hi absent means unbounded.
struct MultiplicityRange {
  std::int64_t lo = 0;
  std::optional<std::int64_t> hi = 0;

  bool contains(std::int64_t m) const noexcept { return m >= lo && (!hi || m <= *hi); }
  friend bool operator==(const MultiplicityRange&, const MultiplicityRange&) = default;
};

struct PartitionDef {
  std::string id;
  SlaterSpec gf;
  std::vector<ParityCharacterization> characterizations;
  std::vector<CongruenceClaim> congruences;
};

struct PartitionInstance {
  std::int64_t j = 0;
  std::vector<std::int64_t> parts;  // descending

  friend bool operator==(const PartitionInstance&, const PartitionInstance&) = default;
};

struct PartitionList {
  std::string id;
  std::int64_t n = 0;
  std::vector<PartitionInstance> pairs;
};

const std::vector<PartitionDef>& definitions();
/// Throws std::invalid_argument for an unknown id.
const PartitionDef& definition(std::string_view id);
std::vector<std::string> partition_ids();

Series gf_series(std::string_view id, std::size_t order);
ParitySeries gf_parity(std::string_view id, std::size_t order);

bool admissible_index(std::string_view id, std::int64_t j);
/// Multiplicity rule for part size k at index j. Requires an admissible j.
MultiplicityRange multiplicity_rule(std::string_view id, std::int64_t j, std::int64_t k);

bool restriction_predicate(std::string_view id, std::int64_t j,
                           std::span<const std::int64_t> parts);

/// Pairs (j, partition of n) ordered by j, then parts in descending lexicographic order.
/// Throws std::out_of_range when n exceeds the oracle bound.
std::vector<PartitionInstance> bruteforce_list(std::string_view id, std::int64_t n,
                                               std::int64_t oracle_bound = default_oracle_bound);
std::int64_t bruteforce_count(std::string_view id, std::int64_t n,
                              std::int64_t oracle_bound = default_oracle_bound);
/// Number of different partitions among the pairs (a partition valid at several j counts once).
std::int64_t distinct_partition_count(std::span<const PartitionInstance> pairs);

}  // namespace qparity
