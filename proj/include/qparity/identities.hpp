#pragma once

// Catalog of q-series identities checked coefficientwise to a truncation order:
// triple-product specializations, the Gauss and cube identities, a Cauchy
// specialization, ten Slater identities, and the mod-2 steps linking the
// partition generating functions to theta series.
//
// Entry ids are stable strings ("slater.eq32", "step.c8.pentagonal-split").

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qparity/analysis.hpp"
#include "qparity/series.hpp"
#include "qparity/specs.hpp"

namespace qparity {

enum class IdentityMode { exact, mod2 };

struct IdentityEntry {
  std::string id;
  std::string title;
  std::vector<std::string> aliases;
  Expr lhs;
  Expr rhs;
  IdentityMode mode = IdentityMode::exact;
  std::string note;
};

enum class IdentitySide { lhs, rhs };

const std::vector<IdentityEntry>& identity_catalog();
std::vector<std::string> identity_ids();
/// Looks up by id or alias; throws std::invalid_argument when unknown.
const IdentityEntry& find_identity(std::string_view id);

Series evaluate_exact(const IdentityEntry& entry, IdentitySide side, std::size_t order);
ParitySeries evaluate_parity(const IdentityEntry& entry, IdentitySide side, std::size_t order);

/// Builds both sides (reduced mod 2 first for mod2 entries) and compares.
VerificationReport verify_identity(const IdentityEntry& entry, std::size_t order);
VerificationReport verify_identity(std::string_view id, std::size_t order);

}  // namespace qparity
