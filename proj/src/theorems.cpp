#include "qparity/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "qparity/partitions.hpp"

namespace qparity {

namespace {

Theorem characterization(std::string id, const std::string& partition) {
  return {std::move(id), partition, definition(partition).characterizations, {}};
}

Theorem congruences(std::string id, const std::string& partition, std::size_t order = 2000) {
  return {std::move(id), partition, {}, definition(partition).congruences, order};
}

std::vector<Theorem> make_registry() {
  return {
      characterization("T-c1", "c1"),
      congruences("T-c2", "c2"),
      characterization("T-c3-mod5", "c3"),
      congruences("T-c3-mod11", "c3"),
      characterization("T-c4", "c4"),
      characterization("T-c5", "c5"),
      characterization("T-c6", "c6"),
      characterization("T-c7", "c7"),
      // Six progressions mod 49 need a longer expansion to see several periods.
      congruences("T-c8", "c8", 4900),
      characterization("T-c9", "c9"),
      characterization("T-c10", "c10"),
      congruences("T-c11-mod11", "c11"),
      characterization("T-c12", "c12"),
      congruences("C-c12-odd", "c12"),
  };
}

void merge_failure(VerificationReport& into, const VerificationReport& part) {
  if (!part.first_failure) return;
  into.passed = false;
  if (!into.first_failure || *part.first_failure < *into.first_failure) {
    into.first_failure = part.first_failure;
  }
}

std::int64_t elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

}  // namespace

const std::vector<Theorem>& theorem_registry() {
  static const std::vector<Theorem> registry = make_registry();
  return registry;
}

std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& t : theorem_registry()) ids.push_back(t.id);
  return ids;
}

const Theorem& find_theorem(std::string_view id) {
  for (const auto& t : theorem_registry()) {
    if (t.id == id) return t;
  }
  throw std::invalid_argument("unknown theorem id: " + std::string(id));
}

VerificationReport verify_theorem(const Theorem& theorem, std::size_t order) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.id = theorem.id;
  r.order = order;
  r.passed = true;
  const ParitySeries p = gf_parity(theorem.partition, order);
  for (const auto& c : theorem.characterizations) merge_failure(r, check_characterization(p, c));
  for (const auto& c : theorem.congruences) merge_failure(r, verify_congruence(p, c));
  r.elapsed_ms = elapsed_since(start);
  return r;
}

VerificationReport verify_theorem(std::string_view id, std::size_t order) {
  return verify_theorem(find_theorem(id), order);
}

VerificationReport verify_claim(std::string_view partition, const CongruenceClaim& claim,
                                std::size_t order) {
  const auto start = std::chrono::steady_clock::now();
  auto r = verify_congruence(gf_parity(partition, order), claim);
  r.id = std::string(partition) + ":" + std::to_string(claim.modulus) + "n+" +
         std::to_string(claim.residue);
  r.elapsed_ms = elapsed_since(start);
  return r;
}

}  // namespace qparity
