#include "qparity/builders.hpp"

namespace qparity {

std::int64_t ThetaSpec::exponent(std::int64_t n) const noexcept {
  if (weight == ThetaWeight::cube) return n * (n + 1) / 2;
  return (modulus * n * n + (modulus - 2 * shift) * n) / 2;
}

void validate(const FactorSpec& f) {
  if (f.step < 1) throw spec_error("factor step must be >= 1");
}

void validate(const ProductSpec& p) {
  for (const auto& f : p.factors) {
    validate(f);
    if (!f.first.constant() || (f.count && !f.count->constant())) {
      throw spec_error("product factors may not depend on an outer index");
    }
  }
}

void validate(const ThetaSpec& t) {
  if (t.weight == ThetaWeight::cube) return;
  if (t.modulus < 1) throw spec_error("theta modulus must be positive");
  const bool triangular_like = t.domain != IndexDomain::all && t.shift == 0;
  if (!triangular_like && (t.shift <= 0 || t.shift >= t.modulus)) {
    throw spec_error("theta shift must satisfy 0 < r < P");
  }
  // P n^2 + (P - 2r) n = P n (n + 1) - 2 r n is always even; kept as an explicit guard.
  for (std::int64_t n : {1, 2, -1}) {
    if ((t.modulus * n * n + (t.modulus - 2 * t.shift) * n) % 2 != 0) {
      throw spec_error("theta exponent is not integral");
    }
  }
}

void validate(const GFTermSpec& t) {
  if (t.n_start < 0) throw spec_error("term index must start at n >= 0");
  const bool grows = t.lead.a > 0 || (t.lead.a == 0 && t.lead.b > 0);
  if (!t.n_end && !grows) {
    throw spec_error("lead exponent does not grow without bound; the sum would not terminate");
  }
  for (const auto& f : t.factors) validate(f);
}

}  // namespace qparity
