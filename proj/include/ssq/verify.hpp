#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ssq/field.hpp"
#include "ssq/quintic.hpp"

namespace ssq {

// Exhaustive comparison over lambda in F_p \ {0, 1} of three verdicts on
// C_lambda: the coefficient oracle, the hypergeometric criterion over T, and
// vanishing of the family's G(lambda) (when one is defined for p).
struct VerifyReport {
  std::uint64_t p = 0;
  QuinticFamily family = QuinticFamily::Type6_Z10;
  std::uint64_t checked = 0;
  std::vector<std::uint32_t> criterion_mismatches;  // oracle vs criterion over T
  std::vector<std::uint32_t> g_mismatches;          // criterion vs G(lambda) = 0
  std::vector<std::uint32_t> superspecial;          // lambda found superspecial
  std::optional<std::int64_t> deg_g;

  bool ok() const noexcept { return criterion_mismatches.empty() && g_mismatches.empty(); }
};

// family must be Type6_Z10 or Type8_Z8.
VerifyReport verify_family(QuinticFamily family, const PrimeField& field);

}  // namespace ssq
