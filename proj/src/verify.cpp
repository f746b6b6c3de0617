#include "ssq/verify.hpp"

#include "ssq/superelliptic.hpp"

namespace ssq {

VerifyReport verify_family(QuinticFamily family, const PrimeField& field) {
  int n = 0;
  std::optional<DensePoly> g;
  const std::uint64_t p = field.modulus();
  if (family == QuinticFamily::Type6_Z10) {
    n = kZ10N;
    if (p % 5 == 4) g = g_poly_z10(field);
  } else if (family == QuinticFamily::Type8_Z8) {
    n = kZ8N;
    g = g_poly_z8(field);
  } else {
    throw WrongFamily("verification covers the z10 and z8 families only");
  }

  const FamilyParams params(n, kFamilyR, field);
  const ClambdaCriterion criterion(params);

  VerifyReport report;
  report.p = p;
  report.family = family;
  if (g) report.deg_g = g->degree();
  for (std::uint32_t v = 2; v < field.modulus(); ++v) {
    const FieldElem lambda = FieldElem::raw(v, field.modulus());
    const bool by_oracle = oracle_is_superspecial(clambda_curve(params, lambda));
    const bool by_criterion = criterion.is_superspecial(lambda);
    // Without a G(lambda) the family has no superspecial member at all.
    const bool by_g = g ? g->eval(lambda).is_zero() : false;
    ++report.checked;
    if (by_oracle != by_criterion) report.criterion_mismatches.push_back(v);
    if (by_criterion != by_g) report.g_mismatches.push_back(v);
    if (by_oracle) report.superspecial.push_back(v);
  }
  return report;
}

}  // namespace ssq
