#include "ssq/hypergeom.hpp"

#include <vector>

namespace ssq {

std::string HGSpec::str() const {
  return "G^(" + std::to_string(d) + ")(" + a.str() + ", " + b.str() + ", " + c.str() + " | z)";
}

bool same_series(const HGSpec& x, const HGSpec& y, const PrimeField& field) {
  if (x.d != y.d) return false;
  const FieldElem xa = reduce_rational(x.a, field), xb = reduce_rational(x.b, field);
  const FieldElem ya = reduce_rational(y.a, field), yb = reduce_rational(y.b, field);
  if (reduce_rational(x.c, field) != reduce_rational(y.c, field)) return false;
  return (xa == ya && xb == yb) || (xa == yb && xb == ya);
}

DensePoly truncated_hg(const HGSpec& spec, const PrimeField& field) {
  const std::uint32_t p = field.modulus();
  if (spec.d < 0 || spec.d >= static_cast<std::int64_t>(p)) {
    throw InvalidSpec("truncation order must satisfy 0 <= d < p; got " + spec.str() + " mod " +
                      std::to_string(p));
  }
  const FieldElem a = reduce_rational(spec.a, field);
  const FieldElem b = reduce_rational(spec.b, field);
  const FieldElem c = reduce_rational(spec.c, field);

  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(spec.d) + 1, 0);
  FieldElem term = field.one();
  coeffs[0] = 1;
  for (std::int64_t ell = 0; ell < spec.d; ++ell) {
    const FieldElem l = field(ell);
    const FieldElem den = (c + l) * (field.one() + l);
    if (den.is_zero()) throw PochhammerDivisionByZero(p, spec.str(), ell + 1);
    term = term * (a + l) * (b + l) / den;
    coeffs[static_cast<std::size_t>(ell) + 1] = term.value();
  }
  return DensePoly(field, std::move(coeffs));
}

DensePoly one_minus_z_power(const PrimeField& field, std::uint64_t e) {
  return expand_power(DensePoly(field, {1, -1}), e);
}

bool euler_identity_gap(const HGSpec& left, std::uint64_t exponent, const HGSpec& right,
                        const PrimeField& field) {
  return truncated_hg(left, field) == one_minus_z_power(field, exponent) * truncated_hg(right, field);
}

}  // namespace ssq
