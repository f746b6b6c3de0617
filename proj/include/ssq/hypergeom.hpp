#pragma once

#include <cstdint>
#include <string>

#include "ssq/field.hpp"
#include "ssq/poly.hpp"

namespace ssq {

// Parameters of the truncated Gaussian hypergeometric polynomial
//   G^(d)(a, b, c | z) = sum_{l=0}^{d} (a;l)(b;l) / ((c;l)(1;l)) z^l.
// The same symbolic spec is reused across primes; it is reduced mod p only
// when a polynomial is built.
struct HGSpec {
  RationalParam a;
  RationalParam b;
  RationalParam c;
  std::int64_t d = 0;

  std::string str() const;
  friend bool operator==(const HGSpec&, const HGSpec&) = default;
};

// Same polynomial over `field`: d equal and (a, b, c) congruent mod p up to
// swapping a and b.
bool same_series(const HGSpec& x, const HGSpec& y, const PrimeField& field);

// Builds G^(d)(a, b, c | z) via the term ratio (a+l)(b+l) / ((c+l)(1+l)).
// Requires 0 <= d < p and denominators of a, b, c prime to p. Throws
// PochhammerDivisionByZero at the first l where c + l or 1 + l vanishes.
DensePoly truncated_hg(const HGSpec& spec, const PrimeField& field);

// True iff truncated_hg(left) == (1 - z)^exponent * truncated_hg(right).
bool euler_identity_gap(const HGSpec& left, std::uint64_t exponent, const HGSpec& right,
                        const PrimeField& field);

// (1 - z)^e.
DensePoly one_minus_z_power(const PrimeField& field, std::uint64_t e);

}  // namespace ssq
