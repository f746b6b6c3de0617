#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ssq/field.hpp"
#include "ssq/hypergeom.hpp"
#include "ssq/poly.hpp"
#include "ssq/superelliptic.hpp"

namespace ssq {

// Plane quintic automorphism types with families of dimension <= 1.
enum class QuinticFamily {
  Type1_Fermat,   // X^5 + Y^5 + Z^5, |Aut| = 150
  Type2_Hurwitz,  // X^4 Y + Y^4 Z + Z^4 X, |Aut| = 39
  Type3,          // X^5 + Y^4 Z + Y Z^4, |Aut| = 30
  Type4_Z20,      // X^5 + Y^5 + X Z^4
  Type5_Z16,      // X^5 + Y^4 Z + X Z^4
  Type6_Z10,      // X^5 + Y^5 + X Z^4 + r X^3 Z^2
  Type8_Z8,       // X^5 + Y^4 Z + X Z^4 + r X^3 Z^2
};

std::string_view family_name(QuinticFamily family);

enum class CountMethod { kClosedForm, kConstructive, kBothAgree };

std::string_view method_name(CountMethod method);

struct CountResult {
  std::uint64_t p = 0;
  QuinticFamily family = QuinticFamily::Type6_Z10;
  std::uint64_t residue = 0;       // p mod 20 (Z/10) or p mod 16 (Z/8)
  std::optional<std::int64_t> deg_g;  // absent when no G(lambda) is built
  std::int64_t count = 0;
  std::int64_t adjustments = 0;    // special-lambda roots removed before pairing
  CountMethod method = CountMethod::kClosedForm;
};

// ---- zero-dimensional types ------------------------------------------------

// Congruence conditions on p for Types 1-5; WrongFamily for Types 6 and 8.
bool fixed_type_is_superspecial(QuinticFamily family, std::uint64_t p);

// Superelliptic model of Types 1, 3, 4, 5: y^5 = -(x^5+1), y^5 = x^4 - x,
// y^5 = x^5 - x, y^4 = x^5 - x. WrongFamily otherwise; Type 2 has none.
SuperellipticCurve fixed_type_model(QuinticFamily family, const PrimeField& field);

// (i, j) pairs of the Hurwitz quintic analysis.
inline constexpr std::pair<int, int> kHurwitzPairs[6] = {{0, 0}, {0, 1}, {1, 0},
                                                         {0, 2}, {1, 1}, {2, 0}};

// Smallest s, t in 1..12 with s p = 3i+4j+4 and t p = 4i+j+1 (mod 13).
std::pair<int, int> hurwitz_st(std::uint64_t p, int i, int j);

// s <= t for every Hurwitz pair.
bool hurwitz_is_superspecial_via_table(std::uint64_t p);

// ---- lambda <-> r^2 ----------------------------------------------------------

// Roots of lambda^2 - (r^2 - 2) lambda + 1; nullopt means both lie in F_{p^2}.
struct LambdaRoots {
  std::optional<std::pair<FieldElem, FieldElem>> roots;
  bool in_base_field() const noexcept { return roots.has_value(); }
};

LambdaRoots lambda_r_relation(FieldElem r2);

// ---- Z/10 family: y^5 = x (x^2 - 1)(x^2 - lambda) ------------------------------

inline constexpr int kZ10N = 5;
inline constexpr int kZ8N = 4;
inline constexpr int kFamilyR = 2;

// G^((3p-7)/10)(3/5, 7/10, 11/10 | lambda). Requires p = 4 mod 5.
HGSpec z10_spec(std::uint64_t p);

// The polynomial above, checked for degree (3p-7)/10, G(0) = 1, G(1) != 0 and
// separability; AssertionFailure if any fails.
DensePoly g_poly_z10(const PrimeField& field);

// deg gcd(G, lambda^2 - 18 lambda + 1) + [G(-1) = 0].
std::int64_t special_lambda_roots_z10(const DensePoly& g, const PrimeField& field);

CountResult count_z10(const PrimeField& field);

// Closed form count for p > 13.
std::int64_t z10_closed_form(std::uint64_t p);

// ---- Z/8 family: y^4 = x (x^2 - 1)(x^2 - lambda) -------------------------------

// The deduplicated list of hypergeometric conditions for p mod 8, as stated
// in closed form alongside the quotient curve analysis. Used to check the
// list derived from compute_T.
std::vector<HGSpec> z8_reference_specs(std::uint64_t p);

// Pairs (redundant, kept, exponent) with redundant = (1 - z)^exponent * kept.
struct EulerRedundancy {
  HGSpec redundant;
  HGSpec kept;
  std::uint64_t exponent;
};
std::vector<EulerRedundancy> z8_euler_redundancies(std::uint64_t p);

// h(lambda) for the genus-2 quotient v^2 = u (u^2 - 1)(u^2 - lambda).
HGSpec quotient_h_spec(std::uint64_t p);
DensePoly quotient_h_poly(const PrimeField& field);

// Monic gcd of every criterion polynomial of (n, r) = (4, 2), with the
// derived spec list checked against z8_reference_specs and the result checked
// separable and nonzero at 0 and 1.
DensePoly g_poly_z8(const PrimeField& field);

CountResult count_z8(const PrimeField& field);

// Distinct roots of f lying in F_p, ascending, by exhaustive scan.
std::vector<FieldElem> roots_in_field(const DensePoly& f);

}  // namespace ssq
