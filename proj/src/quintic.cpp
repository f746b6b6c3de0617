#include "ssq/quintic.hpp"

#include "ssq/primes.hpp"

namespace ssq {

namespace {

void require_valid_prime(std::uint64_t p) {
  if (p <= PrimeField::kMinExclusive || !is_prime(p)) {
    throw InvalidArgument("expected a prime p > 13, got " + std::to_string(p));
  }
}

HGSpec spec(std::int64_t an, std::int64_t ad, std::int64_t bn, std::int64_t bd, std::int64_t cn,
            std::int64_t cd, std::int64_t d) {
  return HGSpec{RationalParam(an, ad), RationalParam(bn, bd), RationalParam(cn, cd), d};
}

}  // namespace

std::string_view family_name(QuinticFamily family) {
  switch (family) {
    case QuinticFamily::Type1_Fermat: return "type1";
    case QuinticFamily::Type2_Hurwitz: return "type2";
    case QuinticFamily::Type3: return "type3";
    case QuinticFamily::Type4_Z20: return "type4";
    case QuinticFamily::Type5_Z16: return "type5";
    case QuinticFamily::Type6_Z10: return "z10";
    case QuinticFamily::Type8_Z8: return "z8";
  }
  return "?";
}

std::string_view method_name(CountMethod method) {
  switch (method) {
    case CountMethod::kClosedForm: return "closed_form";
    case CountMethod::kConstructive: return "constructive";
    case CountMethod::kBothAgree: return "both_agree";
  }
  return "?";
}

bool fixed_type_is_superspecial(QuinticFamily family, std::uint64_t p) {
  require_valid_prime(p);
  switch (family) {
    case QuinticFamily::Type1_Fermat:
    case QuinticFamily::Type3: return p % 5 == 4;
    case QuinticFamily::Type2_Hurwitz: {
      const auto res = p % 13;
      return res == 4 || res == 10 || res == 12;
    }
    case QuinticFamily::Type4_Z20: return p % 20 == 19;
    case QuinticFamily::Type5_Z16: return p % 16 == 15;
    default: break;
  }
  throw WrongFamily(std::string(family_name(family)) + " is a one-parameter family, not a fixed type");
}

SuperellipticCurve fixed_type_model(QuinticFamily family, const PrimeField& field) {
  switch (family) {
    case QuinticFamily::Type1_Fermat: return SuperellipticCurve(5, DensePoly(field, {-1, 0, 0, 0, 0, -1}));
    case QuinticFamily::Type3: return SuperellipticCurve(5, DensePoly(field, {0, -1, 0, 0, 1}));
    case QuinticFamily::Type4_Z20: return SuperellipticCurve(5, DensePoly(field, {0, -1, 0, 0, 0, 1}));
    case QuinticFamily::Type5_Z16: return SuperellipticCurve(4, DensePoly(field, {0, -1, 0, 0, 0, 1}));
    default: break;
  }
  throw WrongFamily(std::string(family_name(family)) + " has no superelliptic model here");
}

std::pair<int, int> hurwitz_st(std::uint64_t p, int i, int j) {
  bool known = false;
  for (const auto& [pi, pj] : kHurwitzPairs) known = known || (pi == i && pj == j);
  if (!known) {
    throw InvalidPair("(" + std::to_string(i) + "," + std::to_string(j) + ") is not a Hurwitz pair");
  }
  const int res = static_cast<int>(p % 13);
  if (res == 0) throw InvalidArgument("p must not be divisible by 13");
  const int s_target = (3 * i + 4 * j + 4) % 13;
  const int t_target = (4 * i + j + 1) % 13;
  int s = 0, t = 0;
  for (int x = 1; x <= 12; ++x) {
    if (s == 0 && (x * res) % 13 == s_target) s = x;
    if (t == 0 && (x * res) % 13 == t_target) t = x;
  }
  return {s, t};
}

bool hurwitz_is_superspecial_via_table(std::uint64_t p) {
  for (const auto& [i, j] : kHurwitzPairs) {
    const auto [s, t] = hurwitz_st(p, i, j);
    if (s > t) return false;
  }
  return true;
}

LambdaRoots lambda_r_relation(FieldElem r2) {
  const PrimeField field = r2.field();
  const FieldElem trace = r2 - field(2);
  const auto root = sqrt_mod(trace * trace - field(4));
  if (!root) return {};
  const FieldElem half = field(2).inverse();
  return {std::make_pair((trace + *root) * half, (trace - *root) * half)};
}

// ---- Z/10 -------------------------------------------------------------------

HGSpec z10_spec(std::uint64_t p) {
  if (p % 5 != 4) throw WrongResidue("G(lambda) for the Z/10 family needs p = 4 mod 5");
  return spec(3, 5, 7, 10, 11, 10, static_cast<std::int64_t>((3 * p - 7) / 10));
}

DensePoly g_poly_z10(const PrimeField& field) {
  const std::uint64_t p = field.modulus();
  const HGSpec s = z10_spec(p);
  DensePoly g = truncated_hg(s, field);
  const std::string where = " for p=" + std::to_string(p);
  if (g.degree() != s.d) throw AssertionFailure("deg G != (3p-7)/10" + where);
  if (g.eval(field.zero()) != field.one()) throw AssertionFailure("G(0) != 1" + where);
  if (g.eval(field.one()).is_zero()) throw AssertionFailure("G(1) == 0" + where);
  if (!is_separable(g)) throw AssertionFailure("G is not separable" + where);
  return g;
}

std::int64_t special_lambda_roots_z10(const DensePoly& g, const PrimeField& field) {
  // Roots 9 +- 4 sqrt5 give the order-150 curve; lambda = -1 gives Z/20.
  const DensePoly quadratic(field, {1, -18, 1});
  std::int64_t n = gcd(g, quadratic).degree();
  if (g.eval(field(-1)).is_zero()) ++n;
  return n;
}

std::int64_t z10_closed_form(std::uint64_t p) {
  require_valid_prime(p);
  const auto p64 = static_cast<std::int64_t>(p);
  if (p % 20 == 9) return (3 * p64 - 27) / 20;
  if (p % 20 == 19) return (3 * p64 - 37) / 20;
  return 0;
}

CountResult count_z10(const PrimeField& field) {
  const std::uint64_t p = field.modulus();
  CountResult out;
  out.p = p;
  out.family = QuinticFamily::Type6_Z10;
  out.residue = p % 20;
  out.count = z10_closed_form(p);
  if (p % 5 != 4) return out;

  const DensePoly g = g_poly_z10(field);
  const std::int64_t special = special_lambda_roots_z10(g, field);
  const std::string where = " at p=" + std::to_string(p);
  if (g.eval(field(-1)).is_zero() != (p % 20 == 19)) {
    throw CrossCheckMismatch("G(-1) = 0 disagrees with the Z/20 type congruence" + where);
  }
  const std::int64_t remaining = g.degree() - special;
  if (remaining % 2 != 0) throw ParityViolation("deg G - special roots is odd" + where);
  const std::int64_t constructive = remaining / 2;
  if (constructive != out.count) {
    throw CrossCheckMismatch("closed form " + std::to_string(out.count) + " != constructive " +
                             std::to_string(constructive) + where);
  }
  out.deg_g = g.degree();
  out.adjustments = special;
  out.method = CountMethod::kBothAgree;
  return out;
}

// ---- Z/8 --------------------------------------------------------------------

std::vector<HGSpec> z8_reference_specs(std::uint64_t p) {
  const auto q = static_cast<std::int64_t>(p);
  switch (p % 8) {
    case 1:
      return {spec(1, 2, 1, 4, 3, 4, (q - 1) / 4),      spec(1, 4, 1, 8, 7, 8, (q - 1) / 8),
              spec(3, 4, 1, 8, 3, 8, (q - 1) / 8),      spec(3, 4, 3, 8, 5, 8, (3 * q - 3) / 8),
              spec(3, 4, 9, 8, 11, 8, (q - 9) / 8),     spec(3, 4, 11, 8, 13, 8, (3 * q - 11) / 8)};
    case 3:
      return {spec(1, 2, 3, 4, 5, 4, (q - 3) / 4),      spec(1, 4, 1, 8, 7, 8, (3 * q - 1) / 8),
              spec(1, 4, 3, 8, 9, 8, (q - 3) / 8),      spec(3, 4, 3, 8, 5, 8, (q - 3) / 8),
              spec(3, 4, 11, 8, 13, 8, (q - 11) / 8)};
    case 5:
      return {spec(1, 2, 1, 4, 3, 4, (q - 1) / 4),      spec(3, 4, 1, 8, 3, 8, (5 * q - 1) / 8),
              spec(3, 4, 5, 8, 7, 8, (q - 5) / 8),      spec(3, 4, 7, 8, 9, 8, (3 * q - 7) / 8),
              spec(3, 4, 9, 8, 11, 8, (5 * q - 9) / 8)};
    case 7:
      return {spec(1, 2, 3, 4, 5, 4, (q - 3) / 4), spec(3, 4, 7, 8, 9, 8, (q - 7) / 8)};
    default: break;
  }
  throw InvalidArgument("p must be odd");
}

std::vector<EulerRedundancy> z8_euler_redundancies(std::uint64_t p) {
  const auto q = static_cast<std::int64_t>(p);
  if (p % 8 == 1) {
    return {{spec(3, 4, 5, 8, 7, 8, (5 * q - 5) / 8), spec(1, 4, 1, 8, 7, 8, (q - 1) / 8), (p - 1) / 2}};
  }
  if (p % 8 == 7) {
    return {{spec(1, 4, 3, 8, 9, 8, (5 * q - 3) / 8), spec(3, 4, 7, 8, 9, 8, (q - 7) / 8), (p + 1) / 2}};
  }
  return {};
}

HGSpec quotient_h_spec(std::uint64_t p) {
  const auto q = static_cast<std::int64_t>(p);
  if (p % 4 == 1) return spec(1, 2, 1, 4, 3, 4, (q - 1) / 4);
  return spec(1, 2, 3, 4, 5, 4, (q - 3) / 4);
}

DensePoly quotient_h_poly(const PrimeField& field) { return truncated_hg(quotient_h_spec(field.modulus()), field); }

namespace {

bool contains_series(const std::vector<HGSpec>& list, const HGSpec& s, const PrimeField& field) {
  for (const auto& x : list) {
    if (same_series(x, s, field)) return true;
  }
  return false;
}

}  // namespace

DensePoly g_poly_z8(const PrimeField& field) {
  const std::uint64_t p = field.modulus();
  const std::string where = " for p=" + std::to_string(p);
  const auto terms = criterion_polynomials(FamilyParams(kZ8N, kFamilyR, field));
  const auto reference = z8_reference_specs(p);
  const auto redundant = z8_euler_redundancies(p);

  std::vector<HGSpec> derived;
  for (const auto& term : terms) {
    if (!contains_series(derived, term.spec, field)) derived.push_back(term.spec);
  }
  for (const auto& s : reference) {
    if (!contains_series(derived, s, field)) throw AssertionFailure("missing condition " + s.str() + where);
  }
  for (const auto& s : derived) {
    if (contains_series(reference, s, field)) continue;
    bool explained = false;
    for (const auto& e : redundant) {
      if (same_series(e.redundant, s, field)) {
        if (!euler_identity_gap(e.redundant, e.exponent, e.kept, field)) {
          throw AssertionFailure("Euler identity fails for " + s.str() + where);
        }
        explained = true;
      }
    }
    if (!explained) throw AssertionFailure("unexpected condition " + s.str() + where);
  }

  // gcd over every derived polynomial, redundant ones included.
  DensePoly g(field);
  for (const auto& s : derived) g = gcd(g, truncated_hg(s, field));
  if (g.eval(field.zero()).is_zero()) throw AssertionFailure("G(0) == 0" + where);
  if (g.eval(field.one()).is_zero()) throw AssertionFailure("G(1) == 0" + where);
  if (!is_separable(g)) throw AssertionFailure("G is not separable" + where);
  return g;
}

CountResult count_z8(const PrimeField& field) {
  const std::uint64_t p = field.modulus();
  const std::string where = " at p=" + std::to_string(p);
  const DensePoly g = g_poly_z8(field);
  const bool minus_one = g.eval(field(-1)).is_zero();
  if (minus_one != (p % 16 == 15)) {
    throw CrossCheckMismatch("G(-1) = 0 disagrees with the Z/16 type congruence" + where);
  }
  const std::int64_t adjustments = p % 16 == 15 ? 1 : 0;
  const std::int64_t remaining = g.degree() - adjustments;
  if (remaining % 2 != 0) throw ParityViolation("deg G has the wrong parity" + where);

  CountResult out;
  out.p = p;
  out.family = QuinticFamily::Type8_Z8;
  out.residue = p % 16;
  out.deg_g = g.degree();
  out.count = remaining / 2;
  out.adjustments = adjustments;
  out.method = CountMethod::kConstructive;
  return out;
}

std::vector<FieldElem> roots_in_field(const DensePoly& f) {
  std::vector<FieldElem> out;
  if (f.is_zero()) throw ZeroPolynomial("every element is a root of the zero polynomial");
  const PrimeField& field = f.field();
  for (std::uint32_t x = 0; x < field.modulus(); ++x) {
    const FieldElem e = FieldElem::raw(x, field.modulus());
    if (f.eval(e).is_zero()) out.push_back(e);
  }
  return out;
}

}  // namespace ssq
