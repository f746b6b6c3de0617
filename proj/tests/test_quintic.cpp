#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "oracles.hpp"
#include "ssq/primes.hpp"
#include "ssq/quintic.hpp"
#include "ssq/verify.hpp"

using namespace ssq;

namespace {

using R = RationalParam;
using QF = QuinticFamily;

std::int64_t i(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::vector<std::uint64_t> primes_mod(std::uint64_t modulus, std::uint64_t residue, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_in_range(14, hi)) {
    if (p % modulus == residue) out.push_back(p);
  }
  return out;
}

// Reference verdict on y^n = f from powers of f by repeated multiplication.
bool reference_superspecial(int n, const oracle::Coeffs& f, std::int64_t p) {
  std::map<std::int64_t, oracle::Coeffs> powers;
  const int m = static_cast<int>(f.size()) - 1;
  return oracle::nonzero_tuples(n, m, p, [&](std::int64_t e, std::int64_t N) {
           auto it = powers.find(e);
           if (it == powers.end()) it = powers.emplace(e, oracle::power(f, static_cast<std::uint64_t>(e), p)).first;
           return N < static_cast<std::int64_t>(it->second.size()) ? it->second[static_cast<std::size_t>(N)] : 0;
         })
      .empty();
}

void check_reciprocal_roots(const DensePoly& g) {
  const auto roots = roots_in_field(g);
  for (const FieldElem& r : roots) CHECK(g.eval(r.inverse()).is_zero());
}

}  // namespace

TEST_CASE("family names") {
  CHECK(family_name(QF::Type6_Z10) == "z10");
  CHECK(family_name(QF::Type8_Z8) == "z8");
  CHECK(family_name(QF::Type2_Hurwitz) == "type2");
  CHECK(method_name(CountMethod::kBothAgree) == "both_agree");
}

TEST_CASE("fixed types: examples and errors") {
  CHECK(fixed_type_is_superspecial(QF::Type1_Fermat, 19));
  CHECK(fixed_type_is_superspecial(QF::Type2_Hurwitz, 23));
  CHECK(fixed_type_is_superspecial(QF::Type2_Hurwitz, 43));
  CHECK(fixed_type_is_superspecial(QF::Type4_Z20, 19));
  CHECK_FALSE(fixed_type_is_superspecial(QF::Type5_Z16, 17));
  CHECK_FALSE(fixed_type_is_superspecial(QF::Type1_Fermat, 31));
  CHECK_THROWS_AS(fixed_type_is_superspecial(QF::Type6_Z10, 19), WrongFamily);
  CHECK_THROWS_AS(fixed_type_is_superspecial(QF::Type8_Z8, 19), WrongFamily);
  CHECK_THROWS_AS(fixed_type_is_superspecial(QF::Type1_Fermat, 13), InvalidArgument);
  CHECK_THROWS_AS(fixed_type_is_superspecial(QF::Type1_Fermat, 21), InvalidArgument);
  CHECK_THROWS_AS(fixed_type_model(QF::Type2_Hurwitz, PrimeField(19)), WrongFamily);
}

TEST_CASE("fixed types: congruences agree with the oracle and a reference") {
  struct Case {
    QF family;
    int n;
    oracle::Coeffs f;
    std::uint64_t modulus, residue;
  };
  for (std::uint64_t p : primes_in_range(14, 99)) {
    const std::int64_t ip = i(p);
    const Case cases[] = {
        {QF::Type1_Fermat, 5, {ip - 1, 0, 0, 0, 0, ip - 1}, 5, 4},
        {QF::Type3, 5, {0, ip - 1, 0, 0, 1}, 5, 4},
        {QF::Type4_Z20, 5, {0, ip - 1, 0, 0, 0, 1}, 20, 19},
        {QF::Type5_Z16, 4, {0, ip - 1, 0, 0, 0, 1}, 16, 15},
    };
    for (const Case& c : cases) {
      const bool congruence = p % c.modulus == c.residue;
      const SuperellipticCurve model = fixed_type_model(c.family, PrimeField(p));
      CHECK(model.n() == c.n);
      CHECK(std::equal(model.f().residues().begin(), model.f().residues().end(), c.f.begin(), c.f.end()));
      CHECK(fixed_type_is_superspecial(c.family, p) == congruence);
      CHECK(oracle_is_superspecial(model) == congruence);
      CHECK(reference_superspecial(c.n, c.f, ip) == congruence);
    }
  }
}

TEST_CASE("Hurwitz table entries") {
  CHECK(hurwitz_st(53, 0, 0) == std::pair{4, 1});    // 53 = 1 mod 13
  CHECK(hurwitz_st(17, 2, 0) == std::pair{9, 12});   // 17 = 4 mod 13
  CHECK(hurwitz_st(103, 1, 1) == std::pair{2, 7});   // 103 = 12 mod 13
  CHECK_THROWS_AS(hurwitz_st(17, 2, 2), InvalidPair);
  CHECK_THROWS_AS(hurwitz_st(17, -1, 0), InvalidPair);
  CHECK(hurwitz_is_superspecial_via_table(17));
  CHECK_FALSE(hurwitz_is_superspecial_via_table(53));
  CHECK(hurwitz_is_superspecial_via_table(23));
}

TEST_CASE("Hurwitz: table, congruence and direct solution agree") {
  for (std::uint64_t p : primes_in_range(14, 3000)) {
    const bool congruence = p % 13 == 4 || p % 13 == 10 || p % 13 == 12;
    CHECK(hurwitz_is_superspecial_via_table(p) == congruence);
    CHECK(fixed_type_is_superspecial(QF::Type2_Hurwitz, p) == congruence);
    for (const auto& [a, b] : kHurwitzPairs) CHECK(hurwitz_st(p, a, b) == oracle::hurwitz_st_direct(i(p), a, b));
    if (p < 300) CHECK(oracle::hurwitz_direct(i(p)) == congruence);
  }
}

TEST_CASE("lambda and r^2") {
  const PrimeField f(29);
  const LambdaRoots special = lambda_r_relation(f(20));
  REQUIRE(special.in_base_field());  // 5 is a square mod 29
  const auto [l1, l2] = *special.roots;
  for (const FieldElem& l : {l1, l2}) CHECK((l * l - f(18) * l + f.one()).is_zero());
  CHECK(l1 * l2 == f.one());
  const LambdaRoots zero = lambda_r_relation(f(0));
  REQUIRE(zero.in_base_field());
  CHECK(zero.roots->first == f(-1));
  CHECK(zero.roots->second == f(-1));
  // 20 - 4 = 16 is a square, 7 - 4 = 3 is not (mod 29).
  CHECK_FALSE(lambda_r_relation(f(7)).in_base_field());
}

TEST_CASE("property: lambda roots multiply to 1 and satisfy the relation") {
  const PrimeField f(1009);
  for (int trial = 0; trial < 300; ++trial) {
    const FieldElem r2 = f(oracle::uniform(0, 1008));
    const LambdaRoots lr = lambda_r_relation(r2);
    const FieldElem disc = (r2 - f(2)) * (r2 - f(2)) - f(4);
    CHECK(lr.in_base_field() == (disc.is_zero() || disc.pow(504) == f.one()));
    if (!lr.in_base_field()) continue;
    const auto [a, b] = *lr.roots;
    CHECK(a * b == f.one());
    CHECK(a + b == r2 - f(2));
  }
}

// ---- Z/10 ----------------------------------------------------------------------

TEST_CASE("z10: G(lambda)") {
  CHECK(z10_spec(19) == HGSpec{R(3, 5), R(7, 10), R(11, 10), 5});
  CHECK_THROWS_AS(z10_spec(17), WrongResidue);
  CHECK_THROWS_AS(g_poly_z10(PrimeField(31)), WrongResidue);
  const DensePoly g19 = g_poly_z10(PrimeField(19));
  CHECK(g19.degree() == 5);
  CHECK(is_separable(g19));
  CHECK(gcd(g19, g19.derivative()).degree() == 0);
  const DensePoly g29 = g_poly_z10(PrimeField(29));
  CHECK(g29.degree() == 8);
  CHECK(g29.eval(PrimeField(29).zero()) == PrimeField(29).one());
}

TEST_CASE("z10: counts") {
  const CountResult r29 = count_z10(PrimeField(29));
  CHECK(r29.count == 3);
  CHECK(r29.residue == 9);
  CHECK(r29.deg_g == 8);
  CHECK(r29.adjustments == 2);
  CHECK(r29.method == CountMethod::kBothAgree);
  const CountResult r19 = count_z10(PrimeField(19));
  CHECK(r19.count == 1);
  CHECK(r19.adjustments == 3);
  const CountResult r17 = count_z10(PrimeField(17));
  CHECK(r17.count == 0);
  CHECK_FALSE(r17.deg_g.has_value());
  CHECK(r17.method == CountMethod::kClosedForm);
  CHECK(z10_closed_form(29) == 3);
  CHECK(z10_closed_form(19) == 1);
  CHECK(z10_closed_form(17) == 0);
}

TEST_CASE("z10: special roots, pairing and the two count paths") {
  for (std::uint64_t p : primes_mod(5, 4, 500)) {
    const PrimeField f(p);
    const DensePoly g = g_poly_z10(f);
    CHECK(g.degree() == i((3 * p - 7) / 10));
    CHECK(g.eval(f.zero()) == f.one());
    CHECK_FALSE(g.eval(f.one()).is_zero());
    CHECK(is_separable(g));
    const std::int64_t special = special_lambda_roots_z10(g, f);
    CHECK(special == (p % 20 == 9 ? 2 : 3));
    CHECK(g.eval(f(-1)).is_zero() == (p % 20 == 19));
    const CountResult r = count_z10(f);
    CHECK(2 * r.count + r.adjustments == *r.deg_g);
    CHECK(r.count == z10_closed_form(p));
    CHECK(r.count == (g.degree() - special) / 2);
    check_reciprocal_roots(g);
  }
}

TEST_CASE("z10: criterion, G and oracle agree for small p") {
  for (std::uint64_t p : primes_in_range(14, 59)) {
    const VerifyReport r = verify_family(QF::Type6_Z10, PrimeField(p));
    CHECK(r.checked == p - 2);
    CHECK(r.ok());
    if (p % 5 != 4) CHECK(r.superspecial.empty());
  }
}

// ---- Z/8 -----------------------------------------------------------------------

TEST_CASE("z8: quotient polynomial h") {
  CHECK(quotient_h_spec(17) == HGSpec{R(1, 2), R(1, 4), R(3, 4), 4});
  CHECK(quotient_h_spec(19) == HGSpec{R(1, 2), R(3, 4), R(5, 4), 4});
  for (std::uint64_t p : primes_in_range(14, 400)) {
    const PrimeField f(p);
    const auto refs = z8_reference_specs(p);
    REQUIRE_FALSE(refs.empty());
    // The (1/2, ., .) entry of every case list is h(lambda).
    const auto it =
        std::find_if(refs.begin(), refs.end(), [](const HGSpec& s) { return s.a == R(1, 2) || s.b == R(1, 2); });
    REQUIRE(it != refs.end());
    CHECK(truncated_hg(*it, f) == quotient_h_poly(f));
  }
}

TEST_CASE("z8: reference lists and redundancies") {
  CHECK(z8_reference_specs(23) ==
        std::vector<HGSpec>{{R(1, 2), R(3, 4), R(5, 4), 5}, {R(3, 4), R(7, 8), R(9, 8), 2}});
  CHECK(z8_reference_specs(17).size() == 6);  // seven conditions, one Euler-redundant
  CHECK(z8_reference_specs(19).size() == 5);
  CHECK(z8_reference_specs(29).size() == 5);
  CHECK(z8_euler_redundancies(19).empty());
  CHECK(z8_euler_redundancies(29).empty());
  for (std::uint64_t p : primes_in_range(14, 600)) {
    for (const EulerRedundancy& e : z8_euler_redundancies(p)) {
      CHECK(euler_identity_gap(e.redundant, e.exponent, e.kept, PrimeField(p)));
    }
  }
}

TEST_CASE("z8: G(lambda) and counts") {
  const PrimeField f23(23);
  CHECK(g_poly_z8(f23).degree() == 0);
  CHECK(count_z8(f23).count == 0);
  CHECK(g_poly_z8(PrimeField(31)).degree() == 3);
  CHECK(count_z8(PrimeField(31)).count == 1);
  CHECK(count_z8(PrimeField(29)).count == 0);
  CHECK(count_z8(PrimeField(191)).count == 3);
  CHECK(count_z8(PrimeField(751)).count == 5);
  const CountResult r = count_z8(PrimeField(751));
  CHECK(r.residue == 751 % 16);
  CHECK(r.method == CountMethod::kConstructive);
}

TEST_CASE("z8: gcd structure") {
  for (std::uint64_t p : primes_in_range(14, 700)) {
    const PrimeField f(p);
    const DensePoly g = g_poly_z8(f);
    CHECK(g.is_zero() == false);
    CHECK(g.leading() == f.one());
    CHECK(is_separable(g));
    CHECK_FALSE(g.eval(f.zero()).is_zero());
    CHECK_FALSE(g.eval(f.one()).is_zero());
    CHECK(g.eval(f(-1)).is_zero() == (p % 16 == 15));
    check_reciprocal_roots(g);
    if (p % 8 == 7) {
      const auto refs = z8_reference_specs(p);
      CHECK(g == gcd(truncated_hg(refs[0], f), truncated_hg(refs[1], f)));
    }
    const CountResult r = count_z8(f);
    CHECK(r.deg_g == g.degree());
    CHECK(2 * r.count + (p % 16 == 15 ? 1 : 0) == g.degree());
    if (p % 8 != 7) CHECK(r.count == 0);
  }
}

TEST_CASE("z8: criterion, G and oracle agree for small p") {
  for (std::uint64_t p : primes_in_range(14, 59)) {
    const VerifyReport r = verify_family(QF::Type8_Z8, PrimeField(p));
    CHECK(r.checked == p - 2);
    CHECK(r.ok());
  }
  CHECK_THROWS_AS(verify_family(QF::Type3, PrimeField(19)), WrongFamily);
}
