#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "ssq/primes.hpp"
#include "ssq/quintic.hpp"
#include "ssq/superelliptic.hpp"

using namespace ssq;

namespace {

using R = RationalParam;

std::vector<oracle::Tuple> plain(const std::vector<IndexTuple>& v) {
  std::vector<oracle::Tuple> out;
  for (const auto& t : v) out.push_back({t.i, t.j, t.h, t.k});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::Tuple> sorted(std::vector<oracle::Tuple> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool contains(const std::vector<IndexTuple>& set, IndexTuple t) {
  return std::find(set.begin(), set.end(), t) != set.end();
}

DensePoly xmx(const PrimeField& f, int m) { return DensePoly::monomial(f.one(), m) - DensePoly(f, {0, 1}); }

std::int64_t i(std::uint64_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

TEST_CASE("curve validation") {
  const PrimeField f(19);
  CHECK_NOTHROW(SuperellipticCurve(5, xmx(f, 4)));
  CHECK_THROWS_AS(SuperellipticCurve(1, xmx(f, 4)), InvalidCurve);
  CHECK_THROWS_AS(SuperellipticCurve(19, xmx(f, 4)), InvalidCurve);
  CHECK_THROWS_AS(SuperellipticCurve(5, DensePoly(f, {0, 0, 1})), InvalidCurve);
  CHECK_THROWS_AS(SuperellipticCurve(5, DensePoly(f, {0, 0, 1, 1})), InvalidCurve);
  CHECK_THROWS_AS(FamilyParams(5, 0, f), InvalidArgument);
  CHECK_THROWS_AS(FamilyParams(19, 2, f), InvalidArgument);
}

TEST_CASE("oracle examples") {
  CHECK(oracle_is_superspecial(SuperellipticCurve(5, xmx(PrimeField(19), 4))));
  const OracleReport r17 = oracle_report(SuperellipticCurve(5, xmx(PrimeField(17), 4)));
  CHECK_FALSE(r17.superspecial);
  CHECK(contains(r17.witnesses, {2, 4, 1, 2}));
  CHECK(std::is_sorted(r17.witnesses.begin(), r17.witnesses.end()));
  CHECK(oracle_is_superspecial(SuperellipticCurve(4, xmx(PrimeField(31), 5))));
}

TEST_CASE("compute_S examples") {
  CHECK(compute_S(5, 5, 19).empty());
  CHECK(contains(compute_S(5, 4, 31), {2, 2, 1, 1}));
  CHECK(contains(compute_S(4, 5, 17), {1, 1, 1, 1}));
  CHECK(xmx_is_superspecial(5, 5, 59));
  CHECK(xmx_is_superspecial(5, 4, 19));
  CHECK_FALSE(xmx_is_superspecial(4, 5, 17));
}

TEST_CASE("compute_T examples") {
  using V = std::vector<IndexTuple>;
  CHECK(compute_T(FamilyParams(5, 2, PrimeField(19))) == V{{2, 3, 1, 2}, {3, 2, 2, 1}});
  CHECK(compute_T(FamilyParams(4, 2, PrimeField(23))) == V{{1, 3, 1, 2}, {2, 2, 1, 2}, {2, 2, 2, 1}, {3, 1, 2, 1}});
  CHECK(compute_T(FamilyParams(4, 2, PrimeField(19))) ==
        V{{1, 3, 1, 1}, {1, 3, 1, 3}, {2, 2, 1, 2}, {2, 2, 2, 1}, {3, 1, 1, 1}, {3, 1, 3, 1}});
}

TEST_CASE("criterion_polynomials examples") {
  for (std::uint64_t p : {19ULL, 29ULL, 59ULL}) {
    const auto terms = criterion_polynomials(FamilyParams(5, 2, PrimeField(p)));
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].tuple == IndexTuple{2, 3, 1, 2});
    CHECK(terms[0].spec == HGSpec{R(3, 5), R(7, 10), R(11, 10), i((3 * p - 7) / 10)});
    CHECK(terms[0].branch == CriterionBranch::kLower);
    CHECK(terms[1].tuple == IndexTuple{3, 2, 2, 1});
    CHECK(terms[1].spec == HGSpec{R(2, 5), R(1, 2), R(11, 10), i((p - 1) / 2)});
  }
  for (std::uint64_t p : {23ULL, 31ULL, 47ULL}) {
    const auto terms = criterion_polynomials(FamilyParams(4, 2, PrimeField(p)));
    REQUIRE_FALSE(terms.empty());
    CHECK(terms[0].tuple == IndexTuple{1, 3, 1, 2});
    CHECK(terms[0].spec == HGSpec{R(3, 4), R(7, 8), R(9, 8), i((p - 7) / 8)});
  }
}

TEST_CASE("clambda criterion") {
  const FamilyParams z10(5, 2, PrimeField(17));
  for (std::int64_t v = 2; v < 17; ++v) CHECK_FALSE(clambda_is_superspecial(z10, z10.field(v)));
  CHECK_THROWS_AS(clambda_is_superspecial(z10, z10.field(0)), InvalidLambda);
  CHECK_THROWS_AS(clambda_is_superspecial(z10, z10.field(1)), InvalidLambda);
  CHECK_THROWS_AS(clambda_curve(z10, z10.field(1)), InvalidLambda);

  // (n, r) = (2, 2) is the genus-2 quotient, decided by h(lambda).
  for (std::uint64_t p : {17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL, 41ULL}) {
    const PrimeField f(p);
    const FamilyParams h(2, 2, f);
    const DensePoly hp = quotient_h_poly(f);
    for (std::int64_t v = 2; v < i(p); ++v) CHECK(clambda_is_superspecial(h, f(v)) == hp.eval(f(v)).is_zero());
  }
}

// ---- cross-checks against the binomial-expansion reference ---------------------

TEST_CASE("S equals the nonzero coefficients of (x^m - x)^e") {
  for (std::uint64_t p : primes_in_range(14, 200)) {
    for (auto [n, m] : {std::pair{5, 5}, {5, 4}, {4, 5}, {3, 4}, {6, 5}, {2, 7}}) {
      if (p % static_cast<std::uint64_t>(n) == 0) continue;
      const auto ref = oracle::nonzero_tuples(n, m, i(p), [&](std::int64_t e, std::int64_t N) {
        return oracle::xmx_coeff(m, e, N, i(p));
      });
      CHECK(plain(compute_S(n, m, p)) == sorted(ref));
    }
  }
}

TEST_CASE("T is the support of the coefficient criterion over all lambda") {
  for (std::uint64_t p : {17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 41ULL}) {
    for (auto [n, r] : {std::pair{5, 2}, {4, 2}, {2, 2}, {3, 1}}) {
      // A nonzero polynomial of degree < p in lambda is nonzero at some lambda in F_p.
      std::set<oracle::Tuple> support;
      for (std::int64_t lam = 0; lam < i(p); ++lam) {
        for (const auto& t : oracle::nonzero_tuples(n, 2 * r + 1, i(p), [&](std::int64_t e, std::int64_t N) {
               return oracle::clambda_coeff(r, lam, e, N, i(p));
             })) {
          support.insert(t);
        }
      }
      CHECK(plain(compute_T(FamilyParams(n, r, PrimeField(p)))) ==
            std::vector<oracle::Tuple>(support.begin(), support.end()));
    }
  }
}

TEST_CASE("oracle and criterion agree with the double-binomial reference") {
  for (std::uint64_t p : {17ULL, 19ULL, 23ULL, 29ULL}) {
    const PrimeField f(p);
    for (auto [n, r] : {std::pair{5, 2}, {4, 2}, {2, 2}}) {
      const FamilyParams params(n, r, f);
      const ClambdaCriterion criterion(params);
      for (std::int64_t v = 2; v < i(p); ++v) {
        const bool ref = oracle::clambda_superspecial(n, r, v, i(p));
        CHECK(oracle_is_superspecial(clambda_curve(params, f(v))) == ref);
        CHECK(criterion.is_superspecial(f(v)) == ref);
      }
    }
  }
}

// ---- properties ----------------------------------------------------------------

TEST_CASE("property: oracle witnesses match a reference on random curves") {
  static const std::uint64_t kPrimes[] = {17, 19, 23, 29, 31};
  int tested = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::uint64_t p = kPrimes[oracle::uniform(0, 4)];
    const PrimeField f(p);
    const int n = static_cast<int>(oracle::uniform(2, 6));
    oracle::Coeffs c(static_cast<std::size_t>(oracle::uniform(4, 7)));
    for (auto& v : c) v = oracle::uniform(0, i(p) - 1);
    c.back() = oracle::uniform(1, i(p) - 1);
    const DensePoly g(f, std::span<const std::int64_t>(c));
    if (!is_separable(g)) continue;
    const int m = static_cast<int>(g.degree());
    std::map<std::int64_t, oracle::Coeffs> powers;
    const auto ref = oracle::nonzero_tuples(n, m, i(p), [&](std::int64_t e, std::int64_t N) {
      auto it = powers.find(e);
      if (it == powers.end()) it = powers.emplace(e, oracle::power(c, static_cast<std::uint64_t>(e), i(p))).first;
      const oracle::Coeffs& pw = it->second;
      return N < static_cast<std::int64_t>(pw.size()) ? pw[static_cast<std::size_t>(N)] : 0;
    });
    CHECK(plain(oracle_report(SuperellipticCurve(n, g)).witnesses) == sorted(ref));
    ++tested;
  }
  CHECK(tested > 40);
}

TEST_CASE("property: index sets depend on p only through residues") {
  const auto primes = primes_in_range(14, 2000);
  auto same_class = [&](std::uint64_t modulus, auto&& key) {
    std::map<std::uint64_t, std::vector<oracle::Tuple>> seen;
    for (std::uint64_t p : primes) {
      const auto got = key(p);
      const auto [it, fresh] = seen.emplace(p % modulus, got);
      if (!fresh) CHECK(it->second == got);
    }
  };
  same_class(20, [](std::uint64_t p) { return plain(compute_S(5, 5, p)); });
  same_class(15, [](std::uint64_t p) { return plain(compute_S(5, 4, p)); });
  same_class(16, [](std::uint64_t p) { return plain(compute_S(4, 5, p)); });
  same_class(8, [](std::uint64_t p) { return plain(compute_T(FamilyParams(4, 2, PrimeField(p)))); });
  same_class(5, [](std::uint64_t p) { return plain(compute_T(FamilyParams(5, 2, PrimeField(p)))); });
}

TEST_CASE("property: x^5 - x with n = 5 is superspecial exactly for p = 19 mod 20") {
  for (std::uint64_t p : primes_in_range(14, 3000)) CHECK(xmx_is_superspecial(5, 5, p) == (p % 20 == 19));
}

TEST_CASE("property: S is empty whenever p = -1 mod (m-1)n, or p = m mod (m-1)n with n | m+1") {
  for (std::uint64_t p : primes_in_range(14, 3000)) {
    for (int n = 2; n <= 6; ++n) {
      for (int m = 3; m <= 7; ++m) {
        if (p % static_cast<std::uint64_t>(n) == 0) continue;
        const auto mod = static_cast<std::uint64_t>((m - 1) * n);
        const bool regime_i = p % mod == mod - 1;
        const bool regime_ii = (m + 1) % n == 0 && p % mod == static_cast<std::uint64_t>(m) % mod;
        if (regime_i || regime_ii) CHECK(compute_S(n, m, p).empty());
      }
    }
  }
}

TEST_CASE("criterion c-parameters never make a Pochhammer factor vanish") {
  for (std::uint64_t p : primes_in_range(14, 1500)) {
    const PrimeField f(p);
    for (auto [n, r] : {std::pair{5, 2}, {4, 2}, {2, 2}}) {
      for (const auto& term : criterion_polynomials(FamilyParams(n, r, f))) {
        CHECK_NOTHROW(truncated_hg(term.spec, f));
      }
    }
  }
}
