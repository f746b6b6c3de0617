#include "ssq/superelliptic.hpp"

#include <string>

namespace ssq {

SuperellipticCurve::SuperellipticCurve(int n, DensePoly f) : n_(n), f_(std::move(f)) {
  const std::uint32_t p = f_.modulus();
  if (n_ < 2) throw InvalidCurve("superelliptic exponent n must be >= 2");
  if (static_cast<std::uint32_t>(n_) % p == 0) throw InvalidCurve("p divides n");
  if (f_.degree() < 3) throw InvalidCurve("f must have degree >= 3, got " + f_.str());
  if (!is_separable(f_)) {
    throw InvalidCurve("f is not square-free: gcd(f, f') = " + gcd(f_, f_.derivative()).str());
  }
}

std::ostream& operator<<(std::ostream& os, const IndexTuple& t) {
  return os << '(' << t.i << ',' << t.j << ',' << t.h << ',' << t.k << ')';
}

FamilyParams::FamilyParams(int n_, int r_, const PrimeField& field_) : n(n_), r(r_), field(field_) {
  if (n < 2) throw InvalidArgument("family exponent n must be >= 2");
  if (r < 1) throw InvalidArgument("family degree r must be >= 1");
  if (static_cast<std::uint32_t>(n) % field.modulus() == 0) throw InvalidArgument("p divides n");
}

OracleReport oracle_report(const SuperellipticCurve& curve) {
  const std::int64_t n = curve.n();
  const std::int64_t m = curve.m();
  const std::int64_t p = curve.field().modulus();
  OracleReport report;
  for (std::int64_t i = 1; i < n; ++i) {
    for (std::int64_t j = 1; j < n; ++j) {
      if ((i * p - j) % n != 0) continue;
      const std::int64_t e = (i * p - j) / n;
      const DensePoly power = expand_power(curve.f(), static_cast<std::uint64_t>(e));
      // Strict bounds h < mi/n and k < mj/n, compared as h*n < m*i.
      for (std::int64_t h = 1; h * n < m * i; ++h) {
        for (std::int64_t k = 1; k * n < m * j; ++k) {
          if (!power.coefficient(static_cast<std::uint64_t>(h * p - k)).is_zero()) {
            report.witnesses.push_back({static_cast<int>(i), static_cast<int>(j),
                                        static_cast<int>(h), static_cast<int>(k)});
          }
        }
      }
    }
  }
  report.superspecial = report.witnesses.empty();
  return report;
}

bool oracle_is_superspecial(const SuperellipticCurve& curve) { return oracle_report(curve).superspecial; }

namespace {

// Tuples with 1 <= i,j < n, n | ip-j, 1 <= h < deg*i/n, 1 <= k < deg*j/n,
// step | (hp-k-a) and 0 <= hp-k-a <= span*a, where a = (ip-j)/n.
std::vector<IndexTuple> index_set(std::int64_t n, std::int64_t deg, std::int64_t step,
                                  std::int64_t span, std::int64_t p) {
  std::vector<IndexTuple> out;
  for (std::int64_t i = 1; i < n; ++i) {
    for (std::int64_t j = 1; j < n; ++j) {
      if ((i * p - j) % n != 0) continue;
      const std::int64_t a = (i * p - j) / n;
      for (std::int64_t h = 1; h * n < deg * i; ++h) {
        for (std::int64_t k = 1; k * n < deg * j; ++k) {
          const std::int64_t diff = h * p - k - a;
          if (diff < 0 || diff > span * a || diff % step != 0) continue;
          out.push_back({static_cast<int>(i), static_cast<int>(j), static_cast<int>(h),
                         static_cast<int>(k)});
        }
      }
    }
  }
  return out;
}

void check_index_params(int n, std::uint64_t p) {
  if (n < 2) throw InvalidArgument("n must be >= 2");
  if (p < 2 || p % static_cast<std::uint64_t>(n) == 0) {
    throw InvalidArgument("p must be a prime not dividing n");
  }
  if (p >= PrimeField::kMaxExclusive) throw InvalidArgument("p must be < 2^31");
}

}  // namespace

std::vector<IndexTuple> compute_S(int n, int m, std::uint64_t p) {
  check_index_params(n, p);
  if (m < 3) throw InvalidArgument("m must be >= 3");
  return index_set(n, m, m - 1, m - 1, static_cast<std::int64_t>(p));
}

bool xmx_is_superspecial(int n, int m, std::uint64_t p) { return compute_S(n, m, p).empty(); }

std::vector<IndexTuple> compute_T(const FamilyParams& params) {
  return index_set(params.n, 2 * params.r + 1, params.r, 2 * params.r, params.field.modulus());
}

std::vector<CriterionTerm> criterion_polynomials(const FamilyParams& params) {
  const std::int64_t n = params.n;
  const std::int64_t r = params.r;
  const std::int64_t p = params.field.modulus();
  std::vector<CriterionTerm> out;
  for (const IndexTuple& t : compute_T(params)) {
    const std::int64_t a = (t.i * p - t.j) / n;
    const std::int64_t b = (t.h * p - t.k - a) / r;
    const RationalParam jn(t.j, n);
    const RationalParam kr(t.k, r);
    const RationalParam jnr(t.j, n * r);
    CriterionTerm term{t, {}, CriterionBranch::kLower};
    if (b <= a) {
      term.spec = HGSpec{jn, kr - jnr, RationalParam(1) - jn + kr - jnr, b};
    } else {
      term.branch = CriterionBranch::kUpper;
      term.spec = HGSpec{jn, -kr + RationalParam(2) * jn + jnr, RationalParam(1) + jn - kr + jnr,
                         2 * a - b};
    }
    out.push_back(term);
  }
  return out;
}

SuperellipticCurve clambda_curve(const FamilyParams& params, FieldElem lambda) {
  if (lambda.is_zero() || lambda.value() == 1) {
    throw InvalidLambda("lambda must avoid 0 and 1, got " + std::to_string(lambda.value()));
  }
  const PrimeField& field = params.field;
  const auto r = static_cast<std::size_t>(params.r);
  const DensePoly x = DensePoly::monomial(field.one(), 1);
  const DensePoly xr = DensePoly::monomial(field.one(), r);
  const DensePoly f = x * (xr - DensePoly::constant(field.one())) * (xr - DensePoly::constant(lambda));
  return SuperellipticCurve(params.n, f);
}

ClambdaCriterion::ClambdaCriterion(const FamilyParams& params)
    : params_(params), terms_(criterion_polynomials(params)) {
  polys_.reserve(terms_.size());
  for (const auto& term : terms_) polys_.push_back(truncated_hg(term.spec, params_.field));
}

bool ClambdaCriterion::is_superspecial(FieldElem lambda) const {
  if (lambda.is_zero() || lambda.value() == 1) {
    throw InvalidLambda("lambda must avoid 0 and 1, got " + std::to_string(lambda.value()));
  }
  for (const DensePoly& g : polys_) {
    if (!g.eval(lambda).is_zero()) return false;
  }
  return true;
}

bool clambda_is_superspecial(const FamilyParams& params, FieldElem lambda) {
  return ClambdaCriterion(params).is_superspecial(lambda);
}

}  // namespace ssq
