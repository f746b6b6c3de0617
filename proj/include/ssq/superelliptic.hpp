#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

#include "ssq/field.hpp"
#include "ssq/hypergeom.hpp"
#include "ssq/poly.hpp"

namespace ssq {

// y^n = f(x) over F_p with f square-free of degree m >= 3 and p not dividing n.
class SuperellipticCurve {
 public:
  // Throws InvalidCurve when any invariant fails.
  SuperellipticCurve(int n, DensePoly f);

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(f_.degree()); }
  const DensePoly& f() const noexcept { return f_; }
  const PrimeField& field() const noexcept { return f_.field(); }

 private:
  int n_;
  DensePoly f_;
};

struct IndexTuple {
  int i = 0;
  int j = 0;
  int h = 0;
  int k = 0;

  friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;
};

std::ostream& operator<<(std::ostream& os, const IndexTuple& t);

// The family C_lambda : y^n = x (x^r - 1)(x^r - lambda).
struct FamilyParams {
  int n;
  int r;
  PrimeField field;

  FamilyParams(int n, int r, const PrimeField& field);
};

struct OracleReport {
  bool superspecial = true;
  // Tuples whose coefficient is nonzero, ascending.
  std::vector<IndexTuple> witnesses;
};

// Coefficient criterion: every x^{hp-k} coefficient of f^{(ip-j)/n} vanishes
// over 1 <= i,j < n, 1 <= h < mi/n, 1 <= k < mj/n, n | ip - j.
OracleReport oracle_report(const SuperellipticCurve& curve);
bool oracle_is_superspecial(const SuperellipticCurve& curve);

// Index set whose emptiness decides superspeciality of y^n = x^m - x.
std::vector<IndexTuple> compute_S(int n, int m, std::uint64_t p);
bool xmx_is_superspecial(int n, int m, std::uint64_t p);

// Index set of tuples that can carry a nonzero coefficient for C_lambda.
std::vector<IndexTuple> compute_T(const FamilyParams& params);

enum class CriterionBranch { kLower, kUpper };

struct CriterionTerm {
  IndexTuple tuple;
  HGSpec spec;
  CriterionBranch branch;
};

// One truncated hypergeometric condition per tuple of compute_T. The branch
// is kLower when b <= a for a = (ip-j)/n, b = (hp-k-a)/r, else kUpper.
std::vector<CriterionTerm> criterion_polynomials(const FamilyParams& params);

// x (x^r - 1)(x^r - lambda) as a curve; lambda must avoid 0 and 1.
SuperellipticCurve clambda_curve(const FamilyParams& params, FieldElem lambda);

// Criterion polynomials built once, then evaluated at many lambda.
class ClambdaCriterion {
 public:
  explicit ClambdaCriterion(const FamilyParams& params);

  const FamilyParams& params() const noexcept { return params_; }
  const std::vector<CriterionTerm>& terms() const noexcept { return terms_; }
  const std::vector<DensePoly>& polynomials() const noexcept { return polys_; }

  // Throws InvalidLambda for lambda in {0, 1}.
  bool is_superspecial(FieldElem lambda) const;

 private:
  FamilyParams params_;
  std::vector<CriterionTerm> terms_;
  std::vector<DensePoly> polys_;
};

bool clambda_is_superspecial(const FamilyParams& params, FieldElem lambda);

}  // namespace ssq
