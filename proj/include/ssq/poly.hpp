#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ssq/field.hpp"

namespace ssq {

// Dense univariate polynomial over F_p, constant term first. The coefficient
// vector never carries trailing zeros; the zero polynomial is the empty vector
// and reports degree kZeroDegree.
class DensePoly {
 public:
  static constexpr std::int64_t kZeroDegree = -1;

  explicit DensePoly(const PrimeField& field) : field_(field) {}
  DensePoly(const PrimeField& field, std::span<const std::int64_t> coeffs);
  DensePoly(const PrimeField& field, std::initializer_list<std::int64_t> coeffs)
      : DensePoly(field, std::span<const std::int64_t>(coeffs.begin(), coeffs.size())) {}
  DensePoly(const PrimeField& field, std::vector<std::uint32_t> residues);

  static DensePoly constant(FieldElem c);
  static DensePoly monomial(FieldElem c, std::size_t degree);

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t modulus() const noexcept { return field_.modulus(); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  // Coefficient of x^k; zero beyond the degree.
  FieldElem coefficient(std::uint64_t k) const;
  FieldElem leading() const;
  std::span<const std::uint32_t> residues() const noexcept { return coeffs_; }

  // Horner evaluation; throws ModulusMismatch if x lives in another field.
  FieldElem eval(FieldElem x) const;

  DensePoly derivative() const;
  DensePoly monic() const;
  DensePoly scaled(FieldElem c) const;

  friend DensePoly operator+(const DensePoly& a, const DensePoly& b);
  friend DensePoly operator-(const DensePoly& a, const DensePoly& b);
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
  DensePoly operator-() const;

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

  std::string str(char var = 'x') const;

 private:
  void normalize();
  void check_same(const DensePoly& o) const;

  PrimeField field_;
  std::vector<std::uint32_t> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const DensePoly& f);

// Quotient and remainder of f by a nonzero g.
std::pair<DensePoly, DensePoly> divmod(const DensePoly& f, const DensePoly& g);

// f^e by square-and-multiply.
DensePoly expand_power(const DensePoly& f, std::uint64_t e);

// Monic gcd; throws BothZero when f = g = 0.
DensePoly gcd(const DensePoly& f, const DensePoly& g);

// True iff gcd(f, f') is constant. Throws ZeroPolynomial on f = 0.
bool is_separable(const DensePoly& f);

}  // namespace ssq
