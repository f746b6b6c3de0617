#include "ssq/poly.hpp"

#include <algorithm>
#include <sstream>

namespace ssq {

using detail::add_mod;
using detail::mul_mod;
using detail::sub_mod;

DensePoly::DensePoly(const PrimeField& field, std::span<const std::int64_t> coeffs) : field_(field) {
  coeffs_.reserve(coeffs.size());
  for (std::int64_t c : coeffs) coeffs_.push_back(detail::reduce(c, field_.modulus()));
  normalize();
}

DensePoly::DensePoly(const PrimeField& field, std::vector<std::uint32_t> residues)
    : field_(field), coeffs_(std::move(residues)) {
  for (auto& c : coeffs_) c %= field_.modulus();
  normalize();
}

DensePoly DensePoly::constant(FieldElem c) {
  return DensePoly(c.field(), std::vector<std::uint32_t>{c.value()});
}

DensePoly DensePoly::monomial(FieldElem c, std::size_t degree) {
  std::vector<std::uint32_t> v(degree + 1, 0);
  v[degree] = c.value();
  return DensePoly(c.field(), std::move(v));
}

void DensePoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void DensePoly::check_same(const DensePoly& o) const {
  if (field_ != o.field_) {
    throw ModulusMismatch("polynomials mod " + std::to_string(modulus()) + " and " +
                          std::to_string(o.modulus()));
  }
}

FieldElem DensePoly::coefficient(std::uint64_t k) const {
  if (k >= coeffs_.size()) return field_.zero();
  return FieldElem::raw(coeffs_[k], modulus());
}

FieldElem DensePoly::leading() const {
  return coeffs_.empty() ? field_.zero() : FieldElem::raw(coeffs_.back(), modulus());
}

FieldElem DensePoly::eval(FieldElem x) const {
  if (x.modulus() != modulus()) {
    throw ModulusMismatch("evaluating a polynomial mod " + std::to_string(modulus()) +
                          " at an element mod " + std::to_string(x.modulus()));
  }
  const std::uint32_t p = modulus();
  std::uint32_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = add_mod(mul_mod(acc, x.value(), p), *it, p);
  }
  return FieldElem::raw(acc, p);
}

DensePoly DensePoly::derivative() const {
  const std::uint32_t p = modulus();
  std::vector<std::uint32_t> d;
  if (coeffs_.size() > 1) d.resize(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = mul_mod(static_cast<std::uint32_t>(k % p), coeffs_[k], p);
  }
  return DensePoly(field_, std::move(d));
}

DensePoly DensePoly::scaled(FieldElem c) const {
  if (c.modulus() != modulus()) throw ModulusMismatch("scaling by an element of another field");
  std::vector<std::uint32_t> v(coeffs_);
  for (auto& x : v) x = mul_mod(x, c.value(), modulus());
  return DensePoly(field_, std::move(v));
}

DensePoly DensePoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
  a.check_same(b);
  const std::uint32_t p = a.modulus();
  std::vector<std::uint32_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = add_mod(v[i], b.coeffs_[i], p);
  return DensePoly(a.field_, std::move(v));
}

DensePoly DensePoly::operator-() const {
  std::vector<std::uint32_t> v(coeffs_);
  for (auto& x : v) x = x == 0 ? 0 : modulus() - x;
  return DensePoly(field_, std::move(v));
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  a.check_same(b);
  if (a.is_zero() || b.is_zero()) return DensePoly(a.field_);
  const std::uint64_t p = a.modulus();
  const std::size_t n = a.coeffs_.size();
  const std::size_t m = b.coeffs_.size();
  // acc < p and each product < 2^62, so the running sum never overflows.
  std::vector<std::uint64_t> acc(n + m - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t ai = a.coeffs_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      acc[i + j] = (acc[i + j] + ai * b.coeffs_[j]) % p;
    }
  }
  std::vector<std::uint32_t> v(acc.begin(), acc.end());
  return DensePoly(a.field_, std::move(v));
}

std::string DensePoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || coeffs_[k] != 1) os << coeffs_[k];
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DensePoly& f) { return os << f.str(); }

std::pair<DensePoly, DensePoly> divmod(const DensePoly& f, const DensePoly& g) {
  if (f.field() != g.field()) throw ModulusMismatch("divmod across fields");
  if (g.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  const std::uint32_t p = f.modulus();
  if (f.degree() < g.degree()) return {DensePoly(f.field()), f};

  std::vector<std::uint32_t> rem(f.residues().begin(), f.residues().end());
  auto gc = g.residues();
  const std::size_t dg = gc.size() - 1;
  const std::uint32_t lead_inv = detail::inv_mod(gc.back(), p);
  std::vector<std::uint32_t> quot(rem.size() - dg, 0);
  for (std::size_t k = rem.size(); k-- > dg;) {
    const std::uint32_t c = mul_mod(rem[k], lead_inv, p);
    quot[k - dg] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) {
      rem[k - dg + j] = sub_mod(rem[k - dg + j], mul_mod(c, gc[j], p), p);
    }
  }
  rem.resize(dg);
  return {DensePoly(f.field(), std::move(quot)), DensePoly(f.field(), std::move(rem))};
}

DensePoly expand_power(const DensePoly& f, std::uint64_t e) {
  DensePoly result = DensePoly::constant(f.field().one());
  DensePoly base = f;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

DensePoly gcd(const DensePoly& f, const DensePoly& g) {
  if (f.field() != g.field()) throw ModulusMismatch("gcd across fields");
  if (f.is_zero() && g.is_zero()) throw BothZero("gcd(0, 0) is undefined");
  DensePoly a = f;
  DensePoly b = g;
  while (!b.is_zero()) {
    DensePoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_separable(const DensePoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("separability of the zero polynomial");
  return gcd(f, f.derivative()).is_constant();
}

}  // namespace ssq
