#include "ssq/field.hpp"

#include <algorithm>
#include <numeric>

#include "ssq/primes.hpp"

namespace ssq {

namespace detail {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t old_r = a, r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw NonInvertibleDenominator(std::to_string(a) + " has no inverse mod " + std::to_string(p));
  }
  return reduce(old_s, p);
}

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept {
  std::uint32_t result = 1 % p;
  while (e != 0) {
    if (e & 1U) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return result;
}

}  // namespace detail

PrimeField::PrimeField(std::uint64_t p) : p_(0) {
  if (p <= kMinExclusive || p >= kMaxExclusive || !is_prime(p)) {
    throw InvalidModulus("modulus must be a prime with 13 < p < 2^31, got " + std::to_string(p));
  }
  p_ = static_cast<std::uint32_t>(p);
}

FieldElem PrimeField::operator()(std::int64_t v) const { return FieldElem(*this, v); }
FieldElem PrimeField::zero() const { return FieldElem::raw(0, p_); }
FieldElem PrimeField::one() const { return FieldElem::raw(1, p_); }

FieldElem FieldElem::inverse() const { return raw(detail::inv_mod(value_, p_), p_); }

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.value(); }

RationalParam::RationalParam(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

RationalParam operator+(const RationalParam& a, const RationalParam& b) {
  return RationalParam(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalParam operator-(const RationalParam& a, const RationalParam& b) { return a + (-b); }

RationalParam operator*(const RationalParam& a, const RationalParam& b) {
  return RationalParam(a.num_ * b.num_, a.den_ * b.den_);
}

std::strong_ordering operator<=>(const RationalParam& a, const RationalParam& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string RationalParam::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const RationalParam& q) { return os << q.str(); }

FieldElem reduce_rational(const RationalParam& q, const PrimeField& field) {
  const std::uint32_t p = field.modulus();
  std::uint32_t den = detail::reduce(q.den(), p);
  if (den == 0) {
    throw NonInvertibleDenominator("denominator of " + q.str() + " vanishes mod " + std::to_string(p));
  }
  return field(q.num()) / FieldElem::raw(den, p);
}

FieldElem rising_factorial(FieldElem x, std::uint64_t ell) {
  FieldElem acc = x.field().one();
  const FieldElem one = acc;
  for (std::uint64_t i = 0; i < ell && !acc.is_zero(); ++i) {
    acc *= x;
    x += one;
  }
  return acc;
}

FieldElem binomial_mod_p(std::int64_t a, std::int64_t b, const PrimeField& field) {
  if (a < 0 || a >= static_cast<std::int64_t>(field.modulus())) {
    throw InvalidArgument("binomial_mod_p needs 0 <= a < p, got a=" + std::to_string(a));
  }
  if (b < 0 || b > a) return field.zero();
  b = std::min(b, a - b);
  FieldElem num = field.one();
  FieldElem den = field.one();
  for (std::int64_t i = 0; i < b; ++i) {
    num *= field(a - i);
    den *= field(i + 1);
  }
  return num / den;
}

std::optional<FieldElem> sqrt_mod(FieldElem x) {
  const std::uint32_t p = x.modulus();
  if (x.is_zero()) return x;
  if (x.pow((p - 1) / 2).value() != 1) return std::nullopt;

  // p - 1 = q * 2^s with q odd.
  std::uint32_t q = p - 1;
  int s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  const PrimeField field = x.field();
  FieldElem z = field(2);
  while (z.pow((p - 1) / 2).value() == 1) z += field.one();

  FieldElem c = z.pow(q);
  FieldElem r = x.pow((q + 1) / 2);
  FieldElem t = x.pow(q);
  int m = s;
  while (t.value() != 1) {
    int i = 0;
    FieldElem t2 = t;
    while (t2.value() != 1) {
      t2 *= t2;
      ++i;
    }
    FieldElem b = c;
    for (int j = 0; j < m - i - 1; ++j) b *= b;
    r *= b;
    c = b * b;
    t *= c;
    m = i;
  }
  return r;
}

}  // namespace ssq
