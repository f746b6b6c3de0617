#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "ssq/errors.hpp"

namespace ssq {

namespace detail {

inline std::uint32_t add_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

inline std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return a >= b ? a - b : a + (p - b);
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) noexcept {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}

inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

// Inverse of a nonzero residue by the extended Euclidean algorithm.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) noexcept;

}  // namespace detail

class FieldElem;

// The prime field F_p. Only primes 13 < p < 2^31 are accepted: the curves
// handled here need p > 13, and residues must fit 32 bits so products fit 64.
class PrimeField {
 public:
  static constexpr std::uint64_t kMinExclusive = 13;
  static constexpr std::uint64_t kMaxExclusive = std::uint64_t{1} << 31;

  explicit PrimeField(std::uint64_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  FieldElem operator()(std::int64_t v) const;
  FieldElem zero() const;
  FieldElem one() const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  friend class FieldElem;
  struct Unchecked {};
  PrimeField(std::uint32_t p, Unchecked) noexcept : p_(p) {}

  std::uint32_t p_;
};

// Residue in [0, p) tagged with its modulus. Mixing moduli throws ModulusMismatch.
class FieldElem {
 public:
  FieldElem(const PrimeField& field, std::int64_t v)
      : value_(detail::reduce(v, field.modulus())), p_(field.modulus()) {}

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return p_; }
  PrimeField field() const noexcept { return PrimeField(p_, PrimeField::Unchecked{}); }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElem operator-() const { return raw(value_ == 0 ? 0 : p_ - value_, p_); }
  FieldElem inverse() const;
  FieldElem pow(std::uint64_t e) const { return raw(detail::pow_mod(value_, e, p_), p_); }

  friend FieldElem operator+(FieldElem a, FieldElem b) {
    check_same(a, b);
    return raw(detail::add_mod(a.value_, b.value_, a.p_), a.p_);
  }
  friend FieldElem operator-(FieldElem a, FieldElem b) {
    check_same(a, b);
    return raw(detail::sub_mod(a.value_, b.value_, a.p_), a.p_);
  }
  friend FieldElem operator*(FieldElem a, FieldElem b) {
    check_same(a, b);
    return raw(detail::mul_mod(a.value_, b.value_, a.p_), a.p_);
  }
  friend FieldElem operator/(FieldElem a, FieldElem b) { return a * b.inverse(); }

  FieldElem& operator+=(FieldElem o) { return *this = *this + o; }
  FieldElem& operator-=(FieldElem o) { return *this = *this - o; }
  FieldElem& operator*=(FieldElem o) { return *this = *this * o; }
  FieldElem& operator/=(FieldElem o) { return *this = *this / o; }

  friend bool operator==(const FieldElem&, const FieldElem&) = default;

  // For residues already known to lie in [0, p).
  static FieldElem raw(std::uint32_t value, std::uint32_t p) noexcept { return FieldElem(value, p); }

 private:
  FieldElem(std::uint32_t value, std::uint32_t p) noexcept : value_(value), p_(p) {}

  static void check_same(const FieldElem& a, const FieldElem& b) {
    if (a.p_ != b.p_) {
      throw ModulusMismatch("field elements mod " + std::to_string(a.p_) + " and " +
                            std::to_string(b.p_));
    }
  }

  std::uint32_t value_;
  std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

// Exact rational number in lowest terms with a positive denominator.
class RationalParam {
 public:
  RationalParam(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  friend RationalParam operator+(const RationalParam& a, const RationalParam& b);
  friend RationalParam operator-(const RationalParam& a, const RationalParam& b);
  friend RationalParam operator*(const RationalParam& a, const RationalParam& b);
  friend RationalParam operator-(const RationalParam& a) { return RationalParam(-a.num_, a.den_); }

  friend bool operator==(const RationalParam&, const RationalParam&) = default;
  friend std::strong_ordering operator<=>(const RationalParam& a, const RationalParam& b);

  std::string str() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const RationalParam& q);

// num * den^{-1} mod p. Throws NonInvertibleDenominator when p | den.
FieldElem reduce_rational(const RationalParam& q, const PrimeField& field);

// (x; l) = x (x+1) ... (x+l-1), with (x; 0) = 1.
FieldElem rising_factorial(FieldElem x, std::uint64_t ell);

// C(a, b) mod p for 0 <= a < p; zero outside 0 <= b <= a.
FieldElem binomial_mod_p(std::int64_t a, std::int64_t b, const PrimeField& field);

// Square root in F_p (Tonelli-Shanks), or nullopt for a non-residue.
std::optional<FieldElem> sqrt_mod(FieldElem x);

}  // namespace ssq
