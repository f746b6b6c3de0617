#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ssq {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed in something outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidModulus : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class NonInvertibleDenominator : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ModulusMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class BothZero : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ZeroPolynomial : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidSpec : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidCurve : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidLambda : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class WrongFamily : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class WrongResidue : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidPair : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A Pochhammer factor in a hypergeometric denominator vanished mod p. The
// parameters lie outside the regime where the truncated series is defined.
class PochhammerDivisionByZero : public Error {
 public:
  PochhammerDivisionByZero(std::uint32_t p, std::string spec, std::int64_t ell)
      : Error("Pochhammer denominator vanishes mod " + std::to_string(p) + " at l=" +
              std::to_string(ell) + " for " + spec),
        p_(p),
        spec_(std::move(spec)),
        ell_(ell) {}

  std::uint32_t prime() const noexcept { return p_; }
  const std::string& spec() const noexcept { return spec_; }
  std::int64_t ell() const noexcept { return ell_; }

 private:
  std::uint32_t p_;
  std::string spec_;
  std::int64_t ell_;
};

// A proven identity failed to hold at runtime. Always an implementation bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class AssertionFailure : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class CrossCheckMismatch : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

class ParityViolation : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace ssq
