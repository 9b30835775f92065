#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lrecon {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class ConductorMismatch : public Error {
public:
  ConductorMismatch(unsigned a, unsigned b)
      : Error("conductor mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class LimitMismatch : public Error {
public:
  LimitMismatch(std::size_t a, std::size_t b)
      : Error("series limit mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class NonUnitLeadingCoefficient : public Error {
public:
  NonUnitLeadingCoefficient() : Error("divisor series has non-unit leading coefficient") {}
};

class NotAPrimePower : public Error {
public:
  using Error::Error;
};

class InvalidPolynomial : public Error {
public:
  using Error::Error;
};

class NotIrreducible : public Error {
public:
  using Error::Error;
};

class IndexDivisorUnresolved : public Error {
public:
  explicit IndexDivisorUnresolved(std::uint64_t p)
      : Error("prime " + std::to_string(p) + " divides the index and could not be resolved"),
        prime(p) {}
  std::uint64_t prime;
};

class GroupMismatch : public Error {
public:
  using Error::Error;
};

class InvalidDatum : public Error {
public:
  using Error::Error;
};

class NotAnIsomorphism : public Error {
public:
  using Error::Error;
};

class BadRootOfUnity : public Error {
public:
  using Error::Error;
};

class InsufficientCharacters : public Error {
public:
  InsufficientCharacters(std::int64_t n, std::string label)
      : Error("no Xi^2 witness at norm " + std::to_string(n) + " for prime " + label),
        norm(n), prime(std::move(label)) {}
  std::int64_t norm;
  std::string prime;
};

class NotLCompatible : public Error {
public:
  NotLCompatible(std::int64_t n, const std::string& why)
      : Error("pair is not L-compatible at norm " + std::to_string(n) + ": " + why), norm(n) {}
  std::int64_t norm;
};

class CardinalityMismatch : public Error {
public:
  CardinalityMismatch(std::int64_t n, std::size_t a, std::size_t b)
      : Error("prime counts differ at norm " + std::to_string(n) + ": " + std::to_string(a) +
              " vs " + std::to_string(b)),
        norm(n) {}
  std::int64_t norm;
};

class EnvelopeExceeded : public Error {
public:
  using Error::Error;
};

class NotAHomomorphism : public Error {
public:
  using Error::Error;
};

class CoordinateNotFixed : public Error {
public:
  CoordinateNotFixed() : Error("subgroup moves the first coordinate") {}
};

class VerificationFailed : public Error {
public:
  VerificationFailed(std::size_t n, const std::string& what)
      : Error(what + " (first mismatch at n=" + std::to_string(n) + ")"), index(n) {}
  std::size_t index;
};

}  // namespace lrecon
