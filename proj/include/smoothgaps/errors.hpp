#pragma once

#include <stdexcept>
#include <string>

namespace smoothgaps {

// Dense enumeration would exceed the configured memory budget.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// A prime window required by a polynomial builder contains no primes.
class EmptyPrimeWindowError : public std::runtime_error {
 public:
  EmptyPrimeWindowError(std::string window, double lo, double hi);
  std::string window_name;
  double lo = 0;
  double hi = 0;
};

// Quadrature step exceeds the resolution bound for the integrand.
class StepTooLargeError : public std::invalid_argument {
 public:
  explicit StepTooLargeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// bad_decompose was called on a pair that is not bad at the given N.
class NotBadPairError : public std::invalid_argument {
 public:
  explicit NotBadPairError(const std::string& msg) : std::invalid_argument(msg) {}
};

// The forced direction (u1,u2) of a bad pair has different prime factor
// counts, so no single h classifies both components.
class NonUniformHError : public std::runtime_error {
 public:
  NonUniformHError(std::string msg, int omega_u1, int omega_u2)
      : std::runtime_error(std::move(msg)), omega1(omega_u1), omega2(omega_u2) {}
  int omega1;
  int omega2;
};

// Experiment configuration failed validation.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace smoothgaps
