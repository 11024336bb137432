#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace smoothgaps {

// The multiplicative band |log(p/q)| <= 2pi/T, evaluated as
// p <= q*hi && q <= p*hi with hi = exp(2pi/T). Every counting route in the
// project (pair sums, lattice enumeration, brute force) goes through this
// one predicate so that boundary rounding can never make two routes
// disagree on a concrete integer pair.
struct RatioBand {
  double hi;

  explicit RatioBand(double T) {
    if (!(T >= 20.0)) throw std::invalid_argument("RatioBand: T >= 20 required");
    hi = std::exp(2.0 * std::numbers::pi / T);
  }

  bool contains(std::uint64_t p, std::uint64_t q) const {
    double a = static_cast<double>(p);
    double b = static_cast<double>(q);
    return a <= b * hi && b <= a * hi;
  }
};

}  // namespace smoothgaps
