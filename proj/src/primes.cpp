#include "smoothgaps/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace smoothgaps {

std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<char> composite(n + 1, 0);
  for (std::uint64_t i = 2; i * i <= n; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
  }
  for (std::uint64_t i = 2; i <= n; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

std::vector<std::uint64_t> primes_in(double lo, double hi) {
  std::vector<std::uint64_t> out;
  if (!(lo < hi) || hi < 2.0) return out;
  auto all = primes_upto(static_cast<std::uint64_t>(std::floor(hi)));
  for (std::uint64_t p : all) {
    double pd = static_cast<double>(p);
    if (pd > lo && pd <= hi) out.push_back(p);
  }
  return out;
}

std::uint64_t integer_kth_root(std::uint64_t n, unsigned k) {
  if (k == 0) throw std::invalid_argument("integer_kth_root: k must be >= 1");
  if (k == 1 || n <= 1) return n;
  auto pow_leq = [&](std::uint64_t r) {
    // r^k <= n without overflow
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (acc > n / r) return false;
      acc *= r;
    }
    return acc <= n;
  };
  std::uint64_t r = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
  while (r > 1 && !pow_leq(r)) --r;
  while (pow_leq(r + 1)) ++r;
  return r;
}

int omega_with_mult(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("omega_with_mult: n must be positive");
  int count = 0;
  for (std::uint64_t d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
    while (n % d == 0) {
      n /= d;
      ++count;
    }
  }
  if (n > 1) ++count;
  return count;
}

}  // namespace smoothgaps
