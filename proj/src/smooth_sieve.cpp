#include "smoothgaps/smooth_sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "smoothgaps/errors.hpp"
#include "smoothgaps/primes.hpp"

namespace smoothgaps {

namespace {

constexpr std::uint64_t kMaxLimit = 1ull << 63;

void check_args(std::uint64_t limit, std::uint64_t y) {
  if (limit < 2 || y < 2)
    throw std::invalid_argument("enumerate_smooth: need limit >= 2 and y >= 2");
  if (limit > kMaxLimit)
    throw std::invalid_argument("enumerate_smooth: limit above 2^63 rejected");
}

// Smallest y-smooth integer > limit, found by bounded product generation.
// The next power of two is always an upper bound since 2 <= y.
std::uint64_t smooth_successor(std::uint64_t limit, std::uint64_t y,
                               const std::vector<std::uint64_t>& primes) {
  std::uint64_t best = 1;
  while (best <= limit) best *= 2;
  auto dfs = [&](auto&& self, std::uint64_t prod, std::size_t idx) -> void {
    for (std::size_t j = idx; j < primes.size(); ++j) {
      if (prod > best / primes[j]) break;  // overflow-safe prod*p > best
      std::uint64_t v = prod * primes[j];
      if (v > best) break;
      if (v > limit) {
        if (v < best) best = v;
        // deeper products on this branch only grow
      } else {
        self(self, v, j);
      }
    }
  };
  dfs(dfs, 1, 0);
  return best;
}

std::vector<std::uint64_t> enumerate_dense(std::uint64_t limit, std::uint64_t y) {
  // rem[n] holds n with all prime factors <= y divided out; n is smooth
  // iff rem[n] ends at 1. Primes are detected on the fly: when the loop
  // reaches p with rem[p] == p, no smaller prime divides p.
  std::vector<std::uint64_t> rem(limit + 1);
  for (std::uint64_t n = 0; n <= limit; ++n) rem[n] = n;
  std::uint64_t pmax = std::min(y, limit);
  for (std::uint64_t p = 2; p <= pmax; ++p) {
    if (rem[p] != p) continue;
    for (std::uint64_t m = p; m <= limit; m += p) {
      while (rem[m] % p == 0) rem[m] /= p;
    }
  }
  std::vector<std::uint64_t> values;
  for (std::uint64_t n = 1; n <= limit; ++n)
    if (rem[n] == 1) values.push_back(n);
  return values;
}

std::vector<std::uint64_t> enumerate_sparse(std::uint64_t limit, std::uint64_t y,
                                            const std::vector<std::uint64_t>& primes) {
  std::vector<std::uint64_t> values;
  auto dfs = [&](auto&& self, std::uint64_t prod, std::size_t idx) -> void {
    values.push_back(prod);
    for (std::size_t j = idx; j < primes.size(); ++j) {
      if (prod > limit / primes[j]) break;
      self(self, prod * primes[j], j);
    }
  };
  dfs(dfs, 1, 0);
  std::sort(values.begin(), values.end());
  (void)y;
  return values;
}

}  // namespace

SmoothSequence::SmoothSequence(std::uint64_t y, std::uint64_t limit,
                               std::vector<std::uint64_t> values)
    : y_(y), limit_(limit), values_(std::move(values)) {
  if (values_.size() < 2 || values_.front() != 1)
    throw std::invalid_argument("SmoothSequence: values must start at 1 and include the successor");
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i] <= values_[i - 1])
      throw std::invalid_argument("SmoothSequence: values must be strictly increasing");
  if (values_.back() <= limit_ || values_[values_.size() - 2] > limit_)
    throw std::invalid_argument("SmoothSequence: exactly the last value must exceed limit");
}

bool is_smooth(std::uint64_t n, std::uint64_t y) {
  if (n == 0) throw std::invalid_argument("is_smooth: n must be positive");
  for (std::uint64_t d = 2; d <= y && d * d <= n; d == 2 ? d = 3 : d += 2) {
    while (n % d == 0) n /= d;
  }
  // remaining cofactor is 1, or a prime (if below its own square), or has
  // all prime factors > y
  return n == 1 || n <= y;
}

SmoothSequence enumerate_smooth(std::uint64_t limit, std::uint64_t y,
                                SieveAlgorithm algorithm, std::uint64_t mem_budget) {
  check_args(limit, y);
  bool dense_fits = limit <= mem_budget / 8;
  if (algorithm == SieveAlgorithm::Dense && !dense_fits)
    throw ResourceLimitError("enumerate_smooth: dense sieve needs " +
                             std::to_string((limit + 1) * 8) + " bytes, budget is " +
                             std::to_string(mem_budget));
  bool use_dense = algorithm == SieveAlgorithm::Dense ||
                   (algorithm == SieveAlgorithm::Auto && dense_fits);

  auto primes = primes_upto(y);
  std::vector<std::uint64_t> values =
      use_dense ? enumerate_dense(limit, y) : enumerate_sparse(limit, y, primes);
  values.push_back(smooth_successor(limit, y, primes));
  return SmoothSequence(y, limit, std::move(values));
}

std::uint64_t psi(std::uint64_t limit, std::uint64_t y, SieveAlgorithm algorithm,
                  std::uint64_t mem_budget) {
  return enumerate_smooth(limit, y, algorithm, mem_budget).count();
}

std::vector<GapRecord> gap_records(const SmoothSequence& seq) {
  const auto& v = seq.values();
  std::vector<GapRecord> out;
  out.reserve(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    out.push_back({v[i], v[i + 1], v[i + 1] - v[i]});
  return out;
}

double gap_moment(const SmoothSequence& seq, double exponent, std::uint64_t min_gap) {
  if (exponent < 0) throw std::invalid_argument("gap_moment: exponent must be >= 0");
  if (min_gap < 1) throw std::invalid_argument("gap_moment: min_gap must be >= 1");
  const auto& v = seq.values();
  double sum = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    std::uint64_t g = v[i + 1] - v[i];
    if (g >= min_gap) sum += std::pow(static_cast<double>(g), exponent);
  }
  return sum;
}

std::uint64_t max_gap(const SmoothSequence& seq) {
  const auto& v = seq.values();
  std::uint64_t best = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) best = std::max(best, v[i + 1] - v[i]);
  return best;
}

}  // namespace smoothgaps
