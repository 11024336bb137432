#pragma once

#include <cstdint>
#include <vector>

namespace smoothgaps {

inline constexpr std::uint64_t kDefaultMemBudget = 200'000'000;  // bytes

// Consecutive pair a_n, a_{n+1} of a smooth sequence.
struct GapRecord {
  std::uint64_t left;
  std::uint64_t right;
  std::uint64_t gap;  // right - left
};

// The complete increasing sequence of y-smooth integers up to `limit`,
// plus the first y-smooth integer beyond it (the last element) so that
// the gap at the boundary is defined. Immutable after construction and
// safe to share across threads.
class SmoothSequence {
 public:
  SmoothSequence(std::uint64_t y, std::uint64_t limit, std::vector<std::uint64_t> values);

  std::uint64_t y() const { return y_; }
  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint64_t>& values() const { return values_; }
  // First y-smooth integer > limit.
  std::uint64_t successor() const { return values_.back(); }
  // Count of y-smooth n <= limit (excludes the successor element).
  std::uint64_t count() const { return static_cast<std::uint64_t>(values_.size()) - 1; }

 private:
  std::uint64_t y_;
  std::uint64_t limit_;
  std::vector<std::uint64_t> values_;
};

enum class SieveAlgorithm {
  Auto,    // dense when (limit+1)*8 bytes fits the budget, else sparse
  Dense,   // smallest-prime-factor division sieve over [1, limit]
  Sparse,  // recursive generation of prime products, then sort
};

// True iff every prime factor of n is <= y. Total: n = 1 is smooth, and
// y < 2 simply leaves no admissible primes.
bool is_smooth(std::uint64_t n, std::uint64_t y);

// All y-smooth integers <= limit plus the flagged successor. The dense and
// sparse algorithms produce identical sequences; Auto picks by memory
// budget. Dense throws ResourceLimitError when forced over budget.
SmoothSequence enumerate_smooth(std::uint64_t limit, std::uint64_t y,
                                SieveAlgorithm algorithm = SieveAlgorithm::Auto,
                                std::uint64_t mem_budget = kDefaultMemBudget);

// psi(limit, y): number of y-smooth integers <= limit.
std::uint64_t psi(std::uint64_t limit, std::uint64_t y,
                  SieveAlgorithm algorithm = SieveAlgorithm::Auto,
                  std::uint64_t mem_budget = kDefaultMemBudget);

// One record per consecutive pair with left <= limit; size equals count().
std::vector<GapRecord> gap_records(const SmoothSequence& seq);

// Sum of gap^exponent over records with gap >= min_gap.
double gap_moment(const SmoothSequence& seq, double exponent, std::uint64_t min_gap);

// Largest gap with left <= limit.
std::uint64_t max_gap(const SmoothSequence& seq);

}  // namespace smoothgaps
