#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace smoothgaps {

// Sparse Dirichlet polynomial sum a_n n^{-s} with real coefficients,
// evaluated on the imaginary axis s = it. Terms are sorted by n and hold
// no zeros; support_bound is the declared N with support <= N. Immutable
// in practice: all operations return new values.
struct DirichletPoly {
  std::vector<std::pair<std::uint64_t, double>> terms;
  std::uint64_t support_bound = 1;

  DirichletPoly() = default;
  // Normalizes: sorts, merges duplicate n, drops zeros, checks support.
  DirichletPoly(std::vector<std::pair<std::uint64_t, double>> raw_terms,
                std::uint64_t bound);

  double coeff(std::uint64_t n) const;
  std::size_t size() const { return terms.size(); }
  double coeff_sum() const;
  double abs_coeff_sum() const;
  std::uint64_t max_support() const { return terms.empty() ? 1 : terms.back().first; }
};

// Smoothing kernel ((1+delta)^s - 1)/(delta s).
struct PerronWindow {
  double delta;
  explicit PerronWindow(double d);
};

// Z(s) = sum_{n<=N} n^{-s}.
DirichletPoly build_zeta_segment(std::uint64_t N);

// Coefficient 1 at each prime p with lo < p <= hi. Empty windows are fine.
DirichletPoly build_prime_window(double lo, double hi);

// Dirichlet product; coefficient of n is sum_{de=n} A(d)B(e). Throws
// std::overflow_error when the product of support bounds exceeds 2^63.
DirichletPoly poly_mul(const DirichletPoly& A, const DirichletPoly& B);

// scale * P^k; k = 0 gives scale at n = 1.
DirichletPoly poly_pow_scaled(const DirichletPoly& P, unsigned k, double scale);

// F(s) = (1/k!) P(s)^{k-1} P1(s) with P on (x^{1/k}/2, x^{1/k}] and P1 on
// (x^{1/k}, 2^{k+2} x^{1/k}]; support bound 2^{k+2} x. Coefficients land in
// [0,1]. Throws EmptyPrimeWindowError naming the window that has no primes.
DirichletPoly build_F(std::uint64_t x, unsigned k);

// A(it) = sum a_n e^{-it log n}.
std::complex<double> eval_poly(const DirichletPoly& A, double t);

// Kernel value at s = it; the t = 0 value log(1+delta)/delta is the
// continuity limit. |result| <= 1 always.
std::complex<double> perron_window_eval(const PerronWindow& w, double t);

// delta^{-1} sum_{a < n <= (1+delta)a} a_n.
double window_count(const DirichletPoly& A, double a, double delta);

}  // namespace smoothgaps
