#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "smoothgaps/dirichlet.hpp"
#include "smoothgaps/smooth_sieve.hpp"

namespace smoothgaps {

// Test set of distinct integers m with unit-modulus weights eps_m.
// M(s) = sum eps_m m^{-s}.
class MSet {
 public:
  MSet() = default;
  explicit MSet(std::vector<std::uint64_t> members,
                std::vector<std::complex<double>> weights = {});

  const std::vector<std::uint64_t>& members() const { return members_; }
  const std::vector<std::complex<double>>& weights() const { return weights_; }
  std::size_t size() const { return members_.size(); }
  bool all_weights_one() const;
  std::complex<double> eval(double t) const;

 private:
  std::vector<std::uint64_t> members_;           // sorted, distinct
  std::vector<std::complex<double>> weights_;    // parallel to members_
};

struct MeanValueReport {
  double T = 0;
  double I_exact = 0;
  std::optional<double> I_quad;
  double J = 0;      // weights eps_m excluded, per the definition of J(M,Q)
  double J_abs = 0;  // banded sum of |alpha_u alpha_v| over the product support
  double lcomp_lower_margin = 0;                  // T*J_abs - (4/pi^2)*I
  std::optional<double> lcomp_upper_margin;       // pi^2*I - T*J
  bool upper_hypothesis_met = false;
};

// The smallest m > a_n/H for each a_n in [x, 2x] whose gap to a_{n+1} is at
// least 2H; all weights 1. Requires 2x <= seq.limit(); warns (stderr) when
// H > x^{3/4}. An empty result just means no large gaps.
MSet build_M_from_gaps(const SmoothSequence& seq, std::uint64_t H, std::uint64_t x);

// I(M,Q) = int_0^T |M(it)Q(it)|^2 dt through the exact identity
// int_0^T e^{-i theta t} dt = (1 - e^{-i theta T})/(i theta).
double I_exact(const MSet& M, const DirichletPoly& Q, double T);

// Same integral by composite Simpson on |M(it)Q(it)|^2, evaluated through
// the factored form (independent of the closed-form path). Throws
// StepTooLargeError when max_step exceeds pi/(10 log(max support)).
double I_quadrature(const MSet& M, const DirichletPoly& Q, double T, double max_step);

// J(M,Q): sum of q_{n1} q_{n2} over quadruples with
// |log(m1 n1 / m2 n2)| <= 2pi/T. Weights eps_m are not included.
double J_pairsum(const MSet& M, const DirichletPoly& Q, double T);

// Both explicit-constant inequalities around I and the banded pair sums:
// (4/pi^2) I <= T*J_abs always, and T*J <= pi^2 I when all eps_m = 1 and
// the q_n are nonnegative. Optionally also fills I_quad.
MeanValueReport verify_lcomp(const MSet& M, const DirichletPoly& Q, double T,
                             bool with_quadrature = false);

// Product polynomial M(s)Q(s): sorted collapsed support with complex
// coefficients sum_{m n = u} eps_m q_n.
std::vector<std::pair<std::uint64_t, std::complex<double>>> complex_product_terms(
    const MSet& M, const DirichletPoly& Q);

// Banded pair sum over an arbitrary sorted value/weight list:
// sum_{i,j, |log(v_i/v_j)| <= 2pi/T} w_i w_j.
double banded_pair_sum(const std::vector<std::pair<std::uint64_t, double>>& sorted_entries,
                       double T);

struct CauchySchwarzSplit {
  double lhs = 0;       // int_0^T |P(it)^{k-1} M(it)| dt, by quadrature
  double int_pb_sq = 0;  // int_0^T |P(it)^b|^2 dt
  double int_pam_sq = 0; // int_0^T |P(it)^a M(it)|^2 dt
  double rhs = 0;       // sqrt(int_pb_sq * int_pam_sq)
};

// The split after the pointwise bound on F: a + b = k - 1.
CauchySchwarzSplit cauchy_schwarz_split(const MSet& M, const DirichletPoly& P, unsigned k,
                                        unsigned a, double T);

}  // namespace smoothgaps
