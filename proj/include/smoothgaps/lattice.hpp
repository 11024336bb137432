#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "smoothgaps/dirichlet.hpp"
#include "smoothgaps/meanvalue.hpp"

namespace smoothgaps {

using BigInt = boost::multiprecision::cpp_int;

// Gauss-reduced basis of the lattice {(n1, n2, T(n1 - n2 m2/m1))}. Basis
// vectors are kept as their integer coordinates (n1, n2); the Gram matrix
// is exact, scaled by (m1 * Tden)^2 where T = Tnum/Tden is the (always
// rational) exact value of the double T. For integer T the scale is m1^2.
struct PairBasis {
  std::uint64_t m1 = 1;
  std::uint64_t m2 = 1;
  double T = 20;
  std::array<std::int64_t, 2> e1{1, 0};
  std::array<std::int64_t, 2> e2{0, 1};
  BigInt g11, g12, g22;  // scaled Gram of (e1, e2)
  BigInt scale;          // (m1 * Tden)^2

  double norm_e1() const;
  double norm_e2() const;
  double det() const;  // sqrt(g11 g22 - g12^2) / scale
};

struct PairClass {
  bool bad = false;
  // e1 with first coordinate >= 0 (sign flipped if needed).
  std::array<std::int64_t, 2> direction{0, 0};
};

struct BadDecomposition {
  int h = 0;  // prime factor count (with multiplicity) of u1 and u2
  std::uint64_t u1 = 0;
  std::uint64_t u2 = 0;
  std::vector<std::uint64_t> lambdas;  // Q_{k-h} members with lambda*u_i <= N
  bool degenerate_direction = false;   // forced direction leaves the positive quadrant
  bool u_smooth = true;                // all prime factors of u1, u2 are <= N^{1/k}
};

// Lagrange-Gauss reduction from the generators (1,0) and (0,1), entirely in
// exact integer arithmetic. Guarantees |e1| <= |e2| and |e1.e2| <= |e1|^2/2;
// ties on equal norms break lexicographically on coordinates.
PairBasis pair_basis(std::uint64_t m1, std::uint64_t m2, double T);

// Bad iff sqrt(66) N |e1| < det, checked exactly as 66 N^2 g11 scale < detG:
// then any solution vector (length <= N sqrt(66)) has zero e2-coefficient.
PairClass classify_pair(const PairBasis& basis, std::uint64_t N);

// #N(m1,m2;N,T) = #{(n1,n2): 1 <= n1,n2 <= N, |log(m1 n1/m2 n2)| <= 2pi/T}.
// Bad pairs count multiples of the forced direction; good pairs enumerate
// bounded basis coefficients. Every candidate pair is tested with the same
// band predicate the brute force uses.
std::uint64_t count_lattice(std::uint64_t m1, std::uint64_t m2, std::uint64_t N, double T);

// Plain N x N double loop; the oracle the lattice route must match exactly.
std::uint64_t count_lattice_bruteforce(std::uint64_t m1, std::uint64_t m2, std::uint64_t N,
                                       double T);

// J(M,Q) by per-pair lattice counting when Q is the all-ones segment Z(N),
// by banded merge otherwise. Agrees with J_pairsum exactly on integer counts.
double j_fast(const MSet& M, const DirichletPoly& Q, double T);

// For a pair that is bad at N, the factorization shape of the solutions
// restricted to products of k primes <= N^{1/k}: all are lambda (u1, u2)
// with u1, u2 in Q_h and lambda in Q_{k-h}. Throws NotBadPairError when the
// pair is good at N, NonUniformHError when u1 and u2 have different prime
// factor counts.
BadDecomposition bad_decompose(std::uint64_t m1, std::uint64_t m2, std::uint64_t N, double T,
                               unsigned k);

}  // namespace smoothgaps
