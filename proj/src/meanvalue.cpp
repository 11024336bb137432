#include "smoothgaps/meanvalue.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "smoothgaps/band.hpp"
#include "smoothgaps/errors.hpp"
#include "smoothgaps/quadrature.hpp"

namespace smoothgaps {

namespace {

constexpr double kWeightSlack = 1e-12;

void require_T(double T) {
  if (!(T >= 20.0)) throw std::invalid_argument("T >= 20 is a standing hypothesis");
}

}  // namespace

MSet::MSet(std::vector<std::uint64_t> members, std::vector<std::complex<double>> weights) {
  if (!weights.empty() && weights.size() != members.size())
    throw std::invalid_argument("MSet: weights must match members");
  std::vector<std::size_t> order(members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return members[a] < members[b]; });
  members_.reserve(members.size());
  weights_.reserve(members.size());
  for (std::size_t i : order) {
    if (members[i] == 0) throw std::invalid_argument("MSet: members must be positive");
    if (!members_.empty() && members_.back() == members[i])
      throw std::invalid_argument("MSet: members must be distinct");
    std::complex<double> w = weights.empty() ? 1.0 : weights[i];
    if (std::abs(w) > 1.0 + kWeightSlack)
      throw std::invalid_argument("MSet: weight modulus must be <= 1");
    members_.push_back(members[i]);
    weights_.push_back(w);
  }
}

bool MSet::all_weights_one() const {
  for (const auto& w : weights_)
    if (std::abs(w - std::complex<double>(1.0)) > kWeightSlack) return false;
  return true;
}

std::complex<double> MSet::eval(double t) const {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    double phase = -t * std::log(static_cast<double>(members_[i]));
    s += weights_[i] * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return s;
}

MSet build_M_from_gaps(const SmoothSequence& seq, std::uint64_t H, std::uint64_t x) {
  if (H < 1 || x < 1) throw std::invalid_argument("build_M_from_gaps: H, x >= 1");
  if (x > seq.limit() / 2)
    throw std::invalid_argument("build_M_from_gaps: sequence must extend to 2x");
  if (static_cast<double>(H) > std::pow(static_cast<double>(x), 0.75))
    std::fprintf(stderr, "build_M_from_gaps: warning: H=%llu exceeds x^{3/4}\n",
                 static_cast<unsigned long long>(H));
  const auto& v = seq.values();
  std::vector<std::uint64_t> ms;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    std::uint64_t a = v[i];
    if (a < x || a > 2 * x) continue;
    if (v[i + 1] - a >= 2 * H) ms.push_back(a / H + 1);  // smallest integer > a/H
  }
  return MSet(std::move(ms));
}

std::vector<std::pair<std::uint64_t, std::complex<double>>> complex_product_terms(
    const MSet& M, const DirichletPoly& Q) {
  std::unordered_map<std::uint64_t, std::complex<double>> acc;
  acc.reserve(M.size() * Q.size() + 1);
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::uint64_t m = M.members()[i];
    if (!Q.terms.empty() && m > (1ull << 63) / Q.terms.back().first)
      throw std::overflow_error("product support exceeds 64-bit range");
    for (const auto& [n, q] : Q.terms) acc[m * n] += M.weights()[i] * q;
  }
  std::vector<std::pair<std::uint64_t, std::complex<double>>> out(acc.begin(), acc.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

double I_exact(const MSet& M, const DirichletPoly& Q, double T) {
  require_T(T);
  auto A = complex_product_terms(M, Q);
  // Hermitian pairing keeps the result exactly real: the (u,v) and (v,u)
  // terms combine to 2 Re(alpha_u conj(alpha_v) K(T, log(u/v))).
  double total = 0;
  for (std::size_t i = 0; i < A.size(); ++i) {
    total += std::norm(A[i].second) * T;
    double du = static_cast<double>(A[i].first);
    for (std::size_t j = i + 1; j < A.size(); ++j) {
      double dv = static_cast<double>(A[j].first);
      double theta = std::log1p((du - dv) / dv);  // log(u/v), u < v here so theta < 0
      // (1 - e^{-i theta T})/(i theta) = 2 sin(theta T/2) e^{-i theta T/2} / theta
      double half = 0.5 * theta * T;
      std::complex<double> K =
          (2.0 * std::sin(half) / theta) * std::polar(1.0, -half);
      total += 2.0 * std::real(A[i].second * std::conj(A[j].second) * K);
    }
  }
  return total;
}

double I_quadrature(const MSet& M, const DirichletPoly& Q, double T, double max_step) {
  require_T(T);
  if (!(max_step > 0)) throw std::invalid_argument("I_quadrature: max_step must be > 0");
  if (M.size() == 0 || Q.size() == 0) return 0.0;
  std::uint64_t max_u = M.members().back();
  if (max_u > (1ull << 63) / Q.terms.back().first)
    throw std::overflow_error("product support exceeds 64-bit range");
  max_u *= Q.terms.back().first;
  if (max_u > 1) {
    double bound = std::numbers::pi / (10.0 * std::log(static_cast<double>(max_u)));
    if (max_step > bound * (1.0 + 1e-12))
      throw StepTooLargeError("I_quadrature: max_step " + std::to_string(max_step) +
                              " exceeds pi/(10 log max_support) = " + std::to_string(bound));
  }
  auto f = [&](double t) { return std::norm(M.eval(t) * eval_poly(Q, t)); };
  return integrate_simpson(f, 0.0, T, max_step);
}

double banded_pair_sum(const std::vector<std::pair<std::uint64_t, double>>& sorted_entries,
                       double T) {
  RatioBand band(T);
  const auto& e = sorted_entries;
  std::vector<double> prefix(e.size() + 1, 0.0);
  for (std::size_t i = 0; i < e.size(); ++i) prefix[i + 1] = prefix[i] + e[i].second;
  double total = 0;
  std::size_t jlo = 0, jhi = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    double vi = static_cast<double>(e[i].first);
    while (jlo < e.size() && vi > static_cast<double>(e[jlo].first) * band.hi) ++jlo;
    if (jhi < jlo) jhi = jlo;
    while (jhi < e.size() && static_cast<double>(e[jhi].first) <= vi * band.hi) ++jhi;
    total += e[i].second * (prefix[jhi] - prefix[jlo]);
  }
  return total;
}

double J_pairsum(const MSet& M, const DirichletPoly& Q, double T) {
  require_T(T);
  // one entry per (m, n) pair; repeated product values stay separate
  std::vector<std::pair<std::uint64_t, double>> entries;
  entries.reserve(M.size() * Q.size());
  for (std::uint64_t m : M.members()) {
    if (!Q.terms.empty() && m > (1ull << 63) / Q.terms.back().first)
      throw std::overflow_error("product support exceeds 64-bit range");
    for (const auto& [n, q] : Q.terms) entries.emplace_back(m * n, q);
  }
  std::sort(entries.begin(), entries.end());
  return banded_pair_sum(entries, T);
}

MeanValueReport verify_lcomp(const MSet& M, const DirichletPoly& Q, double T,
                             bool with_quadrature) {
  require_T(T);
  MeanValueReport r;
  r.T = T;
  r.I_exact = I_exact(M, Q, T);
  r.J = J_pairsum(M, Q, T);

  auto A = complex_product_terms(M, Q);
  std::vector<std::pair<std::uint64_t, double>> abs_entries;
  abs_entries.reserve(A.size());
  for (const auto& [u, alpha] : A) abs_entries.emplace_back(u, std::abs(alpha));
  r.J_abs = banded_pair_sum(abs_entries, T);

  double pi2 = std::numbers::pi * std::numbers::pi;
  r.lcomp_lower_margin = T * r.J_abs - (4.0 / pi2) * r.I_exact;

  bool q_nonneg = std::all_of(Q.terms.begin(), Q.terms.end(),
                              [](const auto& t) { return t.second >= 0.0; });
  r.upper_hypothesis_met = M.all_weights_one() && q_nonneg;
  if (r.upper_hypothesis_met) r.lcomp_upper_margin = pi2 * r.I_exact - T * r.J;

  if (with_quadrature) {
    std::uint64_t max_u = abs_entries.empty() ? 1 : abs_entries.back().first;
    double step = max_u > 1
                      ? std::numbers::pi / (10.0 * std::log(static_cast<double>(max_u)))
                      : T / 16.0;
    r.I_quad = I_quadrature(M, Q, T, step);
  }
  return r;
}

CauchySchwarzSplit cauchy_schwarz_split(const MSet& M, const DirichletPoly& P, unsigned k,
                                        unsigned a, double T) {
  require_T(T);
  if (k < 1 || a > k - 1)
    throw std::invalid_argument("cauchy_schwarz_split: need a + b = k - 1 with a, b >= 0");
  unsigned b = k - 1 - a;
  DirichletPoly Pa = poly_pow_scaled(P, a, 1.0);
  DirichletPoly Pb = poly_pow_scaled(P, b, 1.0);
  MSet one({1});

  CauchySchwarzSplit s;
  s.int_pb_sq = I_exact(one, Pb, T);
  s.int_pam_sq = I_exact(M, Pa, T);
  s.rhs = std::sqrt(s.int_pb_sq * s.int_pam_sq);

  std::uint64_t max_u = 1;
  if (!P.terms.empty())
    max_u = M.members().empty() ? 1 : M.members().back();
  DirichletPoly Pk1 = poly_pow_scaled(P, k - 1, 1.0);
  if (!Pk1.terms.empty()) max_u *= Pk1.terms.back().first;
  double step = max_u > 1 ? std::numbers::pi / (10.0 * std::log(static_cast<double>(max_u)))
                          : T / 16.0;
  auto f = [&](double t) { return std::abs(eval_poly(Pk1, t) * M.eval(t)); };
  s.lhs = integrate_simpson(f, 0.0, T, step, 1e-10);
  return s;
}

}  // namespace smoothgaps
