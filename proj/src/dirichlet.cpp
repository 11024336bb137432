#include "smoothgaps/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

#include "smoothgaps/errors.hpp"
#include "smoothgaps/primes.hpp"

namespace smoothgaps {

EmptyPrimeWindowError::EmptyPrimeWindowError(std::string window, double lo_, double hi_)
    : std::runtime_error(window + " prime window (" + std::to_string(lo_) + ", " +
                         std::to_string(hi_) + "] contains no primes"),
      window_name(std::move(window)),
      lo(lo_),
      hi(hi_) {}

DirichletPoly::DirichletPoly(std::vector<std::pair<std::uint64_t, double>> raw_terms,
                             std::uint64_t bound)
    : support_bound(bound) {
  std::sort(raw_terms.begin(), raw_terms.end());
  terms.reserve(raw_terms.size());
  for (const auto& [n, c] : raw_terms) {
    if (n == 0) throw std::invalid_argument("DirichletPoly: support must be positive");
    if (n > support_bound)
      throw std::invalid_argument("DirichletPoly: term beyond declared support bound");
    if (!terms.empty() && terms.back().first == n)
      terms.back().second += c;
    else
      terms.emplace_back(n, c);
  }
  std::erase_if(terms, [](const auto& t) { return t.second == 0.0; });
}

double DirichletPoly::coeff(std::uint64_t n) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), n,
                             [](const auto& t, std::uint64_t v) { return t.first < v; });
  return (it != terms.end() && it->first == n) ? it->second : 0.0;
}

double DirichletPoly::coeff_sum() const {
  double s = 0;
  for (const auto& [n, c] : terms) s += c;
  return s;
}

double DirichletPoly::abs_coeff_sum() const {
  double s = 0;
  for (const auto& [n, c] : terms) s += std::abs(c);
  return s;
}

PerronWindow::PerronWindow(double d) : delta(d) {
  if (!(d > 0.0) || d > 1.0)
    throw std::invalid_argument("PerronWindow: delta must lie in (0, 1]");
}

DirichletPoly build_zeta_segment(std::uint64_t N) {
  if (N < 1) throw std::invalid_argument("build_zeta_segment: N >= 1 required");
  std::vector<std::pair<std::uint64_t, double>> t;
  t.reserve(N);
  for (std::uint64_t n = 1; n <= N; ++n) t.emplace_back(n, 1.0);
  return DirichletPoly(std::move(t), N);
}

DirichletPoly build_prime_window(double lo, double hi) {
  if (!(lo >= 0.0) || !(lo < hi))
    throw std::invalid_argument("build_prime_window: need 0 <= lo < hi");
  std::vector<std::pair<std::uint64_t, double>> t;
  for (std::uint64_t p : primes_in(lo, hi)) t.emplace_back(p, 1.0);
  std::uint64_t bound = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::floor(hi)));
  return DirichletPoly(std::move(t), bound);
}

DirichletPoly poly_mul(const DirichletPoly& A, const DirichletPoly& B) {
  if (B.support_bound != 0 && A.support_bound > (1ull << 63) / B.support_bound)
    throw std::overflow_error("poly_mul: product of support bounds exceeds 64-bit range");
  std::unordered_map<std::uint64_t, double> acc;
  acc.reserve(A.size() * 2 + 1);
  for (const auto& [d, ad] : A.terms)
    for (const auto& [e, be] : B.terms) acc[d * e] += ad * be;
  std::vector<std::pair<std::uint64_t, double>> t(acc.begin(), acc.end());
  return DirichletPoly(std::move(t), A.support_bound * B.support_bound);
}

DirichletPoly poly_pow_scaled(const DirichletPoly& P, unsigned k, double scale) {
  DirichletPoly out({{1, 1.0}}, 1);
  for (unsigned i = 0; i < k; ++i) out = poly_mul(out, P);
  for (auto& [n, c] : out.terms) c *= scale;
  std::erase_if(out.terms, [](const auto& t) { return t.second == 0.0; });
  return out;
}

DirichletPoly build_F(std::uint64_t x, unsigned k) {
  if (k < 2) throw std::invalid_argument("build_F: k >= 2 required");
  if (k > 40) throw std::invalid_argument("build_F: k too large for 64-bit support");
  if (x < 2) throw std::invalid_argument("build_F: x >= 2 required");
  if (x > (1ull << 61) >> k)
    throw std::overflow_error("build_F: 2^{k+2} x exceeds 64-bit range");
  double root = std::pow(static_cast<double>(x), 1.0 / k);
  double p1_hi = std::ldexp(root, static_cast<int>(k) + 2);  // 2^{k+2} x^{1/k}
  DirichletPoly P = build_prime_window(root / 2.0, root);
  if (P.size() == 0) throw EmptyPrimeWindowError("P", root / 2.0, root);
  DirichletPoly P1 = build_prime_window(root, p1_hi);
  if (P1.size() == 0) throw EmptyPrimeWindowError("P1", root, p1_hi);

  double inv_kfact = 1.0;
  for (unsigned i = 2; i <= k; ++i) inv_kfact /= static_cast<double>(i);
  DirichletPoly F = poly_mul(poly_pow_scaled(P, k - 1, inv_kfact), P1);
  F.support_bound = (std::uint64_t{1} << (k + 2)) * x;
  for (const auto& [n, c] : F.terms) {
    if (n > F.support_bound)
      throw std::logic_error("build_F: support exceeds 2^{k+2} x");
    (void)c;
  }
  return F;
}

std::complex<double> eval_poly(const DirichletPoly& A, double t) {
  std::complex<double> s = 0;
  for (const auto& [n, c] : A.terms) {
    double phase = -t * std::log(static_cast<double>(n));
    s += c * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return s;
}

std::complex<double> perron_window_eval(const PerronWindow& w, double t) {
  double L = std::log1p(w.delta);
  if (t == 0.0) return {L / w.delta, 0.0};
  double theta = t * L;
  if (std::abs(theta) < 1e-8) {
    // (e^{i theta} - 1)/(i theta) = 1 + i theta/2 - theta^2/6 + O(theta^3)
    return (L / w.delta) * std::complex<double>(1.0 - theta * theta / 6.0, theta / 2.0);
  }
  std::complex<double> num = std::polar(1.0, theta) - 1.0;
  return num / std::complex<double>(0.0, w.delta * t);
}

double window_count(const DirichletPoly& A, double a, double delta) {
  if (!(a > 0.0) || !(delta > 0.0))
    throw std::invalid_argument("window_count: need a > 0 and delta > 0");
  double hi = (1.0 + delta) * a;
  double s = 0;
  auto it = std::upper_bound(A.terms.begin(), A.terms.end(), a,
                             [](double v, const auto& t) { return v < static_cast<double>(t.first); });
  for (; it != A.terms.end() && static_cast<double>(it->first) <= hi; ++it) s += it->second;
  return s / delta;
}

}  // namespace smoothgaps
