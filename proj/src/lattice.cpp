#include "smoothgaps/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "smoothgaps/band.hpp"
#include "smoothgaps/errors.hpp"
#include "smoothgaps/primes.hpp"

namespace smoothgaps {

namespace {

constexpr std::uint64_t kCoordLimit = 1ull << 31;

struct ExactContext {
  BigInt m1, m2;
  BigInt tnum, tden;  // T = tnum / tden exactly
  BigInt scale;       // (m1 * tden)^2

  BigInt dot(const std::array<std::int64_t, 2>& u, const std::array<std::int64_t, 2>& v) const {
    BigInt u1 = u[0], u2 = u[1], v1 = v[0], v2 = v[1];
    BigInt planar = tden * tden * m1 * m1 * (u1 * v1 + u2 * v2);
    BigInt wu = m1 * u1 - m2 * u2;
    BigInt wv = m1 * v1 - m2 * v2;
    return planar + tnum * tnum * wu * wv;
  }
};

ExactContext make_context(std::uint64_t m1, std::uint64_t m2, double T) {
  if (m2 < 1 || m1 < m2) throw std::invalid_argument("pair_basis: need m1 >= m2 >= 1");
  if (m1 > kCoordLimit) throw std::invalid_argument("pair_basis: m1 too large");
  if (!(T >= 20.0)) throw std::invalid_argument("pair_basis: T >= 20 required");
  ExactContext ctx;
  ctx.m1 = m1;
  ctx.m2 = m2;
  // the double T is exactly mant * 2^(exp-53) with mant integral
  int exp = 0;
  double fr = std::frexp(T, &exp);
  auto mant = static_cast<std::int64_t>(std::ldexp(fr, 53));
  exp -= 53;
  while (mant % 2 == 0 && exp < 0) {
    mant /= 2;
    ++exp;
  }
  ctx.tnum = mant;
  ctx.tden = 1;
  if (exp >= 0)
    ctx.tnum <<= exp;
  else
    ctx.tden <<= -exp;
  ctx.scale = ctx.tden * ctx.tden * ctx.m1 * ctx.m1;
  return ctx;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;  // truncates toward zero
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt nearest_div(const BigInt& a, const BigInt& b) {
  return floor_div(2 * a + b, 2 * b);
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

bool lex_less(const std::array<std::int64_t, 2>& a, const std::array<std::int64_t, 2>& b) {
  return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
}

void normalize_sign(std::array<std::int64_t, 2>& v) {
  if (v[0] < 0 || (v[0] == 0 && v[1] < 0)) {
    v[0] = -v[0];
    v[1] = -v[1];
  }
}

// floor/ceil of (num / den) for int64, den != 0
std::int64_t floor_div64(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if (num % den != 0 && ((num < 0) != (den < 0))) --q;
  return q;
}
std::int64_t ceil_div64(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if (num % den != 0 && ((num < 0) == (den < 0))) ++q;
  return q;
}

// intersect the lam1 interval with {lam1 : 1 <= c*lam1 + o <= N}
bool clip_interval(std::int64_t c, std::int64_t o, std::int64_t N, std::int64_t& lo,
                   std::int64_t& hi) {
  if (c == 0) return 1 <= o && o <= N;
  std::int64_t a = 1 - o, b = N - o;
  if (c > 0) {
    lo = std::max(lo, ceil_div64(a, c));
    hi = std::min(hi, floor_div64(b, c));
  } else {
    lo = std::max(lo, ceil_div64(b, c));
    hi = std::min(hi, floor_div64(a, c));
  }
  return true;
}

}  // namespace

double PairBasis::norm_e1() const { return std::sqrt(to_double(g11) / to_double(scale)); }
double PairBasis::norm_e2() const { return std::sqrt(to_double(g22) / to_double(scale)); }
double PairBasis::det() const {
  return std::sqrt(to_double(g11 * g22 - g12 * g12)) / to_double(scale);
}

PairBasis pair_basis(std::uint64_t m1, std::uint64_t m2, double T) {
  ExactContext ctx = make_context(m1, m2, T);
  std::array<std::int64_t, 2> u{1, 0}, v{0, 1};
  BigInt nu = ctx.dot(u, u), nv = ctx.dot(v, v);
  if (nu > nv) {
    std::swap(u, v);
    std::swap(nu, nv);
  }
  // Lagrange reduction: shorten v against u until it cannot improve
  while (true) {
    BigInt q = nearest_div(ctx.dot(u, v), nu);
    if (q != 0) {
      auto qi = q.convert_to<std::int64_t>();
      v[0] -= qi * u[0];
      v[1] -= qi * u[1];
      nv = ctx.dot(v, v);
    }
    if (nv >= nu) break;
    std::swap(u, v);
    std::swap(nu, nv);
  }
  normalize_sign(u);
  normalize_sign(v);
  if (nu == nv && lex_less(v, u)) std::swap(u, v);

  PairBasis b;
  b.m1 = m1;
  b.m2 = m2;
  b.T = T;
  b.e1 = u;
  b.e2 = v;
  b.scale = ctx.scale;
  b.g11 = ctx.dot(u, u);
  b.g12 = ctx.dot(u, v);
  b.g22 = ctx.dot(v, v);
  return b;
}

PairClass classify_pair(const PairBasis& basis, std::uint64_t N) {
  if (N < 1) throw std::invalid_argument("classify_pair: N >= 1 required");
  PairClass c;
  BigInt detG = basis.g11 * basis.g22 - basis.g12 * basis.g12;
  BigInt n2 = BigInt(N) * N;
  c.bad = 66 * n2 * basis.g11 * basis.scale < detG;
  c.direction = basis.e1;
  if (c.direction[0] < 0) {
    c.direction[0] = -c.direction[0];
    c.direction[1] = -c.direction[1];
  }
  return c;
}

std::uint64_t count_lattice_bruteforce(std::uint64_t m1, std::uint64_t m2, std::uint64_t N,
                                       double T) {
  if (m2 < 1 || m1 < m2) throw std::invalid_argument("count_lattice: need m1 >= m2 >= 1");
  RatioBand band(T);
  std::uint64_t count = 0;
  for (std::uint64_t n1 = 1; n1 <= N; ++n1)
    for (std::uint64_t n2 = 1; n2 <= N; ++n2)
      if (band.contains(m1 * n1, m2 * n2)) ++count;
  return count;
}

std::uint64_t count_lattice(std::uint64_t m1, std::uint64_t m2, std::uint64_t N, double T) {
  if (N < 1) throw std::invalid_argument("count_lattice: N >= 1 required");
  if (N > kCoordLimit) throw std::invalid_argument("count_lattice: N too large");
  PairBasis basis = pair_basis(m1, m2, T);
  PairClass cls = classify_pair(basis, N);
  RatioBand band(T);

  if (cls.bad) {
    std::int64_t u1 = cls.direction[0], u2 = cls.direction[1];
    if (u1 <= 0 || u2 <= 0) return 0;
    std::uint64_t L = std::min(N / static_cast<std::uint64_t>(u1),
                               N / static_cast<std::uint64_t>(u2));
    std::uint64_t count = 0;
    for (std::uint64_t lam = 1; lam <= L; ++lam)
      if (band.contains(m1 * lam * static_cast<std::uint64_t>(u1),
                        m2 * lam * static_cast<std::uint64_t>(u2)))
        ++count;
    return count;
  }

  // good pair: every solution has geometric length <= sqrt(66) N, hence an
  // e2-coefficient bounded by sqrt(66) N |e1| / det
  double lam2_bound = std::sqrt(66.0) * static_cast<double>(N) * basis.norm_e1() / basis.det();
  auto lam2_max = static_cast<std::int64_t>(std::floor(lam2_bound)) + 1;
  std::int64_t Ns = static_cast<std::int64_t>(N);
  std::uint64_t count = 0;
  for (std::int64_t lam2 = -lam2_max; lam2 <= lam2_max; ++lam2) {
    std::int64_t o1 = lam2 * basis.e2[0];
    std::int64_t o2 = lam2 * basis.e2[1];
    std::int64_t lo = std::numeric_limits<std::int64_t>::min() / 4;
    std::int64_t hi = std::numeric_limits<std::int64_t>::max() / 4;
    if (!clip_interval(basis.e1[0], o1, Ns, lo, hi)) continue;
    if (!clip_interval(basis.e1[1], o2, Ns, lo, hi)) continue;
    if (basis.e1[0] == 0 && basis.e1[1] == 0) continue;
    for (std::int64_t lam1 = lo; lam1 <= hi; ++lam1) {
      std::int64_t n1 = lam1 * basis.e1[0] + o1;
      std::int64_t n2 = lam1 * basis.e1[1] + o2;
      if (band.contains(m1 * static_cast<std::uint64_t>(n1),
                        m2 * static_cast<std::uint64_t>(n2)))
        ++count;
    }
  }
  return count;
}

namespace {

bool is_unit_zeta(const DirichletPoly& Q) {
  if (Q.terms.size() != Q.support_bound) return false;
  for (std::size_t i = 0; i < Q.terms.size(); ++i)
    if (Q.terms[i].first != i + 1 || Q.terms[i].second != 1.0) return false;
  return true;
}

}  // namespace

double j_fast(const MSet& M, const DirichletPoly& Q, double T) {
  if (!(T >= 20.0)) throw std::invalid_argument("j_fast: T >= 20 required");
  if (is_unit_zeta(Q)) {
    std::uint64_t N = Q.support_bound;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> cache;
    std::uint64_t total = 0;
    for (std::uint64_t a : M.members())
      for (std::uint64_t b : M.members()) {
        auto key = std::minmax(a, b);
        auto it = cache.find(key);
        if (it == cache.end())
          it = cache.emplace(key, count_lattice(key.second, key.first, N, T)).first;
        total += it->second;
      }
    return static_cast<double>(total);
  }
  // weighted polynomials: banded merge over the (m, n) products
  std::vector<std::pair<std::uint64_t, double>> entries;
  entries.reserve(M.size() * Q.size());
  for (std::uint64_t m : M.members())
    for (const auto& [n, q] : Q.terms) entries.emplace_back(m * n, q);
  std::sort(entries.begin(), entries.end());
  return banded_pair_sum(entries, T);
}

BadDecomposition bad_decompose(std::uint64_t m1, std::uint64_t m2, std::uint64_t N, double T,
                               unsigned k) {
  if (k < 1) throw std::invalid_argument("bad_decompose: k >= 1 required");
  PairBasis basis = pair_basis(m1, m2, T);
  PairClass cls = classify_pair(basis, N);
  if (!cls.bad)
    throw NotBadPairError("bad_decompose: pair (" + std::to_string(m1) + "," +
                          std::to_string(m2) + ") is not bad at N=" + std::to_string(N));

  BadDecomposition d;
  if (cls.direction[0] <= 0 || cls.direction[1] <= 0) {
    d.degenerate_direction = true;
    return d;
  }
  d.u1 = static_cast<std::uint64_t>(cls.direction[0]);
  d.u2 = static_cast<std::uint64_t>(cls.direction[1]);
  int h1 = omega_with_mult(d.u1);
  int h2 = omega_with_mult(d.u2);
  if (h1 != h2)
    throw NonUniformHError("bad_decompose: direction (" + std::to_string(d.u1) + "," +
                               std::to_string(d.u2) + ") has factor counts " +
                               std::to_string(h1) + " vs " + std::to_string(h2),
                           h1, h2);
  d.h = h1;

  std::uint64_t root = integer_kth_root(N, k);
  auto smooth_to_root = [&](std::uint64_t n) {
    for (std::uint64_t p = 2; p <= root && p * p <= n; p == 2 ? p = 3 : p += 2)
      while (n % p == 0) n /= p;
    return n == 1 || n <= root;
  };
  d.u_smooth = smooth_to_root(d.u1) && smooth_to_root(d.u2);

  if (static_cast<unsigned>(d.h) > k || !d.u_smooth) return d;  // no Q_k-support solutions
  if (d.u1 > N || d.u2 > N) return d;

  RatioBand band(T);
  if (!band.contains(m1 * d.u1, m2 * d.u2)) return d;

  std::uint64_t L = std::min(N / d.u1, N / d.u2);
  unsigned depth = k - static_cast<unsigned>(d.h);
  if (depth == 0) {
    d.lambdas.push_back(1);  // h = k forces lambda = 1
    return d;
  }
  auto primes = primes_upto(root);
  auto dfs = [&](auto&& self, std::uint64_t prod, std::size_t idx, unsigned left) -> void {
    if (left == 0) {
      d.lambdas.push_back(prod);
      return;
    }
    for (std::size_t j = idx; j < primes.size(); ++j) {
      if (prod > L / primes[j]) break;
      self(self, prod * primes[j], j, left - 1);
    }
  };
  dfs(dfs, 1, 0, depth);
  std::sort(d.lambdas.begin(), d.lambdas.end());
  return d;
}

}  // namespace smoothgaps
