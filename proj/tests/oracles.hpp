#pragma once

// Independent reference computations for the test suites.  Nothing here
// calls into the library's own counting or elimination code.

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline mpz_class binom(long n, long k) {
  if (k < 0 || n < k) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline std::uint64_t u64(const mpz_class& x) { return x.get_ui(); }

/// Half-space <a, x> + c >= 0 (or > 0 when strict).
struct HalfSpace {
  std::vector<std::int64_t> a;
  std::int64_t c;
};

/// Counts integer points of the system inside [lo, hi]^n by exhaustive search.
inline std::uint64_t brute_count(const std::vector<HalfSpace>& sys, std::size_t n, std::int64_t lo, std::int64_t hi,
                                 bool strict) {
  std::vector<std::int64_t> x(n, lo);
  std::uint64_t count = 0;
  for (;;) {
    bool inside = true;
    for (const auto& h : sys) {
      std::int64_t v = h.c;
      for (std::size_t i = 0; i < n; ++i) v += h.a[i] * x[i];
      if (strict ? v <= 0 : v < 0) {
        inside = false;
        break;
      }
    }
    count += inside;
    std::size_t k = 0;
    while (k < n && x[k] == hi) x[k++] = lo;
    if (k == n) break;
    ++x[k];
  }
  return count;
}

/// Coefficient of t^k in prod_i (1 - t^{a_i}) / prod_j (1 - t^{w_j}).
inline mpz_class hilbert_coefficient(const std::vector<long>& numerator_degrees, const std::vector<long>& weights,
                                     long k) {
  if (k < 0) return 0;
  std::vector<mpz_class> series(static_cast<std::size_t>(k) + 1, 0);
  series[0] = 1;
  for (long w : weights)
    for (long i = w; i <= k; ++i) series[i] += series[i - w];
  for (long a : numerator_degrees)
    for (long i = k; i >= a; --i) series[i] -= series[i - a];
  return series[k];
}

/// Number of e >= 0 with sum q_i e_i = d.
inline mpz_class weighted_monomials(const std::vector<long>& q, long d) {
  return hilbert_coefficient({}, q, d);
}

/// Rank of an integer matrix modulo a word-sized prime by plain Gaussian elimination.
inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  auto inv = [p](std::int64_t a) {
    std::int64_t res = 1, e = p - 2;
    while (e) {
      if (e & 1) res = static_cast<std::int64_t>((__int128)res * a % p);
      a = static_cast<std::int64_t>((__int128)a * a % p);
      e >>= 1;
    }
    return res;
  };
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    const std::int64_t s = inv(m[r][c]);
    for (auto& x : m[r]) x = static_cast<std::int64_t>((__int128)x * s % p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::int64_t f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = ((m[i][j] - static_cast<std::int64_t>((__int128)f * m[r][j] % p)) % p + p) % p;
    }
    ++r;
  }
  return r;
}

/// 3 * (floor((h_next - 1) / h_top) + 1).
inline std::uint64_t rhs(std::uint64_t h_top, std::uint64_t h_next) {
  const std::int64_t q = h_next == 0 ? -1 : static_cast<std::int64_t>((h_next - 1) / h_top);
  return static_cast<std::uint64_t>(3 * (q + 1));
}

}  // namespace oracle
