// Deliberately naive reference implementations used as test oracles. None of
// them share code with the library.
#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

inline std::vector<std::pair<i64, int>> trial_factor(i64 n) {
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline i64 totient_count(i64 n) {
  i64 count = 0;
  for (i64 r = 1; r <= n; ++r) {
    if (std::gcd(r, n) == 1) ++count;
  }
  return count;
}

inline i64 pow_mod(i64 base, i64 exp, i64 mod) {
  i64 result = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) result = static_cast<i64>((__int128)result * base % mod);
    base = static_cast<i64>((__int128)base * base % mod);
    exp >>= 1;
  }
  return result;
}

/// Legendre symbol (a/p) for an odd prime p by Euler's criterion.
inline int legendre_euler(i64 a, i64 p) {
  const i64 r = pow_mod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

/// Smallest (x, y) with x, y > 0 and x^2 - D y^2 = +-4, scanning y upwards.
/// Returns the unit (x + y sqrt(D)) / 2 and its norm.
struct PellSolution {
  i64 x, y;
  int norm;
};

inline std::optional<PellSolution> pell_scan(i64 disc, i64 ymax) {
  for (i64 y = 1; y <= ymax; ++y) {
    for (int sign : {-1, 1}) {
      const __int128 x2 = (__int128)disc * y * y + 4 * sign;
      if (x2 <= 0) continue;
      i64 x = static_cast<i64>(__builtin_sqrtl(static_cast<long double>(x2)));
      while ((__int128)x * x > x2) --x;
      while ((__int128)(x + 1) * (x + 1) <= x2) ++x;
      if ((__int128)x * x == x2) return PellSolution{x, y, sign};
    }
  }
  return std::nullopt;
}

/// |(O_K / n O_K)^x| by enumerating a + b omega mod n, with omega = (D + sqrt D) / 2,
/// and counting classes whose norm is prime to n.
inline i64 phi_K_enumerate(i64 disc0, i64 n) {
  // N(a + b omega) = a^2 + D a b + (D^2 - D)/4 b^2.
  const i64 c = (disc0 * disc0 - disc0) / 4;
  i64 count = 0;
  for (i64 a = 0; a < n; ++a) {
    for (i64 b = 0; b < n; ++b) {
      i64 norm = (a * a + disc0 % n * a % n * b + c % n * b % n * b) % n;
      if (std::gcd(norm, n) == 1) ++count;
    }
  }
  return count;
}

/// Whether disc is fundamental, by brute-force square divisor search.
inline bool fundamental(i64 disc) {
  auto squarefree = [](i64 m) {
    for (i64 p = 2; p * p <= m; ++p) {
      if (m % (p * p) == 0) return false;
    }
    return true;
  };
  if (disc % 4 == 1) return squarefree(disc);
  if (disc % 4 == 0) {
    const i64 m = disc / 4;
    return (m % 4 == 2 || m % 4 == 3) && squarefree(m);
  }
  return false;
}

}  // namespace oracle
