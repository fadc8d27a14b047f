#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace quadclass {

/// Arbitrary-precision integer used for every domain quantity.
using Integer = mpz_class;

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer together with its prime factorization. Primes are
/// strictly increasing and the product of prime^exponent equals `n`.
struct FactoredInteger {
  Integer n{1};
  std::vector<PrimePower> factors;

  /// Number of positive divisors.
  Integer divisor_count() const;
  /// Product of p^(e mod 2), i.e. the squarefree part.
  Integer squarefree_part() const;
};

/// Multiplies two factorizations by merging their exponent lists.
FactoredInteger multiply(const FactoredInteger& lhs, const FactoredInteger& rhs);

/// Deterministic complete factorization by trial division (native 64-bit
/// fast path when n fits, arbitrary precision otherwise). Throws
/// std::invalid_argument for n < 1.
FactoredInteger factor(const Integer& n);

/// Deterministic primality: Miller-Rabin over the first thirteen prime bases,
/// which is exact for n < 3.3e24. Larger inputs fall back to GMP's
/// Baillie-PSW based test with a fixed seed.
bool is_prime(const Integer& n);

/// Positive divisors in ascending order.
std::vector<Integer> divisors(const Integer& n);
std::vector<Integer> divisors(const FactoredInteger& n);

Integer euler_phi(const Integer& n);
Integer euler_phi(const FactoredInteger& n);

/// Kronecker symbol (a/n) for arbitrary integers; (a/2) depends on a mod 8
/// and (a/-1) on the sign of a.
int kronecker(const Integer& a, const Integer& n);

/// n = squarefree * cofactor^2 with `squarefree` squarefree.
struct SquarefreeDecomposition {
  Integer squarefree;
  Integer cofactor;
};
SquarefreeDecomposition squarefree_decompose(const Integer& n);
SquarefreeDecomposition squarefree_decompose(const FactoredInteger& n);

/// disc = conductor^2 * fundamental for a positive nonsquare discriminant.
struct FundamentalDecomposition {
  Integer fundamental;
  Integer conductor;
};

/// Throws std::invalid_argument if disc <= 0, disc is a perfect square, or
/// disc is not 0 or 1 mod 4.
FundamentalDecomposition fundamental_discriminant_decompose(const Integer& disc);
FundamentalDecomposition fundamental_discriminant_decompose(const FactoredInteger& disc);

/// True iff disc is a fundamental discriminant: 1 mod 4 and squarefree, or
/// 4m with m squarefree and m = 2, 3 mod 4.
bool is_fundamental_discriminant(const Integer& disc);

bool is_perfect_square(const Integer& n);
/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

/// Euclidean remainder in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);
/// Floor division.
Integer div_floor(const Integer& a, const Integer& b);
/// a / b, throwing if b does not divide a.
Integer div_exact(const Integer& a, const Integer& b);
bool divides(const Integer& d, const Integer& n);

/// Conversions that throw std::overflow_error when out of range.
std::int64_t to_int64(const Integer& n);
bool fits_int64(const Integer& n);

}  // namespace quadclass
