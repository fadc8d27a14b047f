#include "quadclass/arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace quadclass {
namespace {

// Trial division stops at this bound; an unfactored cofactor below
// kTrialBound^2 is then prime.
constexpr std::uint64_t kTrialBound = 1u << 16;

bool fits_uint64(const Integer& n) {
  return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_uint64(const Integer& n) {
  mpz_class low = n;
  std::uint64_t result = 0;
  mpz_export(&result, nullptr, -1, sizeof(result), 0, 0, low.get_mpz_t());
  return result;
}

Integer from_uint64(std::uint64_t v) {
  Integer result;
  mpz_import(result.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return result;
}

void add_factor(std::map<Integer, unsigned>& acc, const Integer& p, unsigned e) {
  acc[p] += e;
}

// Returns the unfactored cofactor after removing primes below kTrialBound.
Integer trial_divide(const Integer& n, std::map<Integer, unsigned>& acc) {
  if (fits_uint64(n)) {
    std::uint64_t m = to_uint64(n);
    auto strip = [&](std::uint64_t p) {
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      if (e > 0) add_factor(acc, from_uint64(p), e);
    };
    strip(2);
    strip(3);
    // 6k +- 1 wheel
    for (std::uint64_t p = 5; p < kTrialBound && p * p <= m; p += 6) {
      strip(p);
      strip(p + 2);
    }
    return from_uint64(m);
  }
  Integer m = n;
  for (std::uint64_t p = 2; p < kTrialBound; p += (p == 2 ? 1 : 2)) {
    Integer pp = from_uint64(p);
    if (pp * pp > m) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) add_factor(acc, pp, e);
  }
  return m;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Integer pollard_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1, q = 1, ys;
    auto step = [&](const Integer& v) {
      Integer r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    unsigned long r = 1;
    constexpr unsigned long m = 128;
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          Integer diff = x - y;
          q = q * abs(diff) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && d == 1);
      r *= 2;
    } while (d == 1);
    if (d == n) {
      do {
        ys = step(ys);
        Integer diff = x - ys;
        Integer a = abs(diff);
        mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_large(const Integer& n, std::map<Integer, unsigned>& acc) {
  if (n == 1) return;
  if (n < Integer(kTrialBound) * Integer(kTrialBound) || is_prime(n)) {
    add_factor(acc, n, 1);
    return;
  }
  Integer d = pollard_rho(n);
  factor_large(d, acc);
  factor_large(n / d, acc);
}

bool miller_rabin(const Integer& n, unsigned long base) {
  Integer d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  Integer x;
  Integer a = base;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

Integer FactoredInteger::divisor_count() const {
  Integer count = 1;
  for (const auto& pe : factors) count *= pe.exponent + 1;
  return count;
}

Integer FactoredInteger::squarefree_part() const {
  Integer s = 1;
  for (const auto& pe : factors) {
    if (pe.exponent % 2 == 1) s *= pe.prime;
  }
  return s;
}

FactoredInteger multiply(const FactoredInteger& lhs, const FactoredInteger& rhs) {
  std::map<Integer, unsigned> acc;
  for (const auto& pe : lhs.factors) acc[pe.prime] += pe.exponent;
  for (const auto& pe : rhs.factors) acc[pe.prime] += pe.exponent;
  FactoredInteger out;
  out.n = lhs.n * rhs.n;
  for (const auto& [p, e] : acc) out.factors.push_back({p, e});
  return out;
}

FactoredInteger factor(const Integer& n) {
  if (n < 1) throw std::invalid_argument("factor: n must be positive, got " + n.get_str());
  std::map<Integer, unsigned> acc;
  Integer rest = trial_divide(n, acc);
  factor_large(rest, acc);
  FactoredInteger out;
  out.n = n;
  for (const auto& [p, e] : acc) out.factors.push_back({p, e});
  return out;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned long, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long p : kBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return false;
  }
  static const Integer kDeterministicBound("3317044064679887385961981");
  if (n >= kDeterministicBound) return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
  return std::all_of(kBases.begin(), kBases.end(), [&](unsigned long b) { return miller_rabin(n, b); });
}

std::vector<Integer> divisors(const FactoredInteger& n) {
  std::vector<Integer> out{1};
  for (const auto& pe : n.factors) {
    const std::size_t base = out.size();
    Integer power = 1;
    for (unsigned e = 1; e <= pe.exponent; ++e) {
      power *= pe.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> divisors(const Integer& n) { return divisors(factor(n)); }

Integer euler_phi(const FactoredInteger& n) {
  Integer phi = 1;
  for (const auto& pe : n.factors) {
    Integer pk;
    mpz_pow_ui(pk.get_mpz_t(), pe.prime.get_mpz_t(), pe.exponent - 1);
    phi *= pk * (pe.prime - 1);
  }
  return phi;
}

Integer euler_phi(const Integer& n) { return euler_phi(factor(n)); }

int kronecker(const Integer& a, const Integer& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

SquarefreeDecomposition squarefree_decompose(const FactoredInteger& n) {
  SquarefreeDecomposition out{1, 1};
  for (const auto& pe : n.factors) {
    if (pe.exponent % 2 == 1) out.squarefree *= pe.prime;
    Integer g;
    mpz_pow_ui(g.get_mpz_t(), pe.prime.get_mpz_t(), pe.exponent / 2);
    out.cofactor *= g;
  }
  return out;
}

SquarefreeDecomposition squarefree_decompose(const Integer& n) { return squarefree_decompose(factor(n)); }

namespace {

void check_discriminant(const Integer& disc) {
  if (disc <= 0) throw std::invalid_argument("discriminant must be positive, got " + disc.get_str());
  const Integer r = mod_floor(disc, 4);
  if (r != 0 && r != 1) throw std::invalid_argument("discriminant must be 0 or 1 mod 4, got " + disc.get_str());
  if (is_perfect_square(disc)) throw std::invalid_argument("discriminant is a perfect square: " + disc.get_str());
}

FundamentalDecomposition from_squarefree(const SquarefreeDecomposition& sq) {
  if (mod_floor(sq.squarefree, 4) == 1) return {sq.squarefree, sq.cofactor};
  return {4 * sq.squarefree, div_exact(sq.cofactor, 2)};
}

}  // namespace

FundamentalDecomposition fundamental_discriminant_decompose(const Integer& disc) {
  check_discriminant(disc);
  return from_squarefree(squarefree_decompose(disc));
}

FundamentalDecomposition fundamental_discriminant_decompose(const FactoredInteger& disc) {
  check_discriminant(disc.n);
  return from_squarefree(squarefree_decompose(disc));
}

bool is_fundamental_discriminant(const Integer& disc) {
  if (disc == 0 || disc == 1) return false;
  const Integer r = mod_floor(disc, 4);
  auto squarefree = [](const Integer& m) {
    const Integer am = abs(m);
    return squarefree_decompose(am).cofactor == 1;
  };
  if (r == 1) return squarefree(disc);
  if (r != 0) return false;
  const Integer m = disc / 4;
  const Integer mr = mod_floor(m, 4);
  return (mr == 2 || mr == 3) && squarefree(m);
}

bool is_perfect_square(const Integer& n) { return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw std::invalid_argument("isqrt of negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  if (m == 0) throw std::domain_error("modulus is zero");
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer div_floor(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer div_exact(const Integer& a, const Integer& b) {
  if (!divides(b, a)) throw std::domain_error(b.get_str() + " does not divide " + a.get_str());
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(const Integer& d, const Integer& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

bool fits_int64(const Integer& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 63; }

std::int64_t to_int64(const Integer& n) {
  if (!fits_int64(n)) throw std::overflow_error("integer does not fit in 64 bits: " + n.get_str());
  const std::uint64_t mag = to_uint64(abs(n));
  return sgn(n) < 0 ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
}

}  // namespace quadclass
