#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "quadclass/arith.hpp"

using namespace quadclass;

namespace {

std::vector<std::pair<long, unsigned>> as_pairs(const FactoredInteger& f) {
  std::vector<std::pair<long, unsigned>> out;
  for (const auto& pe : f.factors) out.emplace_back(pe.prime.get_si(), pe.exponent);
  return out;
}

}  // namespace

TEST(Factor, Examples) {
  EXPECT_TRUE(factor(1).factors.empty());
  EXPECT_EQ(as_pairs(factor(2112)), (std::vector<std::pair<long, unsigned>>{{2, 6}, {3, 1}, {11, 1}}));
  EXPECT_EQ(as_pairs(factor(45)), (std::vector<std::pair<long, unsigned>>{{3, 2}, {5, 1}}));
  EXPECT_THROW(factor(0), std::invalid_argument);
  EXPECT_THROW(factor(-6), std::invalid_argument);
}

TEST(Factor, AgreesWithTrialDivision) {
  for (long n = 1; n <= 20000; ++n) {
    const auto got = as_pairs(factor(n));
    const auto want = oracle::trial_factor(n);
    ASSERT_EQ(got.size(), want.size()) << n;
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].first, want[i].first) << n;
      EXPECT_EQ(static_cast<int>(got[i].second), want[i].second) << n;
    }
  }
}

TEST(Factor, InvariantsOnLargeInputs) {
  gmp_randclass gen(gmp_randinit_default);
  gen.seed(11);
  for (int i = 0; i < 40; ++i) {
    const Integer n = gen.get_z_bits(90) + 1;
    const FactoredInteger f = factor(n);
    Integer product = 1;
    Integer previous = 1;
    for (const auto& pe : f.factors) {
      EXPECT_TRUE(is_prime(pe.prime));
      EXPECT_GT(pe.prime, previous);
      previous = pe.prime;
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), pe.prime.get_mpz_t(), pe.exponent);
      product *= power;
    }
    EXPECT_EQ(product, n);
    EXPECT_EQ(f.n, n);
  }
}

TEST(IsPrime, SmallRangeAgainstTrialDivision) {
  for (long n = -5; n < 5000; ++n) {
    const bool want = n >= 2 && oracle::trial_factor(n).size() == 1 && oracle::trial_factor(n)[0].second == 1;
    EXPECT_EQ(is_prime(n), want) << n;
  }
}

TEST(IsPrime, StrongPseudoprimes) {
  // Strong pseudoprimes to several small bases.
  EXPECT_FALSE(is_prime(Integer("3215031751")));
  EXPECT_FALSE(is_prime(Integer("3825123056546413051")));
  EXPECT_FALSE(is_prime(Integer("318665857834031151167461")));
  EXPECT_TRUE(is_prime(Integer("18446744073709551557")));
  EXPECT_TRUE(is_prime(Integer("170141183460469231731687303715884105727")));
}

TEST(Divisors, Examples) {
  EXPECT_EQ(divisors(Integer(1)), std::vector<Integer>{1});
  EXPECT_EQ(divisors(Integer(12)), (std::vector<Integer>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(Integer(8)), (std::vector<Integer>{1, 2, 4, 8}));
}

TEST(Divisors, CountMatchesSigma0) {
  for (long n = 1; n <= 3000; ++n) {
    const auto divs = divisors(Integer(n));
    const FactoredInteger f = factor(n);
    EXPECT_EQ(Integer(divs.size()), f.divisor_count()) << n;
    long brute = 0;
    for (long k = 1; k <= n; ++k) brute += n % k == 0;
    EXPECT_EQ(static_cast<long>(divs.size()), brute) << n;
    EXPECT_TRUE(std::is_sorted(divs.begin(), divs.end()));
  }
}

TEST(EulerPhi, Examples) {
  EXPECT_EQ(euler_phi(Integer(1)), 1);
  EXPECT_EQ(euler_phi(Integer(3)), 2);
  EXPECT_EQ(euler_phi(Integer(12)), 4);
}

TEST(EulerPhi, AgreesWithResidueCount) {
  for (long n = 1; n <= 1500; ++n) EXPECT_EQ(euler_phi(Integer(n)), oracle::totient_count(n)) << n;
}

TEST(Kronecker, Examples) {
  EXPECT_EQ(kronecker(5, 2), -1);
  EXPECT_EQ(kronecker(13, 3), 1);
  EXPECT_EQ(kronecker(33, 47), -1);
  EXPECT_EQ(kronecker(1, 2), 1);
  EXPECT_EQ(kronecker(3, 2), -1);
  EXPECT_EQ(kronecker(7, 2), 1);
  EXPECT_EQ(kronecker(4, 2), 0);
  EXPECT_EQ(kronecker(-1, -1), -1);
  EXPECT_EQ(kronecker(5, 1), 1);
}

TEST(Kronecker, AgreesWithEulerCriterionForOddPrimes) {
  for (long p = 3; p < 1000; p += 2) {
    if (oracle::trial_factor(p).size() != 1 || oracle::trial_factor(p)[0].second != 1) continue;
    for (long a = -999; a < 1000; ++a) {
      ASSERT_EQ(kronecker(a, p), oracle::legendre_euler(a, p)) << a << " " << p;
    }
  }
}

TEST(Kronecker, MultiplicativeInDenominator) {
  for (long a = -60; a <= 60; ++a) {
    for (long m = 1; m <= 60; ++m) {
      for (long n = 1; n <= 60; n += 7) {
        EXPECT_EQ(kronecker(a, m * n), kronecker(a, m) * kronecker(a, n)) << a << " " << m << " " << n;
      }
    }
  }
}

TEST(SquarefreeDecompose, Examples) {
  auto check = [](long n, long s, long g) {
    const auto r = squarefree_decompose(Integer(n));
    EXPECT_EQ(r.squarefree, s) << n;
    EXPECT_EQ(r.cofactor, g) << n;
  };
  check(1, 1, 1);
  check(2112, 33, 8);
  check(45, 5, 3);
}

TEST(FundamentalDecompose, Examples) {
  auto check = [](long disc, long d0, long f) {
    const auto r = fundamental_discriminant_decompose(Integer(disc));
    EXPECT_EQ(r.fundamental, d0) << disc;
    EXPECT_EQ(r.conductor, f) << disc;
  };
  check(12, 12, 1);
  check(2112, 33, 8);
  check(45, 5, 3);
  EXPECT_THROW(fundamental_discriminant_decompose(Integer(16)), std::invalid_argument);
  EXPECT_THROW(fundamental_discriminant_decompose(Integer(0)), std::invalid_argument);
  EXPECT_THROW(fundamental_discriminant_decompose(Integer(-3)), std::invalid_argument);
  EXPECT_THROW(fundamental_discriminant_decompose(Integer(7)), std::invalid_argument);
}

TEST(FundamentalDecompose, InvariantsForAllSmallDiscriminants) {
  for (long disc = 5; disc <= 20000; ++disc) {
    if (disc % 4 != 0 && disc % 4 != 1) continue;
    if (is_perfect_square(disc)) continue;
    const auto [d0, f] = fundamental_discriminant_decompose(Integer(disc));
    EXPECT_EQ(f * f * d0, disc);
    EXPECT_TRUE(oracle::fundamental(d0.get_si())) << disc << " -> " << d0;
    EXPECT_NE(mod_floor(d0, 16), 0);
    EXPECT_EQ(is_fundamental_discriminant(d0), true);
    EXPECT_EQ(is_fundamental_discriminant(disc), oracle::fundamental(disc)) << disc;
  }
}

TEST(IntegerHelpers, FloorSemantics) {
  EXPECT_EQ(mod_floor(-7, 3), 2);
  EXPECT_EQ(div_floor(-7, 2), -4);
  EXPECT_EQ(div_exact(-12, 4), -3);
  EXPECT_THROW(div_exact(7, 2), std::exception);
  EXPECT_EQ(isqrt(Integer("1000000000000000000000000")), Integer("1000000000000"));
  EXPECT_TRUE(is_perfect_square(0));
  EXPECT_FALSE(is_perfect_square(-4));
  EXPECT_TRUE(fits_int64(Integer("9223372036854775807")));
  EXPECT_FALSE(fits_int64(Integer("9223372036854775808")));
  EXPECT_THROW(to_int64(Integer("9223372036854775808")), std::overflow_error);
}
