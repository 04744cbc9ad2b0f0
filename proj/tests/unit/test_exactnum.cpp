#include "at4kit/exactnum.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <numeric>
#include <random>

using namespace at4kit;
using namespace at4kit::exactnum;

namespace {

bool trial_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

std::uint64_t brute_order(std::uint64_t t, std::uint64_t s)
{
  std::uint64_t x = t % s;
  for (std::uint64_t k = 1; k <= s; ++k) {
    if (x == 1)
      return k;
    x = x * (t % s) % s;
  }
  return 0;
}

// |GL(e, t)| by enumerating all e x e matrices over Z/t, e <= 3.
std::uint64_t brute_gl(unsigned e, std::int64_t t)
{
  const std::size_t cells = e * e;
  std::vector<std::int64_t> m(cells, 0);
  std::uint64_t count = 0;
  while (true) {
    std::int64_t det = 0;
    if (e == 1)
      det = m[0];
    else if (e == 2)
      det = m[0] * m[3] - m[1] * m[2];
    else
      det = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
            m[2] * (m[3] * m[7] - m[4] * m[6]);
    count += (((det % t) + t) % t) != 0;
    std::size_t k = 0;
    while (k < cells && ++m[k] == t)
      m[k++] = 0;
    if (k == cells)
      break;
  }
  return count;
}

}  // namespace

TEST(ExactNum, PrimalityMatchesTrialDivision)
{
  for (std::uint64_t n = 0; n < 20000; ++n)
    ASSERT_EQ(is_prime(Integer(n)), trial_prime(n)) << n;
}

TEST(ExactNum, PrimalityLargeKnownValues)
{
  EXPECT_TRUE(is_prime(Integer("2305843009213693951")));    // 2^61 - 1
  EXPECT_TRUE(is_prime(Integer("18446744073709551557")));   // largest prime below 2^64
  EXPECT_FALSE(is_prime(Integer("3215031751")));            // strong pseudoprime to bases 2,3,5,7
  EXPECT_FALSE(is_prime(Integer(561)));
  EXPECT_FALSE(is_prime(Integer(-7)));
  EXPECT_TRUE(is_prime(Integer("18446744073709551629")));   // smallest prime above 2^64
  EXPECT_FALSE(is_prime(Integer("18446744073709551617")));  // 2^64 + 1 = 274177 * 67280421310721
}

TEST(ExactNum, FactorizeReconstructsRandomInputs)
{
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::uint64_t> dist(1, 1000000000);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t n = dist(rng);
    auto f = factorize(Integer(n));
    Integer product = 1;
    Integer last = 0;
    for (const auto& [q, e] : f) {
      ASSERT_GT(q, last);
      ASSERT_TRUE(trial_prime(static_cast<std::uint64_t>(q)));
      ASSERT_GE(e, 1u);
      last = q;
      for (unsigned k = 0; k < e; ++k)
        product *= q;
    }
    ASSERT_EQ(product, Integer(n));
  }
}

TEST(ExactNum, FactorizeBeyond64Bits)
{
  const Integer p61("2305843009213693951");
  auto f = factorize(p61 * 6);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].prime, 2);
  EXPECT_EQ(f[1].prime, 3);
  EXPECT_EQ(f[2].prime, p61);
  auto g = factorize(Integer("18446744073709551617"));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].prime, 274177);
  EXPECT_EQ(g[1].prime, Integer("67280421310721"));
}

TEST(ExactNum, FactorizeRejectsNonPositive)
{
  EXPECT_THROW(factorize(Integer(0)), std::invalid_argument);
  EXPECT_THROW(factorize(Integer(-12)), std::invalid_argument);
  EXPECT_TRUE(factorize(Integer(1)).empty());
}

TEST(ExactNum, PrimeSetOfFamilyNumbers)
{
  EXPECT_EQ(prime_set(Integer(3220)), (PrimeSet{2, 5, 7, 23}));
  EXPECT_EQ(prime_set(Integer(1)), PrimeSet{});
  EXPECT_EQ(prime_set(Integer(3220)).to_string(), "{2,5,7,23}");
  EXPECT_THROW((PrimeSet{2, 4}), std::invalid_argument);
}

TEST(ExactNum, PrimeSetAlgebra)
{
  PrimeSet a{2, 3, 5};
  PrimeSet b{3, 7};
  EXPECT_EQ(a.united(b), (PrimeSet{2, 3, 5, 7}));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_TRUE((PrimeSet{3}).is_subset_of(b));
  EXPECT_TRUE(PrimeSet{}.is_subset_of(b));
  EXPECT_FALSE(PrimeSet{}.intersects(a));
  EXPECT_TRUE(b.contains(7));
  EXPECT_FALSE(b.contains(5));
}

TEST(ExactNum, PrimePowers)
{
  for (std::uint64_t n = 2; n < 5000; ++n) {
    // oracle: n has exactly one prime divisor
    std::uint64_t m = n, q = 0;
    for (std::uint64_t d = 2; d <= m; ++d) {
      if (m % d == 0) {
        q = d;
        break;
      }
    }
    while (m % q == 0)
      m /= q;
    const bool expected = (m == 1);
    ASSERT_EQ(is_prime_power(Integer(n)), expected) << n;
    if (expected) {
      auto pp = prime_power_base(Integer(n));
      ASSERT_TRUE(pp.has_value());
      ASSERT_EQ(pp->prime, q);
    }
  }
  auto pp = prime_power_base(Integer(27));
  ASSERT_TRUE(pp);
  EXPECT_EQ(pp->exponent, 3u);
  EXPECT_THROW(prime_power_base(Integer(1)), std::invalid_argument);
}

TEST(ExactNum, ExactSqrtPerfectSquaresAndNeighbours)
{
  for (std::int64_t d = 0; d <= 100000; ++d) {
    const Integer sq = Integer(d) * d;
    auto r = exact_sqrt(sq);
    ASSERT_TRUE(r.has_value());
    ASSERT_EQ(*r, d);
    if (d > 1) {
      ASSERT_FALSE(exact_sqrt(sq + 1).has_value()) << d;
      ASSERT_FALSE(exact_sqrt(sq - 1).has_value()) << d;
    }
  }
  const Integer big = Integer("123456789012345678901234567890");
  EXPECT_EQ(*exact_sqrt(big * big), big);
  EXPECT_FALSE(exact_sqrt(big * big + 1));
  EXPECT_THROW(exact_sqrt(Integer(-4)), std::invalid_argument);
}

TEST(ExactNum, MultOrderMatchesBruteForce)
{
  for (std::uint64_t s = 2; s < 400; ++s) {
    for (std::uint64_t t = 1; t < s; ++t) {
      if (std::gcd(t, s) != 1)
        continue;
      ASSERT_EQ(mult_order(Integer(t), Integer(s)), brute_order(t, s)) << t << " mod " << s;
    }
  }
  EXPECT_EQ(mult_order(Integer(13), Integer(167)), brute_order(13, 167));
  EXPECT_EQ(mult_order(Integer(13), Integer(167)), 166);
  EXPECT_EQ(mult_order(Integer(-1), Integer(23)), 2);
  EXPECT_THROW(mult_order(Integer(6), Integer(9)), std::invalid_argument);
  EXPECT_THROW(mult_order(Integer(1), Integer(1)), std::invalid_argument);
}

TEST(ExactNum, GeneralLinearGroupOrders)
{
  EXPECT_EQ(gl_order(2, Integer(2)), 6);
  EXPECT_EQ(gl_order(3, Integer(2)), 168);
  EXPECT_EQ(gl_order(2, Integer(3)), 48);
  for (unsigned e = 1; e <= 3; ++e) {
    for (std::uint64_t t : {2, 3, 5, 7}) {
      if (e < 3 || t <= 3)
        ASSERT_EQ(gl_order(e, Integer(t)), brute_gl(e, static_cast<std::int64_t>(t)));
      for (std::uint64_t m : {2, 3, 23, 47, 167, 1000003}) {
        ASSERT_EQ(gl_order_mod(e, Integer(t), Integer(m)), gl_order(e, Integer(t)) % m) << e << " " << t << " " << m;
      }
    }
  }
  EXPECT_THROW(gl_order(2, Integer(4)), std::invalid_argument);
  EXPECT_THROW(gl_order(0, Integer(2)), std::invalid_argument);
}

TEST(ExactNum, DivisorsMatchBruteForce)
{
  for (std::uint64_t n = 1; n < 2000; ++n) {
    std::vector<Integer> expected;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0)
        expected.emplace_back(d);
    }
    ASSERT_EQ(divisors(Integer(n)), expected) << n;
  }
}

TEST(ExactNum, PrimesUpTo)
{
  EXPECT_EQ(primes_up_to(Integer(23)), (PrimeSet{2, 3, 5, 7, 11, 13, 17, 19, 23}));
  EXPECT_TRUE(primes_up_to(Integer(1)).empty());
  std::size_t count = 0;
  for (std::uint64_t n = 0; n <= 10000; ++n)
    count += trial_prime(n);
  EXPECT_EQ(primes_up_to(Integer(10000)).size(), count);
}

TEST(ExactNum, ModularHelpers)
{
  EXPECT_EQ(floor_mod(Integer(-7), Integer(5)), 3);
  EXPECT_EQ(floor_mod(Integer(7), Integer(5)), 2);
  EXPECT_THROW(floor_mod(Integer(1), Integer(0)), std::invalid_argument);
  EXPECT_TRUE(divides(Integer(7), Integer(-315)));
  EXPECT_FALSE(divides(Integer(0), Integer(5)));
  EXPECT_TRUE(divides(Integer(0), Integer(0)));
}

TEST(ExactNum, RationalHelpers)
{
  Rational half(1, 2);
  EXPECT_FALSE(is_integral(half));
  EXPECT_TRUE(is_integral(half * 4));
  EXPECT_EQ(to_integer(half * 4), 2);
  EXPECT_THROW(to_integer(half), std::domain_error);
  EXPECT_EQ(to_string(Rational(-25200, 121)), "-25200/121");
  EXPECT_EQ(to_string(Rational(6, 3)), "2");
  EXPECT_EQ(to_int64(Integer(-5)), -5);
  EXPECT_THROW(to_int64(Integer("18446744073709551616")), std::overflow_error);
}
