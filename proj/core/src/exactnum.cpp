#include "at4kit/exactnum.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace at4kit::exactnum {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

bool fits_u64(const Integer& n)
{
  return n >= 0 && n <= Integer(std::numeric_limits<u64>::max());
}

u64 mulmod(u64 a, u64 b, u64 m)
{
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m)
{
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U)
      result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Deterministic for all 64-bit inputs with this base set.
bool miller_rabin(u64 n)
{
  if (n < 2)
    return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0)
      return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

u64 gcd_u64(u64 a, u64 b)
{
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// Nontrivial factor of an odd composite n.
u64 rho_u64(u64 n)
{
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 v) { return static_cast<u64>((static_cast<u128>(v) * v + c) % n); };
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      const u64 xs = x, ys = y;
      u64 q = 1;
      for (int i = 0; i < 64; ++i) {
        x = f(x);
        y = f(f(y));
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      d = gcd_u64(q, n);
      if (d == n) {
        x = xs;
        y = ys;
        do {
          x = f(x);
          y = f(f(y));
          d = gcd_u64(x > y ? x - y : y - x, n);
        } while (d == 1);
      }
    }
    if (d != n)
      return d;
  }
}

void split_u64(u64 n, std::vector<Integer>& primes)
{
  if (n == 1)
    return;
  if (miller_rabin(n)) {
    primes.emplace_back(n);
    return;
  }
  const u64 d = rho_u64(n);
  split_u64(d, primes);
  split_u64(n / d, primes);
}

bool probable_prime_big(const Integer& n)
{
  return boost::multiprecision::miller_rabin_test(n, 40);
}

Integer rho_big(const Integer& n)
{
  for (unsigned c = 1;; ++c) {
    auto f = [&](const Integer& v) { return (v * v + c) % n; };
    Integer x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = gcd(x > y ? Integer(x - y) : Integer(y - x), n);
    }
    if (d != n)
      return d;
  }
}

void split_big(const Integer& n, std::vector<Integer>& primes)
{
  if (fits_u64(n)) {
    split_u64(static_cast<u64>(n), primes);
    return;
  }
  if (probable_prime_big(n)) {
    primes.push_back(n);
    return;
  }
  const Integer d = rho_big(n);
  split_big(d, primes);
  split_big(n / d, primes);
}

Factorization collect(std::vector<Integer> primes)
{
  std::sort(primes.begin(), primes.end());
  Factorization out;
  for (const auto& q : primes) {
    if (!out.empty() && out.back().prime == q)
      ++out.back().exponent;
    else
      out.push_back({q, 1});
  }
  return out;
}

Factorization factorize_any(Integer m)
{
  std::vector<Integer> primes;
  for (unsigned d = 2; d < 1000 && m > 1; ++d) {
    while (m % d == 0) {
      primes.emplace_back(d);
      m /= d;
    }
  }
  split_big(m, primes);
  return collect(std::move(primes));
}

}  // namespace

PrimeSet::PrimeSet(std::initializer_list<Integer> primes)
    : PrimeSet(std::vector<Integer>(primes))
{
}

PrimeSet::PrimeSet(std::vector<Integer> primes)
    : primes_(std::move(primes))
{
  for (const auto& q : primes_) {
    if (!is_prime(q))
      throw std::invalid_argument("PrimeSet: " + q.str() + " is not prime");
  }
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool PrimeSet::contains(const Integer& q) const
{
  return std::binary_search(primes_.begin(), primes_.end(), q);
}

bool PrimeSet::is_subset_of(const PrimeSet& other) const
{
  return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(), primes_.end());
}

bool PrimeSet::intersects(const PrimeSet& other) const
{
  return std::any_of(primes_.begin(), primes_.end(), [&](const Integer& q) { return other.contains(q); });
}

PrimeSet PrimeSet::united(const PrimeSet& other) const
{
  PrimeSet out;
  std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                 std::back_inserter(out.primes_));
  return out;
}

std::string PrimeSet::to_string() const
{
  std::string s = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i > 0)
      s += ",";
    s += primes_[i].str();
  }
  return s + "}";
}

bool is_prime(const Integer& n)
{
  if (n < 2)
    return false;
  if (fits_u64(n))
    return miller_rabin(static_cast<u64>(n));
  return probable_prime_big(n);
}

Factorization factorize(const Integer& n)
{
  if (n <= 0)
    throw std::invalid_argument("factorize: n must be positive, got " + n.str());
  return factorize_any(n);
}

PrimeSet prime_set(const Integer& n)
{
  std::vector<Integer> primes;
  for (auto& f : factorize(n))
    primes.push_back(f.prime);
  return PrimeSet(std::move(primes));
}

std::optional<PrimePower> prime_power_base(const Integer& n)
{
  if (n < 2)
    throw std::invalid_argument("prime_power_base: n must be >= 2, got " + n.str());
  auto f = factorize(n);
  if (f.size() != 1)
    return std::nullopt;
  return f.front();
}

bool is_prime_power(const Integer& n)
{
  return n >= 2 && prime_power_base(n).has_value();
}

std::optional<Integer> exact_sqrt(const Integer& n)
{
  if (n < 0)
    throw std::invalid_argument("exact_sqrt: negative argument " + n.str());
  Integer root = boost::multiprecision::sqrt(n);
  if (root * root != n)
    return std::nullopt;
  return root;
}

Integer gl_order(unsigned e, const Integer& t)
{
  if (e == 0)
    throw std::invalid_argument("gl_order: e must be >= 1");
  if (!is_prime(t))
    throw std::invalid_argument("gl_order: t must be prime, got " + t.str());
  Integer te = boost::multiprecision::pow(t, e);
  Integer ti = 1;
  Integer order = 1;
  for (unsigned i = 0; i < e; ++i) {
    order *= te - ti;
    ti *= t;
  }
  return order;
}

Integer gl_order_mod(unsigned e, const Integer& t, const Integer& m)
{
  if (e == 0)
    throw std::invalid_argument("gl_order_mod: e must be >= 1");
  if (m < 1)
    throw std::invalid_argument("gl_order_mod: modulus must be positive");
  Integer te = boost::multiprecision::powm(t, Integer(e), m);
  Integer ti = 1 % m;
  Integer acc = 1 % m;
  for (unsigned i = 0; i < e; ++i) {
    acc = floor_mod(acc * (te - ti), m);
    ti = (ti * t) % m;
  }
  return acc;
}

Integer mult_order(const Integer& t, const Integer& s)
{
  if (s < 2)
    throw std::invalid_argument("mult_order: modulus must be >= 2, got " + s.str());
  Integer base = floor_mod(t, s);
  if (gcd(base, s) != 1)
    throw std::invalid_argument("mult_order: gcd(" + t.str() + ", " + s.str() + ") != 1");

  // Euler phi from the factorization of s, then strip prime factors.
  Integer phi = 1;
  for (auto& [q, e] : factorize(s))
    phi *= boost::multiprecision::pow(q, e - 1) * (q - 1);

  Integer order = phi;
  for (auto& [q, e] : factorize(phi)) {
    for (unsigned i = 0; i < e; ++i) {
      if (boost::multiprecision::powm(base, order / q, s) != 1)
        break;
      order /= q;
    }
  }
  return order;
}

std::vector<Integer> divisors(const Integer& n)
{
  std::vector<Integer> out{1};
  for (auto& [q, e] : factorize(n)) {
    std::size_t current = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= q;
      for (std::size_t i = 0; i < current; ++i)
        out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PrimeSet primes_up_to(const Integer& n)
{
  if (n < 2)
    return {};
  auto limit = static_cast<std::size_t>(to_int64(n));
  std::vector<bool> composite(limit + 1, false);
  std::vector<Integer> primes;
  for (std::size_t i = 2; i <= limit; ++i) {
    if (composite[i])
      continue;
    primes.emplace_back(i);
    for (std::size_t j = i * i; j <= limit; j += i)
      composite[j] = true;
  }
  return PrimeSet(std::move(primes));
}

Integer floor_mod(const Integer& a, const Integer& m)
{
  if (m <= 0)
    throw std::invalid_argument("floor_mod: modulus must be positive");
  Integer r = a % m;
  if (r < 0)
    r += m;
  return r;
}

bool divides(const Integer& d, const Integer& n)
{
  if (d == 0)
    return n == 0;
  return n % d == 0;
}

bool is_integral(const Rational& q)
{
  return boost::multiprecision::denominator(q) == 1;
}

Integer to_integer(const Rational& q)
{
  if (!is_integral(q))
    throw std::domain_error("to_integer: " + to_string(q) + " is not an integer");
  return boost::multiprecision::numerator(q);
}

std::string to_string(const Rational& q)
{
  if (is_integral(q))
    return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::int64_t to_int64(const Integer& n)
{
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("to_int64: " + n.str() + " out of range");
  return static_cast<std::int64_t>(n);
}

}  // namespace at4kit::exactnum
