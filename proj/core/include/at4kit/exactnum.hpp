#ifndef AT4KIT_EXACTNUM_HPP
#define AT4KIT_EXACTNUM_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace at4kit {

/// Arbitrary-precision signed integer. Every scalar in the library lives here.
using Integer = boost::multiprecision::cpp_int;

/// Reduced fraction with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

namespace exactnum {

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

/// Sorted, duplicate-free set of primes.
class PrimeSet {
 public:
  PrimeSet() = default;
  /// Throws std::invalid_argument if any member is not prime.
  PrimeSet(std::initializer_list<Integer> primes);
  explicit PrimeSet(std::vector<Integer> primes);

  bool contains(const Integer& q) const;
  bool is_subset_of(const PrimeSet& other) const;
  bool intersects(const PrimeSet& other) const;
  PrimeSet united(const PrimeSet& other) const;

  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }
  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }
  const std::vector<Integer>& values() const { return primes_; }

  std::string to_string() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<Integer> primes_;
};

/// Deterministic Miller-Rabin below 2^64; 40 random rounds above.
bool is_prime(const Integer& n);

/// Primes in increasing order. Trial division then Pollard rho.
/// Throws std::invalid_argument for n <= 0.
Factorization factorize(const Integer& n);

PrimeSet prime_set(const Integer& n);

/// (t, e) with t^e = n when n is a prime power; n >= 2 required.
std::optional<PrimePower> prime_power_base(const Integer& n);

bool is_prime_power(const Integer& n);

/// Throws std::invalid_argument for n < 0.
std::optional<Integer> exact_sqrt(const Integer& n);

/// |GL_e(t)| = prod_{i=0}^{e-1} (t^e - t^i).
Integer gl_order(unsigned e, const Integer& t);

/// |GL_e(t)| mod m, without forming the full product.
Integer gl_order_mod(unsigned e, const Integer& t, const Integer& m);

/// Least e >= 1 with t^e = 1 (mod s). Throws if gcd(t, s) != 1 or s < 2.
Integer mult_order(const Integer& t, const Integer& s);

/// Positive divisors in increasing order.
std::vector<Integer> divisors(const Integer& n);

/// All primes <= n.
PrimeSet primes_up_to(const Integer& n);

Integer floor_mod(const Integer& a, const Integer& m);

bool divides(const Integer& d, const Integer& n);

bool is_integral(const Rational& q);

/// Throws std::domain_error when q is not an integer.
Integer to_integer(const Rational& q);

std::string to_string(const Rational& q);

/// Narrowing for loop bounds and container sizes; throws std::overflow_error.
std::int64_t to_int64(const Integer& n);

}  // namespace exactnum
}  // namespace at4kit

#endif  // AT4KIT_EXACTNUM_HPP
