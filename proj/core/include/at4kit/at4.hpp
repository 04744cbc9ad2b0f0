#ifndef AT4KIT_AT4_HPP
#define AT4KIT_AT4_HPP

#include "at4kit/exactnum.hpp"
#include "at4kit/srg.hpp"

#include <string>
#include <vector>

namespace at4kit::at4 {

/// Intersection array {b_0..b_{d-1}; c_1..c_d} of a distance-regular graph.
class IntersectionArray {
 public:
  IntersectionArray() = default;
  /// Throws std::invalid_argument unless b and c have equal nonzero length.
  IntersectionArray(std::vector<Integer> b, std::vector<Integer> c);

  std::size_t diameter() const { return b_.size(); }

  /// b_i for 0 <= i <= d, with b_d = 0.
  Integer b(std::size_t i) const;
  /// c_i for 0 <= i <= d, with c_0 = 0.
  Integer c(std::size_t i) const;
  /// a_i = b_0 - b_i - c_i.
  Integer a(std::size_t i) const;
  /// Size of the i-th distance layer; a Rational because it need not be
  /// integral for an arbitrary array.
  Rational k(std::size_t i) const;
  /// Sum of the layer sizes.
  Rational vertex_count() const;

  const std::vector<Integer>& bs() const { return b_; }
  const std::vector<Integer>& cs() const { return c_; }

  /// Positive entries, non-negative a_i, integral layer sizes.
  bool well_formed() const;

  std::string to_string() const;

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;

 private:
  std::vector<Integer> b_;
  std::vector<Integer> c_;
};

/// A candidate AT4(p, p+2, r).
class At4Params {
 public:
  /// Throws std::invalid_argument when (p, r) violates any admissibility
  /// condition: p >= 2, 2 < r < p+2, r | 2(p+1), 2p(p+1)(p+2)/r even.
  At4Params(Integer p, Integer r);

  const Integer& p() const { return p_; }
  const Integer& r() const { return r_; }
  Integer q() const { return p_ + 2; }

  /// Empty string when admissible, otherwise the first violated condition.
  static std::string violation(const Integer& p, const Integer& r);

 private:
  Integer p_;
  Integer r_;
};

struct At4Derived {
  Integer v;
  Integer antipodal_classes;
  /// |K| divides this.
  Integer kernel_bound;
  /// |G_1(x) n G_1(y) n G_1(z)| for d(x,y)=1, d(x,z)=d(y,z)=2.
  Integer triple_constant;
};

struct AntipodalCheck {
  bool antipodal = false;
  Rational r;
};

enum class BoundVerdict { strict, equality, violated };

std::string to_string(BoundVerdict v);

struct FundamentalBound {
  BoundVerdict verdict = BoundVerdict::violated;
  Rational lhs;
  Rational rhs;
};

struct LocalEigenvalues {
  Rational p;
  Rational q;
  bool degenerate = false;  // b_1 = 0
};

/// SRG parameters together with the eigenvalues stated for them.
struct SrgWithEigenvalues {
  srg::SrgParams params;
  Integer theta_plus;
  Integer theta_minus;
};

std::vector<Integer> feasible_r(const Integer& p);

IntersectionArray intersection_array(const At4Params& params);

/// b_i = c_{4-i} for i in {0, 1, 3}; r = 1 + b_2/c_2. Diameter 4 required.
AntipodalCheck antipodal_check(const IntersectionArray& array);

SrgWithEigenvalues quotient_params(const Integer& p);

SrgWithEigenvalues second_subconstituent_quotient(const Integer& p);

IntersectionArray second_subconstituent_array(const At4Params& params);

FundamentalBound fundamental_bound_check(const Integer& b0, const Integer& a1, const Integer& b1, const Rational& theta1,
                                         const Rational& theta4);

/// p = -1 - b1/(1 + theta4), q = 1 + b1/(1 + theta1).
LocalEigenvalues local_eigen_from_array(const Integer& b1, const Rational& theta1, const Rational& theta4);

/// theta_1 = -1 + b_1/(p+1), theta_4 = -1 - b_1/(p+1): the two defining
/// relations solved for the eigenvalues with q = p+2.
std::pair<Rational, Rational> tight_eigenvalues(const Integer& p, const Integer& b1);

/// 2(p+1)/r, cross-checked against c_2(a_1 - p)/a_2 from the array.
Integer triple_constant(const At4Params& params);

At4Derived derived(const At4Params& params);

/// Value of det(theta I - L) for the tridiagonal intersection matrix L,
/// via the three-term recurrence. Zero exactly for eigenvalues.
Rational characteristic_value(const IntersectionArray& array, const Rational& theta);

/// Antipodal quotient parameters read off an antipodal diameter-4 array:
/// (v/r, b_0, a_1, r c_2).
srg::SrgParams quotient_from_array(const IntersectionArray& array);

}  // namespace at4kit::at4

#endif  // AT4KIT_AT4_HPP
