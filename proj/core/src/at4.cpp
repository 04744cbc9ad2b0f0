#include "at4kit/at4.hpp"

#include <stdexcept>

namespace at4kit::at4 {

using exactnum::divides;
using exactnum::is_integral;
using exactnum::to_integer;

IntersectionArray::IntersectionArray(std::vector<Integer> b, std::vector<Integer> c)
    : b_(std::move(b)), c_(std::move(c))
{
  if (b_.empty() || b_.size() != c_.size())
    throw std::invalid_argument("IntersectionArray: b and c must have the same nonzero length");
}

Integer IntersectionArray::b(std::size_t i) const
{
  if (i > diameter())
    throw std::out_of_range("IntersectionArray::b");
  return i == diameter() ? Integer(0) : b_[i];
}

Integer IntersectionArray::c(std::size_t i) const
{
  if (i > diameter())
    throw std::out_of_range("IntersectionArray::c");
  return i == 0 ? Integer(0) : c_[i - 1];
}

Integer IntersectionArray::a(std::size_t i) const
{
  return b(0) - b(i) - c(i);
}

Rational IntersectionArray::k(std::size_t i) const
{
  if (i > diameter())
    throw std::out_of_range("IntersectionArray::k");
  Rational ki = 1;
  for (std::size_t j = 0; j < i; ++j)
    ki = ki * Rational(b(j)) / Rational(c(j + 1));
  return ki;
}

Rational IntersectionArray::vertex_count() const
{
  Rational total = 0;
  for (std::size_t i = 0; i <= diameter(); ++i)
    total += k(i);
  return total;
}

bool IntersectionArray::well_formed() const
{
  for (std::size_t i = 0; i < diameter(); ++i) {
    if (b_[i] <= 0 || c_[i] <= 0)
      return false;
  }
  for (std::size_t i = 0; i <= diameter(); ++i) {
    if (a(i) < 0 || !is_integral(k(i)))
      return false;
  }
  return true;
}

std::string IntersectionArray::to_string() const
{
  std::string s = "{";
  for (std::size_t i = 0; i < b_.size(); ++i)
    s += (i ? "," : "") + b_[i].str();
  s += ";";
  for (std::size_t i = 0; i < c_.size(); ++i)
    s += (i ? "," : "") + c_[i].str();
  return s + "}";
}

std::string At4Params::violation(const Integer& p, const Integer& r)
{
  if (p < 2)
    return "p must be >= 2";
  if (r <= 2 || r >= p + 2)
    return "r must satisfy 2 < r < p+2";
  if (!divides(r, 2 * (p + 1)))
    return "r must divide 2(p+1)";
  if ((2 * p * (p + 1) * (p + 2) / r) % 2 != 0)
    return "2p(p+1)(p+2)/r must be even";
  return {};
}

At4Params::At4Params(Integer p, Integer r)
    : p_(std::move(p)), r_(std::move(r))
{
  if (auto why = violation(p_, r_); !why.empty())
    throw std::invalid_argument("At4Params(" + p_.str() + ", " + r_.str() + "): " + why);
}

std::vector<Integer> feasible_r(const Integer& p)
{
  if (p < 2)
    throw std::invalid_argument("feasible_r: p must be >= 2");
  std::vector<Integer> out;
  for (Integer r = 3; r < p + 2; ++r) {
    if (At4Params::violation(p, r).empty())
      out.push_back(r);
  }
  return out;
}

IntersectionArray intersection_array(const At4Params& params)
{
  const auto& p = params.p();
  const auto& r = params.r();
  Integer b0 = (p + 2) * (p * p + 4 * p + 2);
  Integer b1 = (p + 3) * (p + 1) * (p + 1);
  Integer c2 = 2 * (p + 1) * (p + 2) / r;
  Integer b2 = (r - 1) * c2;
  return IntersectionArray({b0, b1, b2, 1}, {1, c2, b1, b0});
}

AntipodalCheck antipodal_check(const IntersectionArray& array)
{
  if (array.diameter() != 4)
    throw std::invalid_argument("antipodal_check: diameter 4 required, got " + std::to_string(array.diameter()));
  AntipodalCheck out;
  out.antipodal = array.b(0) == array.c(4) && array.b(1) == array.c(3) && array.b(3) == array.c(1);
  out.r = 1 + Rational(array.b(2), array.c(2));
  return out;
}

SrgWithEigenvalues quotient_params(const Integer& p)
{
  if (p < 2)
    throw std::invalid_argument("quotient_params: p must be >= 2");
  Integer twice_v = (p + 1) * (p + 1) * (p + 4) * (p + 4);
  if (twice_v % 2 != 0)
    throw std::logic_error("quotient_params: non-integral vertex count at p = " + p.str());
  SrgWithEigenvalues out{{twice_v / 2, (p + 2) * (p * p + 4 * p + 2), p * (p + 3), 2 * (p + 1) * (p + 2)},
                         p,
                         -(p * p + 4 * p + 4)};
  auto spec = srg::srg_spectrum(out.params);
  if (!spec.integral() || spec.theta_plus != out.theta_plus || spec.theta_minus != out.theta_minus)
    throw std::logic_error("quotient_params: spectrum disagrees with stated eigenvalues at p = " + p.str());
  return out;
}

SrgWithEigenvalues second_subconstituent_quotient(const Integer& p)
{
  if (p < 2)
    throw std::invalid_argument("second_subconstituent_quotient: p must be >= 2");
  SrgWithEigenvalues out{
      {(p + 1) * (p + 3) * (p * p + 4 * p + 2) / 2, p * (p + 2) * (p + 2), p * p + p - 2, 2 * p * (p + 1)},
      p,
      -(p * p + 2 * p + 2)};
  auto spec = srg::srg_spectrum(out.params);
  if (!spec.integral() || spec.theta_plus != out.theta_plus || spec.theta_minus != out.theta_minus)
    throw std::logic_error("second_subconstituent_quotient: spectrum disagrees at p = " + p.str());
  return out;
}

IntersectionArray second_subconstituent_array(const At4Params& params)
{
  const auto& p = params.p();
  const auto& r = params.r();
  Integer b0 = p * (p + 2) * (p + 2);
  Integer b1 = (p + 1) * (p + 1) * (p + 1);
  Integer c2 = 2 * p * (p + 1) / r;
  Integer b2 = (r - 1) * c2;
  return IntersectionArray({b0, b1, b2, 1}, {1, c2, b1, b0});
}

std::string to_string(BoundVerdict v)
{
  switch (v) {
  case BoundVerdict::strict:
    return "strict";
  case BoundVerdict::equality:
    return "equality";
  case BoundVerdict::violated:
    return "violated";
  }
  return "unknown";
}

FundamentalBound fundamental_bound_check(const Integer& b0, const Integer& a1, const Integer& b1, const Rational& theta1,
                                         const Rational& theta4)
{
  if (a1 < 0)
    throw std::invalid_argument("fundamental_bound_check: a1 must be non-negative");
  Rational shift(b0, a1 + 1);
  FundamentalBound out;
  out.lhs = (theta1 + shift) * (theta4 + shift);
  out.rhs = -Rational(b0 * a1 * b1, (a1 + 1) * (a1 + 1));
  if (out.lhs == out.rhs)
    out.verdict = BoundVerdict::equality;
  else if (out.lhs > out.rhs)
    out.verdict = BoundVerdict::strict;
  else
    out.verdict = BoundVerdict::violated;
  return out;
}

LocalEigenvalues local_eigen_from_array(const Integer& b1, const Rational& theta1, const Rational& theta4)
{
  if (theta1 == -1 || theta4 == -1)
    throw std::invalid_argument("local_eigen_from_array: eigenvalue -1 makes the relation singular");
  LocalEigenvalues out;
  out.p = -1 - Rational(b1) / (1 + theta4);
  out.q = 1 + Rational(b1) / (1 + theta1);
  out.degenerate = b1 == 0;
  return out;
}

std::pair<Rational, Rational> tight_eigenvalues(const Integer& p, const Integer& b1)
{
  Rational step(b1, p + 1);
  return {-1 + step, -1 - step};
}

Integer triple_constant(const At4Params& params)
{
  Integer value = 2 * (params.p() + 1) / params.r();
  auto array = intersection_array(params);
  Rational from_array = Rational(array.c(2) * (array.a(1) - params.p()), array.a(2));
  if (from_array != Rational(value))
    throw std::logic_error("triple_constant: c2(a1-p)/a2 = " + exactnum::to_string(from_array) +
                           " disagrees with 2(p+1)/r = " + value.str());
  return value;
}

At4Derived derived(const At4Params& params)
{
  auto array = intersection_array(params);
  Rational v = Rational(params.r() * (array.b(0) + 1)) + Rational(array.b(0) * array.b(1), array.c(2));
  At4Derived out;
  out.v = to_integer(v);
  out.antipodal_classes = to_integer(v / Rational(params.r()));
  out.kernel_bound = params.r();
  out.triple_constant = triple_constant(params);
  return out;
}

Rational characteristic_value(const IntersectionArray& array, const Rational& theta)
{
  // u_{i+1} c_{i+1} = (theta - a_i) u_i - b_{i-1} u_{i-1}; the standard
  // sequence vanishes past d exactly when theta is an eigenvalue.
  const std::size_t d = array.diameter();
  Rational prev = 0;
  Rational cur = 1;
  for (std::size_t i = 0; i < d; ++i) {
    Rational next = ((theta - Rational(array.a(i))) * cur - (i ? Rational(array.b(i - 1)) * prev : Rational(0))) /
                    Rational(array.c(i + 1));
    prev = cur;
    cur = next;
  }
  return (theta - Rational(array.a(d))) * cur - Rational(array.b(d - 1)) * prev;
}

srg::SrgParams quotient_from_array(const IntersectionArray& array)
{
  auto check = antipodal_check(array);
  if (!check.antipodal || !is_integral(check.r))
    throw std::invalid_argument("quotient_from_array: array is not antipodal with integral r");
  Integer r = to_integer(check.r);
  Rational v = Rational(r * (array.b(0) + 1)) + Rational(array.b(0) * array.b(1), array.c(2));
  return {to_integer(v / Rational(r)), array.b(0), array.a(1), r * array.c(2)};
}

}  // namespace at4kit::at4
