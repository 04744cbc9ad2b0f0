#include "at4kit/srg.hpp"

#include <stdexcept>

namespace at4kit::srg {

using exactnum::exact_sqrt;
using exactnum::is_integral;

namespace {

void require_family_p(const Integer& p, const char* who)
{
  if (p < 2)
    throw std::invalid_argument(std::string(who) + ": p must be >= 2, got " + p.str());
}

}  // namespace

bool SrgParams::identity_holds() const
{
  return k * (k - lambda - 1) == (v - k - 1) * mu;
}

std::string SrgParams::to_string() const
{
  return "(" + v.str() + "," + k.str() + "," + lambda.str() + "," + mu.str() + ")";
}

SrgParams local_family_params(const Integer& p)
{
  require_family_p(p, "local_family_params");
  SrgParams params{(p + 2) * (p * p + 4 * p + 2), p * (p + 3), p - 2, p};
  if (!params.identity_holds())
    throw std::logic_error("local_family_params: identity fails at p = " + p.str());
  return params;
}

Integer family_mult_plus(const Integer& p)
{
  return (p + 3) * ((p + 2) * (p + 2) - 2) / 2;
}

Integer family_mult_minus(const Integer& p)
{
  return (p + 1) * ((p + 2) * (p + 2) - 2) / 2 - 1;
}

Spectrum srg_spectrum(const SrgParams& params)
{
  Spectrum out;
  out.principal = params.k;
  const auto& [v, k, lambda, mu] = params;

  if (!params.identity_holds()) {
    out.reason = "k(k-lambda-1) != (v-k-1)mu";
    return out;
  }
  if (v <= k + 1) {
    out.reason = "complete or empty graph has no second non-principal eigenvalue";
    return out;
  }

  Integer disc = (lambda - mu) * (lambda - mu) + 4 * (k - mu);
  // m_plus - m_minus = -(2k + (v-1)(lambda-mu)) / sqrt(disc)
  Integer skew = 2 * k + (v - 1) * (lambda - mu);

  if (auto root = exact_sqrt(disc); root && *root != 0) {
    out.theta_plus = Rational(lambda - mu + *root, 2);
    out.theta_minus = Rational(lambda - mu - *root, 2);
    out.mult_plus = (Rational(v - 1) - Rational(skew, *root)) / 2;
    out.mult_minus = (Rational(v - 1) + Rational(skew, *root)) / 2;
    if (!is_integral(out.mult_plus) || !is_integral(out.mult_minus)) {
      out.reason = "non-integral multiplicity";
      return out;
    }
    out.kind = SpectrumKind::integral;
    return out;
  }

  if (skew != 0) {
    out.reason = "irrational eigenvalues with unequal multiplicities";
    return out;
  }
  out.theta_plus = Rational(lambda - mu, 2);
  out.theta_minus = out.theta_plus;
  out.radicand = disc;
  out.mult_plus = Rational(v - 1, 2);
  out.mult_minus = out.mult_plus;
  if (!is_integral(out.mult_plus)) {
    out.reason = "non-integral multiplicity";
    return out;
  }
  out.kind = SpectrumKind::conference;
  return out;
}

EigenmatrixQ second_eigenmatrix(const Integer& p)
{
  require_family_p(p, "second_eigenmatrix");
  Integer q2 = (p + 2) * (p + 2);
  Integer s = q2 - 2;
  EigenmatrixQ Q;
  Q[0] = {Rational(1), Rational(1), Rational(1)};
  Q[1] = {Rational(family_mult_plus(p)), Rational(q2, 2) - 1, -Rational(s, 2 * (p + 1))};
  Q[2] = {Rational(family_mult_minus(p)), -Rational(q2, 2), Rational(p * (p + 2), 2 * (p + 1))};
  return Q;
}

Integer clique_bound(const Integer& p)
{
  require_family_p(p, "clique_bound");
  return (p + 2) * (p + 2);
}

Integer fixed_point_order_bound(const SrgParams& params)
{
  auto spec = srg_spectrum(params);
  if (!spec.integral())
    throw std::invalid_argument("fixed_point_order_bound: spectrum of " + params.to_string() + " is not integral");
  Rational denom = Rational(params.k) - spec.theta_plus;
  Rational bound = Rational(params.mu * params.v) / denom;
  return boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound);
}

Verdict feasibility_basic(const SrgParams& params)
{
  Verdict out;
  auto fail = [&](std::string why) {
    out.pass = false;
    out.reasons.push_back(std::move(why));
  };
  if (params.v < 0 || params.k < 0 || params.lambda < 0 || params.mu < 0)
    fail("negative parameter");
  if (params.v <= params.k)
    fail("v <= k");
  if (!params.identity_holds()) {
    fail("identity k(k-lambda-1) = (v-k-1)mu fails: " + Integer(params.k * (params.k - params.lambda - 1)).str() +
         " != " + Integer((params.v - params.k - 1) * params.mu).str());
  }
  if (out.pass) {
    auto spec = srg_spectrum(params);
    if (spec.kind == SpectrumKind::infeasible)
      fail(spec.reason);
  }
  return out;
}

}  // namespace at4kit::srg
