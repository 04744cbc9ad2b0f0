#include "at4kit/higman.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace at4kit::higman {

using exactnum::divides;
using exactnum::floor_mod;
using exactnum::is_integral;
using exactnum::is_prime;
using exactnum::to_integer;

namespace {

Integer s_of(const Integer& p)
{
  return p * p + 4 * p + 2;
}

Integer n1_of(const Integer& p)
{
  return srg::family_mult_plus(p);
}

Integer n2_of(const Integer& p)
{
  return srg::family_mult_minus(p);
}

void require_prime(const Integer& ell, const char* who)
{
  if (!is_prime(ell))
    throw std::invalid_argument(std::string(who) + ": order " + ell.str() + " is not prime");
}

void require_profile_total(const Integer& p, const ThetaProfile& profile, const char* who)
{
  if (p < 2)
    throw std::invalid_argument(std::string(who) + ": p must be >= 2");
  if (profile.alpha0 < 0 || profile.alpha1 < 0 || profile.alpha2 < 0)
    throw std::invalid_argument(std::string(who) + ": negative profile entry");
  Integer v = (p + 2) * s_of(p);
  if (profile.total() != v)
    throw std::invalid_argument(std::string(who) + ": profile sums to " + profile.total().str() + ", expected " +
                                v.str());
}

PrimeSet primes_above(const PrimeSet& set, const Integer& bound)
{
  std::vector<Integer> out;
  for (const auto& q : set) {
    if (q > bound)
      out.push_back(q);
  }
  return PrimeSet(std::move(out));
}

}  // namespace

std::string to_string(Outcome o)
{
  switch (o) {
  case Outcome::pass:
    return "pass";
  case Outcome::fail:
    return "fail";
  case Outcome::inapplicable:
    return "inapplicable";
  }
  return "unknown";
}

Status Status::failed(std::string code, std::string condition)
{
  return {Outcome::fail, std::move(code), std::move(condition)};
}

Status Status::not_applicable(std::string code, std::string condition)
{
  return {Outcome::inapplicable, std::move(code), std::move(condition)};
}

Status prime_power_gate(const Integer& p)
{
  if (p <= 2)
    return Status::not_applicable("p-not-above-2", "requires p > 2");
  if (!exactnum::is_prime_power(p))
    return Status::not_applicable("p-not-prime-power", "requires p to be a prime power");
  return Status::ok();
}

ChiValues chi_values(const Integer& p, const ThetaProfile& profile)
{
  require_profile_total(p, profile, "chi_values");
  const Rational a0(profile.alpha0), a1(profile.alpha1), a2(profile.alpha2);
  const Rational pr(p);
  const Rational two_p1 = 2 * (pr + 1);
  ChiValues out;
  out.chi1 = ((pr + 3) * a0 / 2 + a1 / 2 - a2 / two_p1) / (pr + 2);
  out.chi2 = (pr * (pr + 3) * a0 / 2 - (pr + 2) * a1 / 2 + pr * a2 / two_p1) / Rational(s_of(p));
  return out;
}

ChiValues chi_values_from_eigenmatrix(const Integer& p, const ThetaProfile& profile)
{
  require_profile_total(p, profile, "chi_values_from_eigenmatrix");
  auto Q = srg::second_eigenmatrix(p);
  Rational v = Rational((p + 2) * s_of(p));
  std::array<Rational, 3> alpha{Rational(profile.alpha0), Rational(profile.alpha1), Rational(profile.alpha2)};
  auto row = [&](std::size_t i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < 3; ++j)
      acc += Q[i][j] * alpha[j];
    return acc / v;
  };
  return {row(1), row(2)};
}

Status chi_filter(const Integer& p, const ThetaProfile& profile)
{
  require_prime(profile.order, "chi_filter");
  auto chi = chi_values(p, profile);
  if (!is_integral(chi.chi1))
    return Status::failed("chi1-non-integral", "chi1 = " + exactnum::to_string(chi.chi1) + " is not an integer");
  if (!is_integral(chi.chi2))
    return Status::failed("chi2-non-integral", "chi2 = " + exactnum::to_string(chi.chi2) + " is not an integer");
  Integer d1 = to_integer(chi.chi1) - n1_of(p);
  Integer d2 = to_integer(chi.chi2) - n2_of(p);
  if (!divides(profile.order, d1))
    return Status::failed("chi1-residue", "|g| = " + profile.order.str() + " does not divide chi1 - n1 = " + d1.str());
  if (!divides(profile.order, d2))
    return Status::failed("chi2-residue", "|g| = " + profile.order.str() + " does not divide chi2 - n2 = " + d2.str());
  return Status::ok();
}

Alpha1Progression theta_alpha1_progression(const Integer& p, const Integer& ell, const Integer& fix)
{
  if (p < 3)
    throw std::invalid_argument("theta_alpha1_enum: p must be > 2, got " + p.str());
  require_prime(ell, "theta_alpha1_enum");
  const Integer s = s_of(p);
  if (fix < 0 || fix > s)
    throw std::invalid_argument("theta_alpha1_enum: fixed-point count " + fix.str() + " outside [0, " + s.str() + "]");

  if (p <= 10000 && ell <= 1000000000) {
    // every intermediate stays below 2^62
    const std::int64_t pp = exactnum::to_int64(p), l = exactnum::to_int64(ell), f = exactnum::to_int64(fix);
    const std::int64_t ss = (pp + 2) * (pp + 2) - 2;
    const std::int64_t m = 2 * (pp + 1) * l;
    const std::int64_t k1 = (pp + 1) * (pp + 3) * ss - (pp + 2) * f + ss;
    const std::int64_t k2 = pp * f - (pp + 1) * ((pp + 1) * ss - 2) + pp * (pp + 2);
    Alpha1Progression out{0, m, 0};
    if (((k1 - k2) % m + m) % m != 0)
      return out;
    const std::int64_t first = (k1 % m + m) % m;
    const std::int64_t upper = (pp + 2) * ss - f;
    out.first = first;
    if (first <= upper)
      out.count = (upper - first) / m + 1;
    return out;
  }

  const Integer v = (p + 2) * s;
  const Integer modulus = 2 * (p + 1) * ell;
  // Residues of the two closed forms; both are linear in z with the same step.
  const Integer c1 = 2 * (p + 1) * n1_of(p) - (p + 2) * fix + s;
  const Integer c2 = p * fix - 2 * (p + 1) * n2_of(p) + p * (p + 2);

  Alpha1Progression out{0, modulus, 0};
  if (floor_mod(c1 - c2, modulus) != 0)
    return out;
  out.first = floor_mod(c1, modulus);
  const Integer upper = v - fix;
  if (out.first <= upper)
    out.count = (upper - out.first) / modulus + 1;
  return out;
}

std::vector<Integer> theta_alpha1_enum(const Integer& p, const Integer& ell, const Integer& fix)
{
  auto prog = theta_alpha1_progression(p, ell, fix);
  std::vector<Integer> out;
  const auto count = static_cast<std::size_t>(exactnum::to_int64(prog.count));
  out.reserve(count);
  Integer value = prog.first;
  for (std::size_t i = 0; i < count; ++i, value += prog.step)
    out.push_back(value);
  return out;
}

Gated<FixedStructure> theta_fixed_structure(const Integer& p, const Integer& ell)
{
  Gated<FixedStructure> out;
  out.status = prime_power_gate(p);
  if (!out.applicable())
    return out;
  require_prime(ell, "theta_fixed_structure");

  auto& fs = out.value;
  const Integer s = s_of(p);
  fs.fix_bound = s;
  fs.free_divides_s = ell % 2 == 1 && divides(ell, s);
  fs.free_divides_p_plus_2 = ell % 2 == 1 && divides(ell, p + 2);
  fs.free_involution_even_p = ell == 2 && p % 2 == 0;

  if (ell < p) {
    fs.branch = OrderBranch::below_p;
    fs.notes.push_back("order below p: fixed sets constrained only by the character filter and |Fix| <= s");
  } else if (ell == p) {
    fs.branch = OrderBranch::equals_p;
    fs.fix_residue_mod_p = floor_mod(Integer(4), p);
    for (Integer l = 2; l <= p + 2; l += 2)
      fs.component_valencies.push_back(p * l);
    fs.component_min_size = 4 * (p + 1);
    fs.notes.push_back("order p: each nontrivial component of Fix(g) is amply regular with parameters "
                       "(|D|, p*l, p-2, p), diameter >= 3 and |D| >= 4(p+1)");
    fs.notes.push_back("order p: alpha1 = p(|Fix| - 2(p+1)z + p + 2) for some integer z");
  } else {
    fs.branch = OrderBranch::above_p;
    fs.nonempty_fix_admitted = false;
    fs.notes.push_back("order above p: no automorphism of this order has a fixed vertex");
  }
  if (!fs.nonempty_fix_admitted && !fs.fixed_point_free_admitted())
    out.status = Status::failed("order-excluded", "order " + ell.str() + " admits neither fixed vertices nor a "
                                                  "fixed-point-free action");
  return out;
}

Gated<std::vector<SubgraphCase>> subgraph_cases(const Integer& p)
{
  Gated<std::vector<SubgraphCase>> out;
  out.status = prime_power_gate(p);
  if (!out.applicable())
    return out;

  const Integer s = s_of(p);
  const Rational pr(p);
  auto make = [&](int label, const Rational& k, const Rational& v) {
    SubgraphCase c;
    c.label = label;
    c.params = {to_integer(v), to_integer(k), p - 2, p};
    const Integer& kk = c.params.k;
    auto root = exactnum::exact_sqrt(kk - p + 1);
    c.square_condition = root.has_value();
    if (root) {
      c.t = -1 + Rational(*root);
      c.s = -(c.t + 2);
      Rational vertex_product = (Rational(kk) - c.t) * (Rational(kk) - c.s);
      c.vertex_condition = is_integral(vertex_product) && divides(p, to_integer(vertex_product));
      Rational mult_product = Rational(kk) * (Rational(kk) - c.s);
      c.multiplicity_condition = is_integral(mult_product) && divides(2 * p, to_integer(mult_product));
      if (c.vertex_condition && to_integer(vertex_product) / p != c.params.v)
        c.notes.push_back("v' differs from (k'-t')(k'-s')/p");
    }
    c.within_fix_bound = c.params.v <= s;

    std::string codes;
    auto add = [&](bool ok, const char* code) {
      if (!ok)
        codes += (codes.empty() ? "" : ",") + std::string(code);
    };
    add(c.square_condition, "not-square");
    add(c.vertex_condition, "vertex-count-divisibility");
    add(c.multiplicity_condition, "multiplicity-divisibility");
    add(c.within_fix_bound, "exceeds-fix-bound");
    if (!codes.empty())
      c.status = Status::failed(codes, "cannot occur as the fixed subgraph of a nontrivial automorphism");
    out.value.push_back(std::move(c));
  };

  make(1, pr * pr + pr - 1, pr * pr * (pr + 2));
  make(2, pr * (pr - 1), pr * ((pr - 1) * (pr - 1) + 1));
  if (p % 2 == 0) {
    make(3, pr * pr / 4, (pr * pr / 8 - pr / 4 + 1) * (pr / 2 + 1));
    out.value.back().notes.push_back(
        "the alternative with s' = -3 and p = 2 (derived form s' = -3p/2) is kept as stated; it never applies for p > 2");
    make(4, pr * (pr / 2 + 4) / 2, (3 + pr / 2) * (pr * pr / 8 + 5 * pr / 4 + 1));
  }
  return out;
}

std::array<Integer, 4> gamma_congruences(const at4::At4Params& params, const Integer& ell)
{
  require_prime(ell, "gamma_congruences");
  const auto& p = params.p();
  const auto& r = params.r();
  const Integer s = s_of(p);
  return {floor_mod((p + 2) * s, ell), floor_mod(s * (p + 3) * (p + 1) * r / 2, ell),
          floor_mod((p + 2) * s * (r - 1), ell), floor_mod(r - 1, ell)};
}

std::array<Integer, 4> phi_congruences(const at4::At4Params& params, const Integer& ell)
{
  require_prime(ell, "phi_congruences");
  const auto& p = params.p();
  const auto& r = params.r();
  const Integer q2 = (p + 2) * (p + 2);
  return {floor_mod(p * q2, ell), floor_mod(q2 * (p + 1) * (p + 1) * r / 2, ell), floor_mod(p * q2 * (r - 1), ell),
          floor_mod(r - 1, ell)};
}

Status check_gamma_profile(const at4::At4Params& params, const GammaProfile& profile)
{
  require_prime(profile.order, "check_gamma_profile");
  if (profile.layers[0] != 1)
    return Status::failed("base-not-fixed", "layer 0 must contain the fixed base vertex");
  auto array = at4::intersection_array(params);
  auto residues = gamma_congruences(params, profile.order);
  Integer total = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    const auto& x = profile.layers[i];
    Integer ki = to_integer(array.k(i));
    if (x < 0 || x > ki)
      return Status::failed("layer-size", "x" + std::to_string(i) + " = " + x.str() + " outside [0, " + ki.str() + "]");
    if (i > 0 && floor_mod(x, profile.order) != residues[i - 1])
      return Status::failed("layer-residue", "x" + std::to_string(i) + " = " + x.str() + " is not " +
                                                 residues[i - 1].str() + " mod " + profile.order.str());
    total += x;
  }
  if (total > gamma_fix_bound(params))
    return Status::failed("fix-bound", "|Fix(g)| = " + total.str() + " exceeds " + gamma_fix_bound(params).str());
  return Status::ok();
}

std::string OrderClassification::classify(const Integer& ell) const
{
  bool fixed = with_fixed_points.contains(ell);
  bool free = fixed_point_free.contains(ell);
  if (fixed && free)
    return "both";
  if (fixed)
    return "fixed";
  if (free)
    return "fixed-point-free";
  return "excluded";
}

Gated<OrderClassification> gamma_order_classification(const at4::At4Params& params)
{
  Gated<OrderClassification> out;
  const auto& p = params.p();
  out.status = prime_power_gate(p);
  if (!out.applicable())
    return out;
  auto& oc = out.value;
  const Integer s = s_of(p);
  oc.up_to_p = exactnum::primes_up_to(p);
  if (is_prime(p + 2))
    oc.p_plus_2 = p + 2;
  oc.large_divisors_of_s = primes_above(exactnum::prime_set(s), p);
  oc.with_fixed_points = oc.up_to_p.united(oc.large_divisors_of_s);
  if (oc.p_plus_2)
    oc.with_fixed_points = oc.with_fixed_points.united(PrimeSet{*oc.p_plus_2});
  oc.fixed_point_free = exactnum::prime_set((p + 1) * (p + 4));

  if (oc.p_plus_2)
    oc.notes.push_back("order p+2: Fix(g) is a 2r-coclique, a union of two antipodal classes");
  if (is_prime(s))
    oc.notes.push_back("order s: Fix(g) is a single antipodal class");
  for (const auto& q : oc.large_divisors_of_s) {
    if (q != s)
      oc.notes.push_back("order " + q.str() + " is a proper divisor of s above p; kept as admissible");
  }
  return out;
}

Integer gamma_fix_bound(const at4::At4Params& params)
{
  const auto& p = params.p();
  return params.r() * (p + 1) * (p + 2) * (p + 4);
}

std::vector<Integer> block_size_filter(const Integer& p)
{
  if (p < 2)
    throw std::invalid_argument("block_size_filter: p must be >= 2");
  const Integer s = s_of(p);
  std::vector<Integer> out;
  for (auto& d : exactnum::divisors((p + 2) * s)) {
    if (d <= s)
      out.push_back(d);
  }
  return out;
}

Gated<CentralizerFilter> centralizer_order_filter(const Integer& p)
{
  Gated<CentralizerFilter> out;
  out.status = prime_power_gate(p);
  if (!out.applicable())
    return out;
  const Integer s = s_of(p);
  if (!is_prime(s)) {
    out.status = Status::not_applicable("s-composite", "requires s = (p+2)^2 - 2 prime; " + s.str() + " is composite");
    return out;
  }
  std::vector<Integer> orders;
  for (const auto& q : exactnum::prime_set(p + 1)) {
    if (q < p)
      orders.push_back(q);
  }
  out.value = {s, PrimeSet(std::move(orders)), s, (p + 1) * s};
  return out;
}

Gated<SolvableCases> solvable_case_arithmetic(const Integer& p)
{
  Gated<SolvableCases> out;
  out.status = prime_power_gate(p);
  if (!out.applicable())
    return out;
  const Integer s = s_of(p);
  if (!is_prime(s)) {
    out.status = Status::not_applicable("s-composite", "requires s = (p+2)^2 - 2 prime; " + s.str() + " is composite");
    return out;
  }
  auto& sc = out.value;
  sc.s = s;
  auto base = exactnum::prime_power_base(p + 2);
  sc.p_plus_2_power_of_3 = base && base->prime == 3;
  sc.s_congruent_1_mod_3 = s % 3 == 1;
  sc.normal_s_subgroup_case = sc.p_plus_2_power_of_3 && sc.s_congruent_1_mod_3;
  sc.p_plus_2_composite = !is_prime(p + 2);

  bool transversal_ok = false;
  for (const auto& t : exactnum::prime_set(p + 2)) {
    SolvableTransversal tr;
    tr.t = t;
    tr.e = exactnum::mult_order(t, s);
    tr.e_at_least_2 = tr.e >= 2;
    tr.s_divides_gl = exactnum::gl_order_mod(static_cast<unsigned>(exactnum::to_int64(tr.e)), t, s) == 0;
    transversal_ok = transversal_ok || (tr.e_at_least_2 && tr.s_divides_gl);
    sc.transversals.push_back(tr);
  }
  sc.elementary_abelian_case = transversal_ok && sc.p_plus_2_composite;
  if (!sc.any_case_open())
    out.status = Status::failed("no-solvable-case", "neither solvable alternative is arithmetically possible");
  return out;
}

Gated<PrimeSet> edge_stabilizer_spectrum(const Integer& p)
{
  Gated<PrimeSet> out;
  out.status = prime_power_gate(p);
  if (out.applicable())
    out.value = exactnum::primes_up_to(p);
  return out;
}

Gated<SpectrumBounds> arc_transitive_spectrum_bounds(const Integer& p)
{
  Gated<SpectrumBounds> out;
  out.status = prime_power_gate(p);
  if (!out.applicable())
    return out;
  const Integer s = s_of(p);
  out.value.lower = exactnum::prime_set((p + 2) * s * (p + 1) * (p + 4));
  out.value.upper = exactnum::primes_up_to(p + 2).united(exactnum::prime_set(s * (p + 4)));
  if (!out.value.lower.is_subset_of(out.value.upper))
    throw std::logic_error("arc_transitive_spectrum_bounds: lower bound not contained in upper bound at p = " + p.str());
  return out;
}

ExclusionArithmetic exclusion_arithmetic(const Integer& p)
{
  if (p < 2)
    throw std::invalid_argument("exclusion_arithmetic: p must be >= 2");
  ExclusionArithmetic out;
  out.p = p;
  out.p_is_prime_power = exactnum::is_prime_power(p);
  out.s = s_of(p);
  out.p_plus_2_prime = is_prime(p + 2);
  out.s_prime = is_prime(out.s);
  static const std::array<int, 5> known{23, 47, 167, 359, 839};
  out.s_in_known_list = std::find(known.begin(), known.end(), out.s) != known.end();
  if (out.s_prime)
    out.l2_order = out.s * (out.s * out.s - 1) / 2;
  out.gcd_s2m1_p_plus_2 = gcd(out.s * out.s - 1, p + 2);
  out.gcd_divides_3 = divides(out.gcd_s2m1_p_plus_2, Integer(3));
  out.centralizer = centralizer_order_filter(p);
  out.solvable = solvable_case_arithmetic(p);

  out.status = prime_power_gate(p);
  if (!out.status.applicable())
    return out;
  if (!out.p_plus_2_prime)
    out.status = Status::not_applicable("p-plus-2-composite", "requires p+2 prime; " + Integer(p + 2).str() + " is composite");
  else if (!out.s_prime)
    out.status = Status::not_applicable("s-composite", "requires s prime; " + out.s.str() + " is composite");
  return out;
}

}  // namespace at4kit::higman
