// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include "at4kit/at4.hpp"
#include "at4kit/exactnum.hpp"
#include "at4kit/graphcheck.hpp"
#include "at4kit/higman.hpp"
#include "at4kit/srg.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace at4kit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what)
  {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_ms;
  std::function<Outcome()> run;
};

std::string str(const Integer& x)
{
  return x.str();
}

Outcome soicher_array()
{
  Outcome o;
  const auto a = at4::intersection_array(at4::At4Params(2, 3));
  o.require(a.to_string() == "{56,45,16,1;1,8,45,56}", "got " + a.to_string());
  return o;
}

Outcome fundamental_bound_equality()
{
  Outcome o;
  std::size_t checked = 0;
  for (int p = 2; p <= 100; ++p) {
    for (const auto& r : at4::feasible_r(p)) {
      const auto a = at4::intersection_array(at4::At4Params(p, r));
      const auto [t1, t4] = at4::tight_eigenvalues(p, a.b(1));
      const auto fb = at4::fundamental_bound_check(a.b(0), a.a(1), a.b(1), t1, t4);
      o.require(fb.verdict == at4::BoundVerdict::equality && fb.lhs == fb.rhs,
                "p=" + std::to_string(p) + " r=" + str(r));
      if (p == 2)
        o.require(fb.lhs == Rational(-25200, 121) && fb.rhs == Rational(-25200, 121), "p=2 sides");
      ++checked;
    }
  }
  o.require(checked > 0, "no arrays");
  if (o.pass)
    o.detail = std::to_string(checked) + " arrays";
  return o;
}

Outcome family_spectrum()
{
  Outcome o;
  for (int p = 2; p <= 200; ++p) {
    const Integer s = Integer(p + 2) * (p + 2) - 2;
    const auto spec = srg::srg_spectrum(srg::local_family_params(p));
    const std::string tag = "p=" + std::to_string(p);
    o.require(spec.integral(), tag + " not integral");
    o.require(spec.principal == p * (p + 3), tag + " principal");
    o.require(spec.theta_plus == p && spec.theta_minus == -(p + 2), tag + " eigenvalues");
    o.require(spec.mult_plus == Rational((p + 3) * s / 2), tag + " n1");
    o.require(spec.mult_minus == Rational((p + 1) * s / 2 - 1), tag + " n2");
  }
  return o;
}

Outcome gewirtz_end_to_end()
{
  using namespace graphcheck;
  Outcome o;
  const auto gw = construct_gewirtz();
  const auto params = verify_srg(gw.graph);
  o.require(params && *params == srg::SrgParams{56, 10, 0, 2}, "not SRG(56,10,0,2)");
  if (!o.pass)
    return o;

  const auto group = close_under_composition(gw.symmetries, 200);
  std::set<Permutation> distinct(group.begin(), group.end());
  o.require(distinct.size() >= 100, "only " + std::to_string(distinct.size()) + " witnesses");

  const auto report = audit_family_graph(gw.graph, 2, group, 1);
  o.require(report.precondition_ok, report.precondition_failure);
  std::size_t prime_order = 0;
  for (const auto& e : report.entries) {
    const std::string tag = "element " + std::to_string(e.index);
    o.require(e.automorphism, tag + " not an automorphism");
    o.require(e.integral, tag + " characters not integral");
    if (e.prime_order) {
      ++prime_order;
      o.require(e.residue_condition.value_or(false), tag + " residue condition");
    }
    const auto fix = fix_subgraph(gw.graph, {group[e.index]});
    if (!group[e.index].is_identity())
      o.require(fix.size() <= 14, tag + " fixes " + std::to_string(fix.size()));
  }
  o.require(report.all_pass(), "audit reported failures");
  if (o.pass)
    o.detail = std::to_string(distinct.size()) + " elements, " + std::to_string(prime_order) + " of prime order";
  return o;
}

Outcome alpha1_enumeration()
{
  Outcome o;
  o.require(higman::theta_alpha1_enum(3, 23, 0) == std::vector<Integer>{23}, "p=3 l=23 fix=0");
  std::size_t values = 0;
  for (int p = 3; p <= 50; ++p) {
    if (!exactnum::is_prime_power(p))
      continue;
    const std::int64_t s = (p + 2) * (p + 2) - 2;
    const std::int64_t n1 = (p + 3) * s / 2;
    const std::int64_t n2 = (p + 1) * s / 2 - 1;
    for (const auto& ell_big : exactnum::primes_up_to(s)) {
      const std::int64_t ell = exactnum::to_int64(ell_big);
      const std::int64_t m = 2 * (p + 1) * ell;
      for (std::int64_t fix = 0; fix <= s; ++fix) {
        for (const auto& value : higman::theta_alpha1_enum(p, ell_big, fix)) {
          const std::int64_t a = exactnum::to_int64(value);
          // a = 2(p+1)(l z1 + n1) - (p+2) fix + s
          const std::int64_t r1 = a + (p + 2) * fix - s - 2 * (p + 1) * n1;
          // a = p fix - 2(p+1)(n2 + l z2) + p(p+2)
          const std::int64_t r2 = p * fix + p * (p + 2) - 2 * (p + 1) * n2 - a;
          if (r1 % m != 0 || r2 % m != 0 || a < 0 || a > (p + 2) * s - fix) {
            o.require(false, "p=" + std::to_string(p) + " l=" + std::to_string(ell) + " fix=" + std::to_string(fix) +
                                 " a=" + std::to_string(a));
            return o;
          }
          ++values;
        }
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(values) + " values";
  return o;
}

Outcome exclusion_skeleton()
{
  Outcome o;
  const std::set<Integer> known{23, 47, 167, 359, 839};
  for (int p : {3, 5, 11, 17, 27}) {
    const auto e = higman::exclusion_arithmetic(p);
    const Integer s = Integer(p) * p + 4 * p + 2;
    o.require(e.p_plus_2_prime && exactnum::is_prime(Integer(p + 2)), "p=" + std::to_string(p) + " p+2");
    o.require(e.s_prime && exactnum::is_prime(s), "p=" + std::to_string(p) + " s");
    o.require(e.s_in_known_list && known.count(s), "p=" + std::to_string(p) + " s list");
  }
  for (int p : {4, 8, 9, 16, 25}) {
    const auto e = higman::exclusion_arithmetic(p);
    o.require(!(e.p_plus_2_prime && e.s_prime) && !e.status.passed(), "p=" + std::to_string(p) + " gates");
  }
  return o;
}

Outcome spectrum_bounds()
{
  Outcome o;
  for (int p = 3; p <= 200; ++p) {
    if (!exactnum::is_prime_power(p))
      continue;
    const auto b = higman::arc_transitive_spectrum_bounds(p);
    const auto e = higman::edge_stabilizer_spectrum(p);
    o.require(b.applicable() && e.applicable(), "p=" + std::to_string(p) + " gated");
    o.require(b.value.lower.is_subset_of(b.value.upper), "p=" + std::to_string(p) + " lower");
    o.require(e.value.is_subset_of(b.value.upper), "p=" + std::to_string(p) + " edge");
  }
  return o;
}

Outcome brute_force_p3()
{
  Outcome o;
  const Integer p = 3;
  std::size_t triples = 0;
  for (int ell : {2, 3, 5, 23}) {
    for (int a0 = 0; a0 <= 23; ++a0) {
      std::set<Integer> passing;
      for (int a1 = 0; a0 + a1 <= 115; ++a1) {
        ++triples;
        if (higman::chi_filter(p, {ell, a0, a1, 115 - a0 - a1}).passed())
          passing.insert(a1);
      }
      for (const auto& a : higman::theta_alpha1_enum(p, ell, a0))
        o.require(passing.count(a) > 0, "l=" + std::to_string(ell) + " fix=" + std::to_string(a0) + " a=" + str(a));
    }
  }
  if (o.pass)
    o.detail = std::to_string(triples) + " triples";
  return o;
}

}  // namespace

int main()
{
  const std::vector<Criterion> criteria{
      {1, "soicher array", 1000, soicher_array},
      {2, "fundamental bound equality", 1000, fundamental_bound_equality},
      {3, "family spectrum", 1000, family_spectrum},
      {4, "gewirtz end-to-end", 30000, gewirtz_end_to_end},
      {5, "alpha1 enumeration", 10000, alpha1_enumeration},
      {6, "exclusion arithmetic", 1000, exclusion_skeleton},
      {7, "spectrum bound consistency", 1000, spectrum_bounds},
      {8, "brute-force oracle p=3", 5000, brute_force_p3},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && ms > c.budget_ms) {
      o.pass = false;
      o.detail = "over budget";
    }
    failures += !o.pass;
    std::printf("%s criterion %d: %s (%.1f ms%s%s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), ms,
                o.detail.empty() ? "" : "; ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
