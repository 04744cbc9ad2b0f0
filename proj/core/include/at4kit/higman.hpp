#ifndef AT4KIT_HIGMAN_HPP
#define AT4KIT_HIGMAN_HPP

// Automorphism constraints for the local strongly regular family
// ((p+2)(p^2+4p+2), p(p+3), p-2, p) and for AT4(p, p+2, r) graphs.
//
// Notation used throughout: s = (p+2)^2 - 2 = p^2+4p+2, v = (p+2)s,
// n1 = (p+3)s/2 and n2 = (p+1)s/2 - 1 are the non-principal eigenspace
// dimensions of the local graph.

#include "at4kit/at4.hpp"
#include "at4kit/exactnum.hpp"
#include "at4kit/srg.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace at4kit::higman {

using exactnum::PrimeSet;

/// Distance distribution of an automorphism g of the local graph:
/// alpha_j = #{x : d(x, x^g) = j}. alpha0 is the number of fixed points.
struct ThetaProfile {
  Integer order;
  Integer alpha0;
  Integer alpha1;
  Integer alpha2;

  Integer total() const { return alpha0 + alpha1 + alpha2; }
};

/// Fixed points of g in the distance layers Gamma_0(a)..Gamma_4(a) of a
/// fixed vertex a of an AT4 graph (layers[0] = 1).
struct GammaProfile {
  Integer order;
  std::array<Integer, 5> layers;
};

enum class Outcome { pass, fail, inapplicable };

std::string to_string(Outcome o);

/// Machine-readable status. A failing or inapplicable status names the
/// condition by a stable code and a short human description.
struct Status {
  Outcome outcome = Outcome::pass;
  std::string code;
  std::string condition;

  bool passed() const { return outcome == Outcome::pass; }
  bool applicable() const { return outcome != Outcome::inapplicable; }

  static Status ok() { return {}; }
  static Status failed(std::string code, std::string condition);
  static Status not_applicable(std::string code, std::string condition);
};

/// A result that exists only when the hypotheses of its derivation hold.
template <class T>
struct Gated {
  Status status;
  T value{};

  bool applicable() const { return status.applicable(); }
};

/// Status gate for results that need p to be a prime power with p > 2.
Status prime_power_gate(const Integer& p);

struct ChiValues {
  Rational chi1;
  Rational chi2;
};

ChiValues chi_values(const Integer& p, const ThetaProfile& profile);

/// Same characters computed as (1/v) * sum_j Q[i][j] alpha_j from the second
/// eigenmatrix; independent of the closed-form expressions.
ChiValues chi_values_from_eigenmatrix(const Integer& p, const ThetaProfile& profile);

/// Integrality of chi1, chi2 and, for prime order l, l | chi1 - n1 and
/// l | chi2 - n2.
Status chi_filter(const Integer& p, const ThetaProfile& profile);

/// alpha1 values in [0, v - fix] consistent with both closed forms
///   alpha1 = 2(p+1)(l z1 + n1) - (p+2) fix + s
///   alpha1 = p fix - 2(p+1)(n2 + l z2) + p(p+2)
/// for integers z1, z2. Requires p >= 3, l prime, 0 <= fix <= s.
std::vector<Integer> theta_alpha1_enum(const Integer& p, const Integer& ell, const Integer& fix);

/// The admissible alpha1 values as an arithmetic progression
/// first, first + step, ... (count terms). count = 0 when none exist.
struct Alpha1Progression {
  Integer first;
  Integer step;
  Integer count;
};

Alpha1Progression theta_alpha1_progression(const Integer& p, const Integer& ell, const Integer& fix);

enum class OrderBranch { below_p, equals_p, above_p };

struct FixedStructure {
  OrderBranch branch = OrderBranch::below_p;
  Integer fix_bound;            // |Fix(g)| <= s
  bool nonempty_fix_admitted = true;
  // equals_p branch
  std::optional<Integer> fix_residue_mod_p;  // |Fix(g)| = 4 (mod p)
  std::vector<Integer> component_valencies;  // p*l, l in {2,4,...,p+2}
  std::optional<Integer> component_min_size; // 4(p+1)
  // fixed-point-free branches admitting this order
  bool free_divides_s = false;          // l odd, l | s
  bool free_divides_p_plus_2 = false;   // l odd, l | p+2
  bool free_involution_even_p = false;  // l = 2, p even
  bool fixed_point_free_admitted() const
  {
    return free_divides_s || free_divides_p_plus_2 || free_involution_even_p;
  }
  std::vector<std::string> notes;
};

Gated<FixedStructure> theta_fixed_structure(const Integer& p, const Integer& ell);

/// One candidate strongly regular subgraph (v', k', p-2, p) of the local graph.
struct SubgraphCase {
  int label = 0;
  srg::SrgParams params;
  Rational t;  // positive non-principal eigenvalue
  Rational s;  // negative non-principal eigenvalue
  bool square_condition = false;   // k' - p + 1 is a square
  bool vertex_condition = false;   // p | (k'-t')(k'-s')
  bool multiplicity_condition = false;  // 2p | k'(k'-s')
  bool within_fix_bound = false;   // v' <= s
  Status status;
  std::vector<std::string> notes;
};

Gated<std::vector<SubgraphCase>> subgraph_cases(const Integer& p);

/// Residues mod l of the AT4 layer sizes k_1..k_4 through a fixed vertex.
std::array<Integer, 4> gamma_congruences(const at4::At4Params& params, const Integer& ell);

/// Residues mod l of the layer sizes of the second subconstituent.
std::array<Integer, 4> phi_congruences(const at4::At4Params& params, const Integer& ell);

/// Layer-by-layer fixed-point consistency for an AT4 automorphism of prime order.
Status check_gamma_profile(const at4::At4Params& params, const GammaProfile& profile);

struct OrderClassification {
  PrimeSet up_to_p;              // primes <= p
  std::optional<Integer> p_plus_2;  // when p+2 is prime
  PrimeSet large_divisors_of_s;  // prime divisors of s exceeding p
  PrimeSet with_fixed_points;    // union of the three above
  PrimeSet fixed_point_free;     // prime_set((p+1)(p+4))
  std::vector<std::string> notes;

  /// "fixed", "fixed-point-free", "both" or "excluded".
  std::string classify(const Integer& ell) const;
};

Gated<OrderClassification> gamma_order_classification(const at4::At4Params& params);

Integer gamma_fix_bound(const at4::At4Params& params);

/// Divisors of (p+2)s that do not exceed s.
std::vector<Integer> block_size_filter(const Integer& p);

struct CentralizerFilter {
  Integer s;
  PrimeSet admissible_orders;  // primes dividing p+1 and smaller than p
  Integer fix_size;            // s
  Integer alpha1;              // (p+1)s
};

/// Prime orders of elements commuting with an element of order s (s prime).
Gated<CentralizerFilter> centralizer_order_filter(const Integer& p);

struct SolvableTransversal {
  Integer t;
  Integer e;                 // multiplicative order of t mod s
  bool e_at_least_2 = false;
  bool s_divides_gl = false;
};

struct SolvableCases {
  Integer s;
  bool p_plus_2_power_of_3 = false;
  bool s_congruent_1_mod_3 = false;
  bool normal_s_subgroup_case = false;  // both of the above
  std::vector<SolvableTransversal> transversals;
  bool p_plus_2_composite = false;
  bool elementary_abelian_case = false;  // some transversal works and p+2 composite
  bool any_case_open() const { return normal_s_subgroup_case || elementary_abelian_case; }
};

/// Arithmetic of the two solvable alternatives for a vertex-transitive group
/// of the local graph whose order is divisible by s (s prime).
Gated<SolvableCases> solvable_case_arithmetic(const Integer& p);

/// Primes that may divide the order of an arc stabilizer: all primes <= p.
Gated<PrimeSet> edge_stabilizer_spectrum(const Integer& p);

struct SpectrumBounds {
  PrimeSet lower;
  PrimeSet upper;
};

/// Prime spectrum bounds for an arc-transitive automorphism group.
Gated<SpectrumBounds> arc_transitive_spectrum_bounds(const Integer& p);

struct ExclusionArithmetic {
  Integer p;
  bool p_is_prime_power = false;
  Integer s;
  bool p_plus_2_prime = false;
  bool s_prime = false;
  bool s_in_known_list = false;  // s in {23, 47, 167, 359, 839}
  std::optional<Integer> l2_order;  // s(s^2-1)/2 when s is prime
  Integer gcd_s2m1_p_plus_2;
  bool gcd_divides_3 = false;
  Gated<CentralizerFilter> centralizer;
  Gated<SolvableCases> solvable;
  Status status;
};

/// Arithmetic feeding the non-arc-transitivity argument for a given p.
ExclusionArithmetic exclusion_arithmetic(const Integer& p);

}  // namespace at4kit::higman

#endif  // AT4KIT_HIGMAN_HPP
