#ifndef AT4KIT_GRAPHCHECK_HPP
#define AT4KIT_GRAPHCHECK_HPP

#include "at4kit/at4.hpp"
#include "at4kit/graph.hpp"
#include "at4kit/higman.hpp"
#include "at4kit/srg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace at4kit::graphcheck {

/// All-pairs shortest path lengths; kNoPath for unreachable pairs.
class DistanceTable {
 public:
  static constexpr std::uint16_t kNoPath = 0xffff;

  explicit DistanceTable(const Graph& g);

  std::uint16_t operator()(Vertex a, Vertex b) const { return dist_[static_cast<std::size_t>(a) * n_ + b]; }
  std::size_t size() const { return n_; }
  bool connected() const { return connected_; }
  std::size_t diameter() const { return diameter_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint16_t> dist_;
  bool connected_ = true;
  std::size_t diameter_ = 0;
};

/// Layers G_0(a), ..., G_d(a) around a base vertex.
struct DistancePartition {
  Vertex base = 0;
  std::vector<std::vector<Vertex>> layers;
};

DistancePartition distance_partition(const Graph& g, Vertex base);

std::optional<srg::SrgParams> verify_srg(const Graph& g);

std::optional<at4::IntersectionArray> verify_drg(const Graph& g);

bool is_automorphism(const Graph& g, const Permutation& sigma);

/// alpha_j = #{x : d(x, sigma(x)) = j}, j = 0..diameter. Throws
/// std::invalid_argument for non-automorphisms or disconnected graphs.
std::vector<std::uint64_t> alpha_profile(const Graph& g, const Permutation& sigma);
std::vector<std::uint64_t> alpha_profile(const Graph& g, const DistanceTable& dist, const Permutation& sigma);

/// Vertices fixed by every permutation, in increasing order.
std::vector<Vertex> common_fixed_points(std::size_t n, const std::vector<Permutation>& sigmas);

Graph fix_subgraph(const Graph& g, const std::vector<Permutation>& sigmas);

struct AuditEntry {
  std::size_t index = 0;
  std::uint64_t order = 0;
  bool automorphism = false;
  std::vector<std::uint64_t> profile;
  Rational chi1;
  Rational chi2;
  bool integral = false;
  bool prime_order = false;
  std::optional<bool> residue_condition;   // prime order only
  std::optional<bool> alpha1_admissible;   // prime order and p > 2
  std::uint64_t fixed_points = 0;
  std::optional<bool> fix_bound_ok;        // non-identity only
  bool pass = false;
  std::string failure;
};

struct AuditReport {
  srg::SrgParams expected;
  std::optional<srg::SrgParams> measured;
  bool precondition_ok = false;
  std::string precondition_failure;
  Integer fix_bound;
  std::vector<AuditEntry> entries;
  std::size_t passed = 0;
  std::size_t failed = 0;

  bool all_pass() const { return precondition_ok && failed == 0; }
};

/// Checks one measured distance distribution of an automorphism of the
/// local graph of parameter p. Fills every field except index, automorphism
/// and fixed-point bookkeeping.
AuditEntry audit_profile(const Integer& p, std::uint64_t order, const higman::ThetaProfile& profile);

/// Audits each permutation against the local-graph constraints for p.
/// Work is split across `jobs` threads; entries stay in input order.
AuditReport audit_family_graph(const Graph& g, const Integer& p, const std::vector<Permutation>& sigmas,
                               unsigned jobs = 1);

/// Breadth-first closure of the generators under composition, starting from
/// the identity, stopping once `limit` distinct elements are found.
std::vector<Permutation> close_under_composition(const std::vector<Permutation>& generators, std::size_t limit);

/// `count` products of `length` random generators each, seeded.
std::vector<Permutation> random_products(const std::vector<Permutation>& generators, std::size_t count,
                                         std::size_t length, std::uint64_t seed);

Graph generate_petersen();

struct GewirtzConstruction {
  Graph graph;
  /// Permutations of the 56 vertices induced by the projective symmetries
  /// used to build the hyperoval class.
  std::vector<Permutation> symmetries;
  std::size_t hyperovals_total = 0;
  std::size_t class_count = 0;
};

/// Hyperovals of PG(2,4) in one PSL(3,4) class, adjacent when disjoint.
/// Throws std::runtime_error unless the result verifies as SRG(56,10,0,2).
GewirtzConstruction construct_gewirtz();

Graph generate_gewirtz();

}  // namespace at4kit::graphcheck

#endif  // AT4KIT_GRAPHCHECK_HPP
