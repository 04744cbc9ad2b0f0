#include "at4kit/graphcheck.hpp"

#include "at4kit/parallel.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>

namespace at4kit::graphcheck {

DistanceTable::DistanceTable(const Graph& g)
    : n_(g.size()), dist_(g.size() * g.size(), kNoPath)
{
  std::vector<Vertex> queue(n_);
  for (Vertex src = 0; src < n_; ++src) {
    auto* row = &dist_[static_cast<std::size_t>(src) * n_];
    std::size_t head = 0, tail = 0;
    row[src] = 0;
    queue[tail++] = src;
    while (head < tail) {
      Vertex x = queue[head++];
      for (Vertex y : g.neighbours(x)) {
        if (row[y] == kNoPath) {
          row[y] = static_cast<std::uint16_t>(row[x] + 1);
          diameter_ = std::max<std::size_t>(diameter_, row[y]);
          queue[tail++] = y;
        }
      }
    }
    if (tail != n_)
      connected_ = false;
  }
}

DistancePartition distance_partition(const Graph& g, Vertex base)
{
  if (base >= g.size())
    throw std::invalid_argument("distance_partition: base vertex out of range");
  DistancePartition out;
  out.base = base;
  std::vector<int> dist(g.size(), -1);
  dist[base] = 0;
  out.layers.push_back({base});
  while (true) {
    std::vector<Vertex> next;
    for (Vertex x : out.layers.back()) {
      for (Vertex y : g.neighbours(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          next.push_back(y);
        }
      }
    }
    if (next.empty())
      break;
    std::sort(next.begin(), next.end());
    out.layers.push_back(std::move(next));
  }
  return out;
}

std::optional<srg::SrgParams> verify_srg(const Graph& g)
{
  const std::size_t n = g.size();
  if (n < 3 || !g.connected())
    return std::nullopt;
  const std::size_t k = g.degree(0);
  for (Vertex a = 0; a < n; ++a) {
    if (g.degree(a) != k)
      return std::nullopt;
  }
  if (k + 1 >= n)
    return std::nullopt;  // complete graph: mu undefined

  std::optional<std::size_t> lambda, mu;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      std::size_t common = 0;
      for (Vertex x : g.neighbours(a))
        common += g.adjacent(b, x);
      auto& slot = g.adjacent(a, b) ? lambda : mu;
      if (!slot)
        slot = common;
      else if (*slot != common)
        return std::nullopt;
    }
  }
  return srg::SrgParams{Integer(n), Integer(k), Integer(lambda.value_or(0)), Integer(mu.value_or(0))};
}

std::optional<at4::IntersectionArray> verify_drg(const Graph& g)
{
  const std::size_t n = g.size();
  if (n < 2)
    return std::nullopt;
  DistanceTable dist(g);
  if (!dist.connected())
    return std::nullopt;
  const std::size_t d = dist.diameter();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> b(d + 1, unset), a(d + 1, unset), c(d + 1, unset);

  auto record = [](std::size_t& slot, std::size_t value) {
    if (slot == unset)
      slot = value;
    return slot == value;
  };
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex u = 0; u < n; ++u) {
      const std::size_t i = dist(x, u);
      std::size_t down = 0, same = 0, up = 0;
      for (Vertex w : g.neighbours(u)) {
        const std::size_t j = dist(x, w);
        if (j + 1 == i)
          ++down;
        else if (j == i)
          ++same;
        else
          ++up;
      }
      if (!record(c[i], down) || !record(a[i], same) || !record(b[i], up))
        return std::nullopt;
    }
  }
  std::vector<Integer> bs, cs;
  for (std::size_t i = 0; i < d; ++i) {
    bs.emplace_back(b[i]);
    cs.emplace_back(c[i + 1]);
  }
  return at4::IntersectionArray(std::move(bs), std::move(cs));
}

bool is_automorphism(const Graph& g, const Permutation& sigma)
{
  if (sigma.size() != g.size())
    return false;
  for (Vertex a = 0; a < g.size(); ++a) {
    if (g.degree(a) != g.degree(sigma(a)))
      return false;
    for (Vertex b : g.neighbours(a)) {
      if (!g.adjacent(sigma(a), sigma(b)))
        return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> alpha_profile(const Graph& g, const DistanceTable& dist, const Permutation& sigma)
{
  if (!dist.connected())
    throw std::invalid_argument("alpha_profile: graph is not connected");
  if (!is_automorphism(g, sigma))
    throw std::invalid_argument("alpha_profile: permutation is not an automorphism");
  std::vector<std::uint64_t> out(dist.diameter() + 1, 0);
  for (Vertex x = 0; x < g.size(); ++x)
    ++out[dist(x, sigma(x))];
  return out;
}

std::vector<std::uint64_t> alpha_profile(const Graph& g, const Permutation& sigma)
{
  return alpha_profile(g, DistanceTable(g), sigma);
}

std::vector<Vertex> common_fixed_points(std::size_t n, const std::vector<Permutation>& sigmas)
{
  std::vector<Vertex> out;
  for (Vertex x = 0; x < n; ++x) {
    if (std::all_of(sigmas.begin(), sigmas.end(), [&](const Permutation& s) { return s(x) == x; }))
      out.push_back(x);
  }
  return out;
}

Graph fix_subgraph(const Graph& g, const std::vector<Permutation>& sigmas)
{
  for (const auto& s : sigmas) {
    if (!is_automorphism(g, s))
      throw std::invalid_argument("fix_subgraph: permutation is not an automorphism");
  }
  return g.induced(common_fixed_points(g.size(), sigmas));
}

AuditEntry audit_profile(const Integer& p, std::uint64_t order, const higman::ThetaProfile& profile)
{
  AuditEntry e;
  e.order = order;
  e.profile = {static_cast<std::uint64_t>(profile.alpha0), static_cast<std::uint64_t>(profile.alpha1),
               static_cast<std::uint64_t>(profile.alpha2)};
  e.fixed_points = e.profile[0];

  auto chi = higman::chi_values(p, profile);
  e.chi1 = chi.chi1;
  e.chi2 = chi.chi2;
  e.integral = exactnum::is_integral(chi.chi1) && exactnum::is_integral(chi.chi2);
  e.prime_order = exactnum::is_prime(Integer(order));

  if (!e.integral) {
    e.failure = "character values not integral: chi1 = " + exactnum::to_string(chi.chi1) +
                ", chi2 = " + exactnum::to_string(chi.chi2);
  }
  if (e.prime_order) {
    higman::ThetaProfile prof = profile;
    prof.order = order;
    auto status = higman::chi_filter(p, prof);
    e.residue_condition = status.passed() || (status.code != "chi1-residue" && status.code != "chi2-residue");
    if (!*e.residue_condition && e.failure.empty())
      e.failure = status.condition;

    if (p > 2) {
      const Integer s = p * p + 4 * p + 2;
      bool admissible = false;
      if (profile.alpha0 <= s) {
        auto prog = higman::theta_alpha1_progression(p, Integer(order), profile.alpha0);
        Integer offset = profile.alpha1 - prog.first;
        admissible = prog.count > 0 && offset >= 0 && offset % prog.step == 0 && offset / prog.step < prog.count;
      }
      e.alpha1_admissible = admissible;
      if (!admissible && e.failure.empty())
        e.failure = "alpha1 = " + profile.alpha1.str() + " not admissible for order " + std::to_string(order) +
                    " with " + profile.alpha0.str() + " fixed points";
    }
  }
  e.pass = e.integral && e.residue_condition.value_or(true) && e.alpha1_admissible.value_or(true);
  return e;
}

AuditReport audit_family_graph(const Graph& g, const Integer& p, const std::vector<Permutation>& sigmas, unsigned jobs)
{
  AuditReport report;
  report.expected = srg::local_family_params(p);
  report.measured = verify_srg(g);
  if (!report.measured || *report.measured != report.expected) {
    report.precondition_failure = "graph parameters " + (report.measured ? report.measured->to_string() : "(not SRG)") +
                                  " differ from " + report.expected.to_string();
    return report;
  }
  report.precondition_ok = true;
  report.fix_bound = srg::fixed_point_order_bound(report.expected);
  const DistanceTable dist(g);

  report.entries = parallel_map(sigmas.size(), jobs, [&](std::size_t i) {
    const auto& sigma = sigmas[i];
    AuditEntry e;
    if (sigma.size() != g.size() || !is_automorphism(g, sigma)) {
      e.failure = "not an automorphism";
    } else {
      auto alpha = alpha_profile(g, dist, sigma);
      const std::uint64_t order = sigma.order();
      higman::ThetaProfile prof{Integer(order), Integer(alpha[0]), Integer(alpha[1]), Integer(alpha[2])};
      e = audit_profile(p, order, prof);
      e.automorphism = true;
      if (!sigma.is_identity()) {
        e.fix_bound_ok = Integer(e.fixed_points) <= report.fix_bound;
        if (!*e.fix_bound_ok) {
          e.pass = false;
          if (e.failure.empty())
            e.failure = std::to_string(e.fixed_points) + " fixed points exceed " + report.fix_bound.str();
        }
      }
    }
    e.index = i;
    return e;
  });
  for (const auto& e : report.entries)
    (e.pass ? report.passed : report.failed)++;
  return report;
}

std::vector<Permutation> close_under_composition(const std::vector<Permutation>& generators, std::size_t limit)
{
  if (generators.empty() || limit == 0)
    return {};
  const std::size_t n = generators.front().size();
  std::vector<Permutation> out{Permutation::identity(n)};
  std::set<Permutation> seen{out.front()};
  for (std::size_t head = 0; head < out.size() && out.size() < limit; ++head) {
    for (const auto& g : generators) {
      auto next = out[head] * g;
      if (seen.insert(next).second) {
        out.push_back(std::move(next));
        if (out.size() >= limit)
          break;
      }
    }
  }
  return out;
}

std::vector<Permutation> random_products(const std::vector<Permutation>& generators, std::size_t count,
                                         std::size_t length, std::uint64_t seed)
{
  if (generators.empty())
    return {};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, generators.size() - 1);
  std::vector<Permutation> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Permutation acc = Permutation::identity(generators.front().size());
    for (std::size_t j = 0; j < length; ++j)
      acc = acc * generators[pick(rng)];
    out.push_back(std::move(acc));
  }
  return out;
}

Graph generate_petersen()
{
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j)
      pairs.emplace_back(i, j);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < pairs.size(); ++a) {
    for (Vertex b = a + 1; b < pairs.size(); ++b) {
      auto [i, j] = pairs[a];
      auto [k, l] = pairs[b];
      if (i != k && i != l && j != k && j != l)
        edges.emplace_back(a, b);
    }
  }
  return Graph(pairs.size(), edges);
}

}  // namespace at4kit::graphcheck
