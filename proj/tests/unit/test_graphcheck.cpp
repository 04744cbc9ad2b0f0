#include "at4kit/graphcheck.hpp"
#include "at4kit/parallel.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

using namespace at4kit;
using namespace at4kit::graphcheck;

namespace {

std::string read_file(const std::string& name)
{
  std::ifstream in(std::string(AT4KIT_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph cycle(std::size_t n)
{
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < n; ++i)
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph(n, e);
}

const GewirtzConstruction& gewirtz()
{
  static const GewirtzConstruction g = construct_gewirtz();
  return g;
}

}  // namespace

TEST(Graph, BuildAndQuery)
{
  Graph g(4, {{0, 1}, {1, 2}, {2, 1}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.connected());
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  auto h = cycle(5).induced({0, 1, 2});
  EXPECT_EQ(h.edge_count(), 2u);
}

TEST(Graph, PermutationBasics)
{
  Permutation a({1, 2, 0, 3});
  Permutation b({0, 1, 3, 2});
  EXPECT_EQ(a.order(), 3u);
  EXPECT_EQ((a * b).order(), 4u);
  EXPECT_EQ((a * b)(2), 0u);
  EXPECT_EQ((a * b)(1), 3u);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(a.fixed_points(), (std::vector<Vertex>{3}));
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST(Graph, ParseAndWriteRoundTrip)
{
  auto loaded = load_graph("# pentagon\nn 5\n0: 1 4\n1: 0 2\n2: 1 3\n3: 2 4\n4: 3 0\n");
  EXPECT_TRUE(loaded.asymmetries.empty());
  EXPECT_EQ(loaded.graph, cycle(5));
  const auto text = write_graph(loaded.graph);
  EXPECT_EQ(text, write_graph(load_graph(text).graph));
  EXPECT_EQ(load_graph(text).graph, loaded.graph);
}

TEST(Graph, AsymmetricListingIsClosed)
{
  auto loaded = load_graph("n 3\n0: 1\n1: 2\n2: 1\n");
  ASSERT_EQ(loaded.asymmetries.size(), 1u);
  EXPECT_TRUE(loaded.graph.adjacent(1, 0));
  EXPECT_EQ(loaded.graph.edge_count(), 2u);
}

TEST(Graph, ParseErrorsCarryLineNumbers)
{
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      load_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("0: 1\n"), 1u);
  EXPECT_EQ(line_of("n 3\n0: 1\n1: 7\n"), 3u);
  EXPECT_EQ(line_of("n 3\n\n0: 0\n"), 3u);
  EXPECT_EQ(line_of("n 3\n0 1\n"), 2u);
  EXPECT_EQ(line_of("n x\n"), 1u);
  EXPECT_THROW(load_graph(""), ParseError);
  EXPECT_THROW(load_permutations("0 1\n", 3), ParseError);
  EXPECT_THROW(load_permutations("0 1 1\n", 3), ParseError);
  EXPECT_EQ(load_permutations("# id\n0 1 2\n\n2 0 1\n", 3).size(), 2u);
}

TEST(Graph, PermutationWriteRoundTrip)
{
  std::vector<Permutation> perms{Permutation({2, 0, 1}), Permutation::identity(3)};
  const auto text = write_permutations(perms);
  EXPECT_EQ(load_permutations(text, 3), perms);
  EXPECT_EQ(write_permutations(load_permutations(text, 3)), text);
}

TEST(GraphCheck, PetersenIsStronglyRegular)
{
  const auto g = generate_petersen();
  auto srg = verify_srg(g);
  ASSERT_TRUE(srg);
  EXPECT_EQ(*srg, (srg::SrgParams{10, 3, 0, 1}));
  auto drg = verify_drg(g);
  ASSERT_TRUE(drg);
  EXPECT_EQ(drg->to_string(), "{3,2;1,1}");
  DistanceTable d(g);
  EXPECT_EQ(d.diameter(), 2u);
}

TEST(GraphCheck, NonExamples)
{
  Graph path(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(verify_srg(path));
  EXPECT_FALSE(verify_srg(Graph(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(verify_drg(path) == std::nullopt);
  auto c6 = verify_drg(cycle(6));
  ASSERT_TRUE(c6);
  EXPECT_EQ(c6->to_string(), "{2,1,1;1,1,2}");
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_FALSE(verify_srg(k4));
}

TEST(GraphCheck, DistancePartitionOfCycle)
{
  auto part = distance_partition(cycle(6), 0);
  ASSERT_EQ(part.layers.size(), 4u);
  EXPECT_EQ(part.layers[1], (std::vector<Vertex>{1, 5}));
  EXPECT_EQ(part.layers[3], (std::vector<Vertex>{3}));
}

TEST(GraphCheck, GewirtzConstruction)
{
  const auto& gw = gewirtz();
  EXPECT_EQ(gw.hyperovals_total, 168u);
  EXPECT_EQ(gw.class_count, 3u);
  auto srg = verify_srg(gw.graph);
  ASSERT_TRUE(srg);
  EXPECT_EQ(*srg, srg::local_family_params(2));
  auto drg = verify_drg(gw.graph);
  ASSERT_TRUE(drg);
  EXPECT_EQ(drg->to_string(), "{10,9;1,2}");
  ASSERT_FALSE(gw.symmetries.empty());
  for (const auto& s : gw.symmetries) {
    EXPECT_TRUE(is_automorphism(gw.graph, s));
    EXPECT_FALSE(s.is_identity());
  }
  EXPECT_EQ(generate_gewirtz(), gw.graph);
}

TEST(GraphCheck, GewirtzDataFileMatchesConstruction)
{
  auto loaded = load_graph(read_file("gewirtz.adj"));
  EXPECT_TRUE(loaded.asymmetries.empty());
  EXPECT_EQ(loaded.graph, gewirtz().graph);
  EXPECT_EQ(write_graph(loaded.graph), read_file("gewirtz.adj"));
}

TEST(GraphCheck, GewirtzAlphaProfilesSatisfyCharacterFilter)
{
  const auto& gw = gewirtz();
  auto group = close_under_composition(gw.symmetries, 150);
  ASSERT_GE(group.size(), 100u);
  std::set<Permutation> distinct(group.begin(), group.end());
  EXPECT_EQ(distinct.size(), group.size());
  DistanceTable dist(gw.graph);
  for (const auto& g : group) {
    auto prof = alpha_profile(gw.graph, dist, g);
    ASSERT_EQ(prof.size(), 3u);
    ASSERT_EQ(prof[0] + prof[1] + prof[2], 56u);
    ASSERT_EQ(prof[0], g.fixed_points().size());
    higman::ThetaProfile tp{g.order(), prof[0], prof[1], prof[2]};
    auto chi = higman::chi_values(2, tp);
    ASSERT_TRUE(exactnum::is_integral(chi.chi1));
    ASSERT_TRUE(exactnum::is_integral(chi.chi2));
    if (!g.is_identity())
      ASSERT_LE(prof[0], 14u);
  }
}

TEST(GraphCheck, FixSubgraphOfInvolution)
{
  const auto& gw = gewirtz();
  auto group = close_under_composition(gw.symmetries, 400);
  bool seen = false;
  for (const auto& g : group) {
    if (g.order() != 2)
      continue;
    auto fix = fix_subgraph(gw.graph, {g});
    EXPECT_EQ(fix.size(), common_fixed_points(56, {g}).size());
    EXPECT_LE(fix.size(), 14u);
    seen = true;
  }
  EXPECT_TRUE(seen);
}

TEST(GraphCheck, AuditGewirtzClosurePasses)
{
  const auto& gw = gewirtz();
  auto group = close_under_composition(gw.symmetries, 120);
  auto report = audit_family_graph(gw.graph, 2, group, 2);
  EXPECT_TRUE(report.precondition_ok);
  EXPECT_EQ(report.fix_bound, 14);
  EXPECT_EQ(report.entries.size(), group.size());
  EXPECT_EQ(report.failed, 0u);
  EXPECT_TRUE(report.all_pass());
  for (std::size_t i = 0; i < report.entries.size(); ++i)
    EXPECT_EQ(report.entries[i].index, i);
}

TEST(GraphCheck, AuditFlagsCorruptedPermutation)
{
  const auto& gw = gewirtz();
  auto perms = gw.symmetries;
  auto images = perms[0].images();
  std::swap(images[0], images[1]);
  const std::size_t bad = perms.size();
  perms.emplace_back(images);
  auto report = audit_family_graph(gw.graph, 2, perms);
  EXPECT_FALSE(report.all_pass());
  EXPECT_EQ(report.failed, 1u);
  EXPECT_FALSE(report.entries[bad].pass);
  EXPECT_FALSE(report.entries[bad].automorphism);
  EXPECT_EQ(report.entries[bad].failure, "not an automorphism");
}

TEST(GraphCheck, AuditRejectsWrongGraph)
{
  auto report = audit_family_graph(generate_petersen(), 2, {Permutation::identity(10)});
  EXPECT_FALSE(report.precondition_ok);
  EXPECT_FALSE(report.all_pass());
}

TEST(GraphCheck, AuditProfileFlagsImpossibleDistribution)
{
  auto ok = audit_profile(2, 1, {1, 56, 0, 0});
  EXPECT_TRUE(ok.pass);
  auto bad = audit_profile(3, 5, {5, 0, 115, 0});
  EXPECT_FALSE(bad.integral);
  EXPECT_FALSE(bad.pass);
  auto residue = audit_profile(3, 5, {5, 0, 23, 92});
  EXPECT_TRUE(residue.integral);
  ASSERT_TRUE(residue.residue_condition);
  EXPECT_FALSE(*residue.residue_condition);
  EXPECT_FALSE(residue.pass);
  auto good = audit_profile(3, 23, {23, 0, 23, 92});
  EXPECT_TRUE(good.pass);
  ASSERT_TRUE(good.alpha1_admissible);
  EXPECT_TRUE(*good.alpha1_admissible);
}

TEST(GraphCheck, PetersenDataFiles)
{
  auto loaded = load_graph(read_file("petersen.adj"));
  EXPECT_EQ(loaded.graph, generate_petersen());
  auto perms = load_permutations(read_file("petersen.perm"), 10);
  auto group = close_under_composition(perms, 1000);
  EXPECT_EQ(group.size(), 120u);
  for (const auto& g : group)
    ASSERT_TRUE(is_automorphism(loaded.graph, g));
}

TEST(GraphCheck, CorruptedDataFileFailsAudit)
{
  auto g = load_graph(read_file("gewirtz.adj")).graph;
  auto perms = load_permutations(read_file("gewirtz_corrupt.perm"), 56);
  auto report = audit_family_graph(g, 2, perms);
  EXPECT_FALSE(report.all_pass());
  EXPECT_EQ(report.failed, 1u);
  EXPECT_FALSE(report.entries.back().automorphism);
}

TEST(GraphCheck, ClosureAndRandomProducts)
{
  auto gens = load_permutations(read_file("petersen.perm"), 10);
  auto small = close_under_composition(gens, 7);
  EXPECT_EQ(small.size(), 7u);
  EXPECT_TRUE(small.front().is_identity());
  auto a = random_products(gens, 20, 8, 99);
  auto b = random_products(gens, 20, 8, 99);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 20u);
}

TEST(Parallel, MapKeepsOrderAndRethrows)
{
  auto seq = parallel_map(200, 1, [](std::size_t i) { return i * i; });
  auto par = parallel_map(200, 4, [](std::size_t i) { return i * i; });
  EXPECT_EQ(seq, par);
  EXPECT_THROW(parallel_map(10, 3,
                            [](std::size_t i) {
                              if (i == 7)
                                throw std::runtime_error("x");
                              return i;
                            }),
               std::runtime_error);
}

TEST(Parallel, AuditIndependentOfJobs)
{
  const auto& gw = gewirtz();
  auto group = close_under_composition(gw.symmetries, 60);
  auto a = audit_family_graph(gw.graph, 2, group, 1);
  auto b = audit_family_graph(gw.graph, 2, group, 3);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].profile, b.entries[i].profile);
    EXPECT_EQ(a.entries[i].pass, b.entries[i].pass);
  }
}
