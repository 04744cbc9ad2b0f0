#include "at4kit/cli/commands.hpp"

#include "at4kit/at4.hpp"
#include "at4kit/exactnum.hpp"
#include "at4kit/graphcheck.hpp"
#include "at4kit/higman.hpp"
#include "at4kit/parallel.hpp"
#include "at4kit/srg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace at4kit::cli {

namespace {

using json = nlohmann::json;
using graphcheck::Graph;
using graphcheck::Permutation;

constexpr const char* kSchema = "at4kit.report/1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  bool deterministic = false;
  std::optional<unsigned> jobs;
};

json num(const Integer& n)
{
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(n);
  return n.str();
}

json num(const Rational& q)
{
  return exactnum::to_string(q);
}

json nums(const std::vector<Integer>& xs)
{
  json out = json::array();
  for (const auto& x : xs)
    out.push_back(num(x));
  return out;
}

json primes(const exactnum::PrimeSet& set)
{
  return nums(set.values());
}

json status_json(const higman::Status& s)
{
  json out{{"outcome", higman::to_string(s.outcome)}};
  if (!s.code.empty())
    out["code"] = s.code;
  if (!s.condition.empty())
    out["condition"] = s.condition;
  return out;
}

template <class T, class Fn>
json gated(const higman::Gated<T>& g, Fn fill)
{
  json out{{"status", status_json(g.status)}};
  if (g.applicable())
    fill(out, g.value);
  return out;
}

Integer parse_integer(const std::string& text, const char* what)
{
  bool ok = !text.empty();
  for (std::size_t i = 0; i < text.size() && ok; ++i)
    ok = std::isdigit(static_cast<unsigned char>(text[i])) || (i == 0 && text[i] == '-' && text.size() > 1);
  if (!ok)
    throw UsageError(std::string("invalid ") + what + " '" + text + "'");
  return Integer(text);
}

std::string scalar_text(const json& j)
{
  if (j.is_string())
    return j.get<std::string>();
  return j.dump();
}

bool inline_array(const json& j)
{
  for (const auto& x : j) {
    if (x.is_structured() || x.is_string())
      return false;
  }
  return true;
}

void flatten(const json& j, const std::string& path, std::string& out)
{
  if (j.is_object()) {
    if (j.empty())
      out += path + ": {}\n";
    for (const auto& [key, value] : j.items())
      flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (j.is_array() && (j.empty() || inline_array(j))) {
    out += path + ": [";
    for (std::size_t i = 0; i < j.size(); ++i)
      out += (i ? ", " : "") + scalar_text(j[i]);
    out += "]\n";
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], path + "." + std::to_string(i), out);
  } else {
    out += path + ": " + scalar_text(j) + "\n";
  }
}

std::string render(const json& report, const std::string& format)
{
  if (format == "json")
    return report.dump(2) + "\n";
  std::string out;
  flatten(report, "", out);
  return out;
}

unsigned resolve_jobs(const Options& opt)
{
  if (opt.jobs)
    return *opt.jobs;
  if (const char* env = std::getenv("AT4_JOBS"); env && *env) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 1 || value > 1024)
      throw UsageError(std::string("AT4_JOBS must be a positive integer, got '") + env + "'");
    return static_cast<unsigned>(value);
  }
  return 1;
}

std::ifstream open_input(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  return in;
}

graphcheck::LoadedGraph read_graph(const std::string& path)
{
  auto in = open_input(path);
  try {
    return graphcheck::load_graph(in);
  } catch (const graphcheck::ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

json bound_row(const at4::At4Params& params)
{
  auto arr = at4::intersection_array(params);
  auto [theta1, theta4] = at4::tight_eigenvalues(params.p(), arr.b(1));
  auto fb = at4::fundamental_bound_check(arr.b(0), arr.a(1), arr.b(1), theta1, theta4);
  return {{"r", num(params.r())}, {"array", arr.to_string()}, {"fundamental_bound", at4::to_string(fb.verdict)}};
}

json spectrum_bounds_json(const Integer& p)
{
  return gated(higman::arc_transitive_spectrum_bounds(p), [](json& out, const higman::SpectrumBounds& b) {
    out["lower"] = primes(b.lower);
    out["upper"] = primes(b.upper);
  });
}

json edge_spectrum_json(const Integer& p)
{
  return gated(higman::edge_stabilizer_spectrum(p),
               [](json& out, const exactnum::PrimeSet& set) { out["primes"] = primes(set); });
}

json centralizer_json(const higman::Gated<higman::CentralizerFilter>& g)
{
  return gated(g, [](json& out, const higman::CentralizerFilter& c) {
    out["s"] = num(c.s);
    out["admissible_orders"] = primes(c.admissible_orders);
    out["fix_size"] = num(c.fix_size);
    out["alpha1"] = num(c.alpha1);
  });
}

json solvable_json(const higman::Gated<higman::SolvableCases>& g)
{
  return gated(g, [](json& out, const higman::SolvableCases& c) {
    out["s"] = num(c.s);
    out["p_plus_2_power_of_3"] = c.p_plus_2_power_of_3;
    out["s_congruent_1_mod_3"] = c.s_congruent_1_mod_3;
    out["normal_s_subgroup_case"] = c.normal_s_subgroup_case;
    out["p_plus_2_composite"] = c.p_plus_2_composite;
    out["elementary_abelian_case"] = c.elementary_abelian_case;
    json ts = json::array();
    for (const auto& t : c.transversals) {
      ts.push_back({{"t", num(t.t)}, {"e", num(t.e)}, {"e_at_least_2", t.e_at_least_2},
                    {"s_divides_gl", t.s_divides_gl}});
    }
    out["transversals"] = ts;
    out["any_case_open"] = c.any_case_open();
  });
}

json scan_entry(const Integer& p)
{
  const Integer s = p * p + 4 * p + 2;
  json e;
  e["p"] = num(p);
  e["prime_power"] = exactnum::is_prime_power(p);
  e["s"] = num(s);
  e["p_plus_2_prime"] = exactnum::is_prime(p + 2);
  e["s_prime"] = exactnum::is_prime(s);
  auto rs = at4::feasible_r(p);
  e["feasible_r"] = nums(rs);
  json arrays = json::array();
  for (const auto& r : rs)
    arrays.push_back(bound_row(at4::At4Params(p, r)));
  e["arrays"] = arrays;
  e["spectrum_bounds"] = spectrum_bounds_json(p);
  e["edge_stabilizer_spectrum"] = edge_spectrum_json(p);
  e["centralizer_filter"] = centralizer_json(higman::centralizer_order_filter(p));
  e["exclusion"] = status_json(higman::exclusion_arithmetic(p).status);
  return e;
}

json cmd_scan(const std::string& lo_text, const std::string& hi_text, unsigned jobs)
{
  const Integer lo = parse_integer(lo_text, "p_min");
  const Integer hi = parse_integer(hi_text, "p_max");
  if (lo < 2 || hi < lo)
    throw UsageError("scan requires 2 <= p_min <= p_max");
  const auto count = static_cast<std::size_t>(hi - lo + 1);
  auto entries = parallel_map(count, jobs, [&](std::size_t i) { return scan_entry(lo + i); });
  json report;
  report["input"] = {{"p_min", num(lo)}, {"p_max", num(hi)}};
  report["entries"] = entries;
  return report;
}

at4::At4Params checked_params(const Integer& p, const Integer& r)
{
  if (auto why = at4::At4Params::violation(p, r); !why.empty())
    throw UsageError("invalid (p, r) = (" + p.str() + ", " + r.str() + "): " + why);
  return at4::At4Params(p, r);
}

json srg_json(const at4::SrgWithEigenvalues& q)
{
  return {{"params", q.params.to_string()}, {"theta_plus", num(q.theta_plus)}, {"theta_minus", num(q.theta_minus)}};
}

json cmd_array(const std::string& p_text, const std::string& r_text)
{
  const Integer p = parse_integer(p_text, "p");
  const Integer r = parse_integer(r_text, "r");
  auto params = checked_params(p, r);
  auto arr = at4::intersection_array(params);
  auto [theta1, theta4] = at4::tight_eigenvalues(p, arr.b(1));
  auto fb = at4::fundamental_bound_check(arr.b(0), arr.a(1), arr.b(1), theta1, theta4);
  auto local = at4::local_eigen_from_array(arr.b(1), theta1, theta4);
  auto anti = at4::antipodal_check(arr);
  auto d = at4::derived(params);

  json layers = json::array(), as = json::array();
  for (std::size_t i = 0; i <= arr.diameter(); ++i) {
    layers.push_back(num(arr.k(i)));
    as.push_back(num(arr.a(i)));
  }
  json report;
  report["input"] = {{"p", num(p)}, {"r", num(r)}};
  report["array"] = arr.to_string();
  report["b"] = nums(arr.bs());
  report["c"] = nums(arr.cs());
  report["a"] = as;
  report["layer_sizes"] = layers;
  report["vertices"] = num(exactnum::to_integer(arr.vertex_count()));
  report["antipodal"] = {{"antipodal", anti.antipodal}, {"r", num(anti.r)}};
  report["eigenvalues"] = {{"theta1", num(theta1)},
                           {"theta4", num(theta4)},
                           {"theta1_is_root", at4::characteristic_value(arr, theta1) == 0},
                           {"theta4_is_root", at4::characteristic_value(arr, theta4) == 0}};
  report["fundamental_bound"] = {{"verdict", at4::to_string(fb.verdict)}, {"lhs", num(fb.lhs)}, {"rhs", num(fb.rhs)}};
  report["local_eigenvalues"] = {{"p", num(local.p)}, {"q", num(local.q)}};
  report["derived"] = {{"v", num(d.v)},
                       {"antipodal_classes", num(d.antipodal_classes)},
                       {"kernel_bound", num(d.kernel_bound)},
                       {"triple_constant", num(d.triple_constant)}};
  report["quotient"] = srg_json(at4::quotient_params(p));
  report["second_subconstituent"] = {{"array", at4::second_subconstituent_array(params).to_string()},
                                     {"quotient", srg_json(at4::second_subconstituent_quotient(p))}};
  return report;
}

std::string branch_name(higman::OrderBranch b)
{
  switch (b) {
    case higman::OrderBranch::below_p:
      return "below-p";
    case higman::OrderBranch::equals_p:
      return "equals-p";
    case higman::OrderBranch::above_p:
      return "above-p";
  }
  return "unknown";
}

json cmd_profile(const std::string& p_text, const std::string& r_text, const std::string& ell_text,
                 const std::string& fix_text)
{
  const Integer p = parse_integer(p_text, "p");
  const Integer r = parse_integer(r_text, "r");
  const Integer ell = parse_integer(ell_text, "l");
  const Integer fix = parse_integer(fix_text, "fix");
  auto params = checked_params(p, r);
  if (!exactnum::is_prime(ell))
    throw UsageError("l = " + ell.str() + " is not prime");
  if (fix < 0)
    throw UsageError("fix must be non-negative");
  const Integer s = p * p + 4 * p + 2;

  json report;
  report["input"] = {{"p", num(p)}, {"r", num(r)}, {"l", num(ell)}, {"fix", num(fix)}};
  {
    auto g = higman::gamma_congruences(params, ell);
    auto f = higman::phi_congruences(params, ell);
    report["layer_residues"] = nums({g.begin(), g.end()});
    report["second_subconstituent_residues"] = nums({f.begin(), f.end()});
  }
  report["fix_bound"] = num(higman::gamma_fix_bound(params));
  report["order_classification"] =
      gated(higman::gamma_order_classification(params), [&](json& out, const higman::OrderClassification& c) {
        out["up_to_p"] = primes(c.up_to_p);
        out["p_plus_2"] = c.p_plus_2 ? num(*c.p_plus_2) : json(nullptr);
        out["large_divisors_of_s"] = primes(c.large_divisors_of_s);
        out["with_fixed_points"] = primes(c.with_fixed_points);
        out["fixed_point_free"] = primes(c.fixed_point_free);
        out["notes"] = c.notes;
        out["verdict"] = c.classify(ell);
      });

  const auto local = srg::local_family_params(p);
  json local_json{{"params", local.to_string()}, {"fix_bound", num(srg::fixed_point_order_bound(local))}};
  if (p < 3) {
    local_json["alpha1"] = {{"status", status_json(higman::Status::not_applicable("p-not-above-2", "requires p > 2"))}};
  } else if (fix > s) {
    local_json["alpha1"] = {
        {"status", status_json(higman::Status::failed("fix-exceeds-s", "fix = " + fix.str() + " exceeds " + s.str()))}};
  } else {
    auto prog = higman::theta_alpha1_progression(p, ell, fix);
    json a{{"status", status_json(higman::Status::ok())},
           {"first", num(prog.first)},
           {"step", num(prog.step)},
           {"count", num(prog.count)}};
    if (prog.count <= 64)
      a["values"] = nums(higman::theta_alpha1_enum(p, ell, fix));
    local_json["alpha1"] = a;
  }
  local_json["fixed_structure"] =
      gated(higman::theta_fixed_structure(p, ell), [](json& out, const higman::FixedStructure& f) {
        out["branch"] = branch_name(f.branch);
        out["fix_bound"] = num(f.fix_bound);
        out["nonempty_fix_admitted"] = f.nonempty_fix_admitted;
        if (f.fix_residue_mod_p)
          out["fix_residue_mod_p"] = num(*f.fix_residue_mod_p);
        if (!f.component_valencies.empty())
          out["component_valencies"] = nums(f.component_valencies);
        if (f.component_min_size)
          out["component_min_size"] = num(*f.component_min_size);
        out["fixed_point_free"] = {{"divides_s", f.free_divides_s},
                                   {"divides_p_plus_2", f.free_divides_p_plus_2},
                                   {"involution_even_p", f.free_involution_even_p},
                                   {"admitted", f.fixed_point_free_admitted()}};
        out["notes"] = f.notes;
      });
  report["local"] = local_json;
  return report;
}

json cmd_bounds(const std::string& p_text)
{
  const Integer p = parse_integer(p_text, "p");
  if (p < 2)
    throw UsageError("bounds requires p >= 2");
  const auto local = srg::local_family_params(p);
  const auto spec = srg::srg_spectrum(local);
  auto ex = higman::exclusion_arithmetic(p);

  json report;
  report["input"] = {{"p", num(p)}};
  report["local"] = {{"params", local.to_string()},
                     {"spectrum",
                      {{"principal", num(spec.principal)},
                       {"theta_plus", num(spec.theta_plus)},
                       {"theta_minus", num(spec.theta_minus)},
                       {"mult_plus", num(spec.mult_plus)},
                       {"mult_minus", num(spec.mult_minus)}}},
                     {"clique_bound", num(srg::clique_bound(p))},
                     {"fix_bound", num(srg::fixed_point_order_bound(local))}};
  report["block_sizes"] = nums(higman::block_size_filter(p));
  report["spectrum_bounds"] = spectrum_bounds_json(p);
  report["edge_stabilizer_spectrum"] = edge_spectrum_json(p);
  report["subgraph_cases"] =
      gated(higman::subgraph_cases(p), [](json& out, const std::vector<higman::SubgraphCase>& cases) {
        json list = json::array();
        for (const auto& c : cases) {
          list.push_back({{"label", c.label},
                          {"params", c.params.to_string()},
                          {"t", num(c.t)},
                          {"s", num(c.s)},
                          {"square_condition", c.square_condition},
                          {"vertex_condition", c.vertex_condition},
                          {"multiplicity_condition", c.multiplicity_condition},
                          {"within_fix_bound", c.within_fix_bound},
                          {"status", status_json(c.status)},
                          {"notes", c.notes}});
        }
        out["cases"] = list;
      });
  json exclusion{{"p_is_prime_power", ex.p_is_prime_power},
                 {"s", num(ex.s)},
                 {"p_plus_2_prime", ex.p_plus_2_prime},
                 {"s_prime", ex.s_prime},
                 {"s_in_known_list", ex.s_in_known_list},
                 {"gcd_s2m1_p_plus_2", num(ex.gcd_s2m1_p_plus_2)},
                 {"gcd_divides_3", ex.gcd_divides_3},
                 {"centralizer", centralizer_json(ex.centralizer)},
                 {"solvable", solvable_json(ex.solvable)},
                 {"status", status_json(ex.status)}};
  if (ex.l2_order)
    exclusion["l2_order"] = num(*ex.l2_order);
  report["exclusion"] = exclusion;
  return report;
}

json cmd_verify(const std::string& path)
{
  auto loaded = read_graph(path);
  const auto& g = loaded.graph;
  json report;
  report["input"] = {{"graph", path}};
  report["vertices"] = g.size();
  report["edges"] = g.edge_count();
  report["connected"] = g.connected();
  report["asymmetries"] = loaded.asymmetries;
  if (auto srg = graphcheck::verify_srg(g))
    report["srg"] = srg->to_string();
  else
    report["srg"] = nullptr;
  if (auto drg = graphcheck::verify_drg(g))
    report["drg"] = drg->to_string();
  else
    report["drg"] = nullptr;
  return report;
}

json entry_json(const graphcheck::AuditEntry& e)
{
  json out{{"index", e.index}, {"automorphism", e.automorphism}, {"pass", e.pass}};
  if (e.automorphism) {
    out["order"] = e.order;
    out["profile"] = e.profile;
    out["chi1"] = num(e.chi1);
    out["chi2"] = num(e.chi2);
    out["integral"] = e.integral;
    out["prime_order"] = e.prime_order;
    out["fixed_points"] = e.fixed_points;
    if (e.residue_condition)
      out["residue_condition"] = *e.residue_condition;
    if (e.alpha1_admissible)
      out["alpha1_admissible"] = *e.alpha1_admissible;
    if (e.fix_bound_ok)
      out["fix_bound_ok"] = *e.fix_bound_ok;
  }
  if (!e.failure.empty())
    out["failure"] = e.failure;
  return out;
}

json cmd_audit(const std::string& graph_path, const std::string& perms_path, const std::string& p_text,
               std::size_t closure, bool failures_only, unsigned jobs, bool& findings)
{
  const Integer p = parse_integer(p_text, "p");
  if (p < 2)
    throw UsageError("audit requires p >= 2");
  auto loaded = read_graph(graph_path);
  std::vector<Permutation> perms;
  {
    auto in = open_input(perms_path);
    try {
      perms = graphcheck::load_permutations(in, loaded.graph.size());
    } catch (const graphcheck::ParseError& e) {
      throw InputError(perms_path + ": " + e.what());
    }
  }
  auto sigmas = closure > 0 ? graphcheck::close_under_composition(perms, closure) : perms;
  auto audit = graphcheck::audit_family_graph(loaded.graph, p, sigmas, jobs);
  findings = !audit.all_pass();

  json report;
  report["input"] = {{"graph", graph_path}, {"permutations", perms_path}, {"p", num(p)}, {"closure", closure}};
  report["asymmetries"] = loaded.asymmetries;
  report["expected"] = audit.expected.to_string();
  report["measured"] = audit.measured ? json(audit.measured->to_string()) : json(nullptr);
  report["precondition_ok"] = audit.precondition_ok;
  if (!audit.precondition_ok)
    report["precondition_failure"] = audit.precondition_failure;
  else
    report["fix_bound"] = num(audit.fix_bound);
  report["audited"] = audit.entries.size();
  report["passed"] = audit.passed;
  report["failed"] = audit.failed;
  json failing = json::array(), entries = json::array();
  for (const auto& e : audit.entries) {
    if (!e.pass)
      failing.push_back(e.index);
    if (!failures_only || !e.pass)
      entries.push_back(entry_json(e));
  }
  report["failing_indices"] = failing;
  report["entries"] = entries;
  report["verdict"] = findings ? "fail" : "pass";
  return report;
}

void write_text_file(const std::string& path, const std::string& text)
{
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text))
    throw InputError("cannot write '" + path + "'");
}

void cmd_generate(const std::string& kind, const std::string& perms_path, std::ostream& out)
{
  Graph g;
  std::vector<Permutation> gens;
  if (kind == "petersen") {
    g = graphcheck::generate_petersen();
    // vertex i is the i-th 2-subset of {0..4} in lexicographic order; induce
    // the transposition (0 1) and the 5-cycle i -> i+1
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j)
        pairs.emplace_back(i, j);
    }
    auto induce = [&](auto f) {
      std::vector<graphcheck::Vertex> images;
      for (auto [i, j] : pairs) {
        auto a = f(i), b = f(j);
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        images.push_back(static_cast<graphcheck::Vertex>(std::find(pairs.begin(), pairs.end(), key) - pairs.begin()));
      }
      return Permutation(std::move(images));
    };
    gens.push_back(induce([](int x) { return x < 2 ? 1 - x : x; }));
    gens.push_back(induce([](int x) { return (x + 1) % 5; }));
  } else if (kind == "gewirtz") {
    auto c = graphcheck::construct_gewirtz();
    g = std::move(c.graph);
    gens = std::move(c.symmetries);
  } else {
    throw UsageError("unknown graph '" + kind + "'");
  }
  out << graphcheck::write_graph(g);
  if (!perms_path.empty())
    write_text_file(perms_path, graphcheck::write_permutations(gens));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Arithmetic and graph checks for AT4(p, p+2, r) distance-regular graphs", "at4"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--deterministic", opt.deterministic, "Omit timing from reports");
  app.add_option("--jobs", opt.jobs, "Worker threads (default: $AT4_JOBS or 1)")->check(CLI::Range(1, 1024));

  std::string a1, a2, a3, fix = "0", perms_out;
  std::size_t closure = 0;
  bool failures_only = false;

  auto* scan = app.add_subcommand("scan", "Summarize a range of p");
  scan->add_option("p_min", a1)->required();
  scan->add_option("p_max", a2)->required();

  auto* array = app.add_subcommand("array", "Intersection array and derived data for AT4(p, p+2, r)");
  array->add_option("p", a1)->required();
  array->add_option("r", a2)->required();

  auto* profile = app.add_subcommand("profile", "Congruences and admissible profiles for an automorphism order");
  profile->add_option("p", a1)->required();
  profile->add_option("r", a2)->required();
  profile->add_option("l", a3, "Prime order")->required();
  profile->add_option("--fix", fix, "Fixed vertices in the local graph");

  auto* bounds = app.add_subcommand("bounds", "Prime spectrum bounds and exclusion arithmetic for p");
  bounds->add_option("p", a1)->required();

  auto* verify = app.add_subcommand("verify", "Check a graph file for strong and distance regularity");
  verify->add_option("graph", a1)->required();

  auto* audit = app.add_subcommand("audit", "Audit automorphisms of a local graph");
  audit->add_option("graph", a1)->required();
  audit->add_option("permutations", a2)->required();
  audit->add_option("p", a3)->required();
  audit->add_option("--closure", closure, "Audit the closure of the permutations, up to N elements");
  audit->add_flag("--failures-only", failures_only, "List failing entries only");

  auto* generate = app.add_subcommand("generate", "Write a known graph in adjacency format");
  generate->add_option("graph", a1, "petersen or gewirtz")->required();
  generate->add_option("--perms", perms_out, "Also write generating automorphisms to this file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "at4: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const unsigned jobs = resolve_jobs(opt);
    if (generate->parsed()) {
      cmd_generate(a1, perms_out, out);
      return kSuccess;
    }
    const auto start = std::chrono::steady_clock::now();
    json report;
    bool findings = false;
    std::string command;
    if (scan->parsed()) {
      command = "scan";
      report = cmd_scan(a1, a2, jobs);
    } else if (array->parsed()) {
      command = "array";
      report = cmd_array(a1, a2);
    } else if (profile->parsed()) {
      command = "profile";
      report = cmd_profile(a1, a2, a3, fix);
    } else if (bounds->parsed()) {
      command = "bounds";
      report = cmd_bounds(a1);
    } else if (verify->parsed()) {
      command = "verify";
      report = cmd_verify(a1);
    } else {
      command = "audit";
      report = cmd_audit(a1, a2, a3, closure, failures_only, jobs, findings);
    }
    report["schema"] = kSchema;
    report["command"] = command;
    if (!opt.deterministic) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    }
    out << render(report, opt.format);
    return findings ? kFindings : kSuccess;
  } catch (const UsageError& e) {
    err << "at4: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "at4: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "at4: " << e.what() << "\n";
    return kInput;
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i)
    args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace at4kit::cli
