#include "at4kit/exactnum.hpp"
#include "at4kit/graphcheck.hpp"
#include "at4kit/higman.hpp"

#include <benchmark/benchmark.h>

using namespace at4kit;

static void BM_Alpha1Enum(benchmark::State& state)
{
  const Integer p = state.range(0);
  const Integer s = (p + 2) * (p + 2) - 2;
  const auto primes = exactnum::primes_up_to(s);
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& ell : primes)
      total += higman::theta_alpha1_enum(p, ell, 0).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_Alpha1Enum)->Arg(3)->Arg(11)->Arg(49);

static void BM_ChiFilterSweep(benchmark::State& state)
{
  for (auto _ : state) {
    std::size_t passing = 0;
    for (int a1 = 0; a1 <= 115; ++a1)
      passing += higman::chi_filter(3, {5, 0, a1, 115 - a1}).passed();
    benchmark::DoNotOptimize(passing);
  }
}
BENCHMARK(BM_ChiFilterSweep);

static void BM_Factorize(benchmark::State& state)
{
  const Integer n = Integer("18446744073709551617") * 1000003;
  for (auto _ : state)
    benchmark::DoNotOptimize(exactnum::factorize(n));
}
BENCHMARK(BM_Factorize);

static void BM_GewirtzConstruction(benchmark::State& state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(graphcheck::construct_gewirtz());
}
BENCHMARK(BM_GewirtzConstruction)->Unit(benchmark::kMillisecond);

static void BM_VerifySrg(benchmark::State& state)
{
  const auto g = graphcheck::generate_gewirtz();
  for (auto _ : state)
    benchmark::DoNotOptimize(graphcheck::verify_srg(g));
}
BENCHMARK(BM_VerifySrg)->Unit(benchmark::kMicrosecond);

static void BM_AuditClosure(benchmark::State& state)
{
  const auto gw = graphcheck::construct_gewirtz();
  const auto group = graphcheck::close_under_composition(gw.symmetries, 100);
  for (auto _ : state)
    benchmark::DoNotOptimize(graphcheck::audit_family_graph(gw.graph, 2, group));
}
BENCHMARK(BM_AuditClosure)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
