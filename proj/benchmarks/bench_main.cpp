#include <benchmark/benchmark.h>

#include "cdecomp/constructions.hpp"
#include "cdecomp/normal_blowup.hpp"
#include "cdecomp/perm_group.hpp"
#include "cdecomp/quasi_types.hpp"
#include "cdecomp/structure.hpp"

using namespace cdecomp;

/// Same generators with no cached stabilizer chain.
static PermGroup fresh(PermGroup const &g)
{
  auto gens = g.generators();
  return PermGroup(g.degree(), std::vector<Perm>(gens.begin(), gens.end()));
}

static void BM_SymmetricOrder(benchmark::State &state)
{
  auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Point> cyc(n);
  for (Point i = 0; i < n; ++i)
    cyc[i] = (i + 1) % n;
  std::vector<Perm> gens{Perm(cyc), Perm::from_cycles(n, {{0, 1}})};
  for (auto _ : state) {
    PermGroup g(n, gens);
    benchmark::DoNotOptimize(g.chain().base().size());
  }
}
BENCHMARK(BM_SymmetricOrder)->Arg(16)->Arg(64)->Arg(128);

static void BM_MinimalNormalsC3WrD8(benchmark::State &state)
{
  auto c3 = example_c3_wr_d8();
  for (auto _ : state) {
    auto g = fresh(c3.wreath.group);
    benchmark::DoNotOptimize(minimal_normal_subgroups(g).size());
  }
}
BENCHMARK(BM_MinimalNormalsC3WrD8)->Unit(benchmark::kMillisecond);

static void BM_SetwiseStabilizer(benchmark::State &state)
{
  auto w = wreath_product({symmetric_group(5), symmetric_group(2), WreathAction::Product});
  std::vector<Point> set{0, 1, 2, 3, 4, 7, 11};
  for (auto _ : state) {
    auto g = fresh(w.group);
    benchmark::DoNotOptimize(setwise_stabilizer(g, set).order());
  }
}
BENCHMARK(BM_SetwiseStabilizer)->Unit(benchmark::kMillisecond);

static void BM_SearchSimpleDiagonal(benchmark::State &state)
{
  auto g = named_group("SD_A5");
  for (auto _ : state)
    benchmark::DoNotOptimize(search_invariant_decompositions(g).size());
}
BENCHMARK(BM_SearchSimpleDiagonal)->Unit(benchmark::kMillisecond);

static void BM_BlowupA5WrS2(benchmark::State &state)
{
  auto w = wreath_product({alternating_group(5), symmetric_group(2), WreathAction::Product});
  for (auto _ : state) {
    CellGroup cg(w.group, *w.decomposition);
    benchmark::DoNotOptimize(is_blowup(cg).blowup);
  }
}
BENCHMARK(BM_BlowupA5WrS2)->Unit(benchmark::kMillisecond);

static void BM_TrichotomyDiagonalQuotient(benchmark::State &state)
{
  auto ex = example_diagonal_quotient(alternating_group(5), 1, 2);
  for (auto _ : state) {
    CellGroup cg(ex.group, ex.decomposition);
    benchmark::DoNotOptimize(classify_trichotomy(cg).kind);
  }
}
BENCHMARK(BM_TrichotomyDiagonalQuotient)->Unit(benchmark::kMillisecond);

static void BM_TwistedComponentType(benchmark::State &state)
{
  auto w = twisted_wreath(example_twisted_spec());
  for (auto _ : state) {
    CellGroup cg(w.decomposition, fresh(w.cells.group()));
    benchmark::DoNotOptimize(qp_type(cg).tag);
  }
}
BENCHMARK(BM_TwistedComponentType)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
