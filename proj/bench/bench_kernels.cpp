#include <benchmark/benchmark.h>

#include <vector>

#include "vecfield/corpus/generator.hpp"
#include "vecfield/field/field.hpp"
#include "vecfield/provider/provider.hpp"
#include "vecfield/reconstruct/box.hpp"
#include "vecfield/reconstruct/evolve.hpp"
#include "vecfield/reconstruct/init.hpp"

using namespace vecfield;

namespace {

Molecule bench_molecule(int atoms) {
  CorpusSpec spec;
  spec.min_atoms = spec.max_atoms = atoms;
  spec.max_heavy = atoms / 2 + 1;
  spec.max_radius = 8.0;
  return generate_molecule(spec, 5);
}

std::vector<Vec3> queries(const Molecule& mol, std::size_t n) {
  return uniform_points(Box::around(mol, 2.0), n, 3);
}

void BM_FieldBatchParallel(benchmark::State& state) {
  const Molecule mol = bench_molecule(static_cast<int>(state.range(0)));
  const auto qs = queries(mol, 4096);
  const FieldParams params;
  for (auto _ : state) benchmark::DoNotOptimize(field_batch(qs, mol, params));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(qs.size()));
}

void BM_FieldBatchSerial(benchmark::State& state) {
  const Molecule mol = bench_molecule(static_cast<int>(state.range(0)));
  const auto qs = queries(mol, 4096);
  const FieldParams params;
  for (auto _ : state) benchmark::DoNotOptimize(serial::field_batch(qs, mol, params));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(qs.size()));
}

void BM_EvolveParallel(benchmark::State& state) {
  const Molecule mol = bench_molecule(static_cast<int>(state.range(0)));
  const AnalyticProvider provider(mol, FieldParams{});
  const ReconstructionConfig cfg;
  const auto init = init_uniform(cfg.budget, cfg.element_count, Box::around(mol, cfg.padding), 7);
  for (auto _ : state) benchmark::DoNotOptimize(evolve(provider, init, cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(init.particle_count()));
}

void BM_EvolveSerial(benchmark::State& state) {
  const Molecule mol = bench_molecule(static_cast<int>(state.range(0)));
  const AnalyticProvider provider(mol, FieldParams{});
  const ReconstructionConfig cfg;
  const auto init = init_uniform(cfg.budget, cfg.element_count, Box::around(mol, cfg.padding), 7);
  for (auto _ : state) benchmark::DoNotOptimize(serial::evolve(provider, init, cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(init.particle_count()));
}

}  // namespace

BENCHMARK(BM_FieldBatchParallel)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FieldBatchSerial)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvolveParallel)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvolveSerial)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
