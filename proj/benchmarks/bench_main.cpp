#include <benchmark/benchmark.h>

#include <random>
#include <sstream>

#include "claims.hpp"
#include "enriques/catalog.hpp"
#include "enriques/fibrations.hpp"
#include "enriques/graph_lattice.hpp"
#include "enriques/linalg.hpp"
#include "enriques/sequences.hpp"
#include "enriques/weyl.hpp"

using namespace enriques;

namespace {

const std::vector<const char*> kNames = {kE8ExtraSpecial, kD8ExtraSpecial, kE7ExtraSpecial, kTypeI, kE7Two};

struct Analyzed {
  GraphLattice lattice;
  std::vector<FibrationClass> fibrations;
};

const Analyzed& analyzed(std::size_t i) {
  static std::vector<Analyzed> cache = [] {
    std::vector<Analyzed> out;
    for (const char* n : kNames) {
      Analyzed a{analyze_graph_lattice(catalog(n).graph), {}};
      a.fibrations = enumerate_fibrations(a.lattice);
      out.push_back(std::move(a));
    }
    return out;
  }();
  return cache[i];
}

void BM_Determinant(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-3, 3);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->Arg(10)->Arg(20)->Arg(40);

void BM_AnalyzeLattice(benchmark::State& state) {
  const CurveGraph g = catalog(kNames[state.range(0)]).graph;
  for (auto _ : state) benchmark::DoNotOptimize(analyze_graph_lattice(g));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_AnalyzeLattice)->DenseRange(0, 4);

void BM_EnumerateFibrations(benchmark::State& state) {
  const auto& a = analyzed(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_fibrations(a.lattice));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_EnumerateFibrations)->DenseRange(0, 4);

void BM_FindSequences(benchmark::State& state) {
  const auto& a = analyzed(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_sequences(a.lattice, a.fibrations, 4));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_FindSequences)->DenseRange(0, 4);

void BM_NefReduce(benchmark::State& state) {
  const auto& a = analyzed(static_cast<std::size_t>(state.range(0)));
  const std::size_t n = a.lattice.graph.size();
  // two fiber classes, then each curve added while the square stays nonnegative
  IntVector coeffs = a.fibrations.front().fibers.front().null_class(n);
  coeffs = add(coeffs, a.fibrations.back().fibers.front().null_class(n));
  IntVector v = a.lattice.to_ambient(coeffs);
  ReduceOptions opts;
  opts.interior = interior_vector(*a.lattice.ambient, a.lattice.roots, v);
  for (const auto& r : a.lattice.roots) {
    const IntVector w = add(v, r);
    if (a.lattice.ambient->pairing(w, w) >= 0) v = w;
  }
  for (auto _ : state) benchmark::DoNotOptimize(nef_reduce(a.lattice, v, opts));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_NefReduce)->DenseRange(0, 4);

void BM_VerifyPaper(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cli::run_claims({}));
}
BENCHMARK(BM_VerifyPaper)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
