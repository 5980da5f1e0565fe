// Micro benchmarks for the hot paths: hypergraph construction, the exact
// rational simplex, branch and bound, and the odd-hole search.

#include <benchmark/benchmark.h>

#include "advgap/analysis.hpp"
#include "advgap/conflict.hpp"
#include "advgap/constructions.hpp"
#include "advgap/packing.hpp"

using namespace advgap;

namespace {

const NormSpec kL2 = NormSpec::p_norm(Rational(2));

void BM_AnalyzePentagon(benchmark::State& state) {
    const Dataset ds = example_dataset("pentagon");
    for (auto _ : state) {
        auto rep = decompose_gap(ds.dist, ds.epsilon, ds.norm);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_AnalyzePentagon);

void BM_BasisHypergraph(benchmark::State& state) {
    const auto dist = canonical_basis_distribution(static_cast<int>(state.range(0)));
    const Rational eps = canonical_basis_default_eps();
    for (auto _ : state) {
        auto h = build_conflict_hypergraph(dist, eps, kL2);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_BasisHypergraph)->Arg(5)->Arg(8)->Arg(10);

void BM_FractionalFibration(benchmark::State& state) {
    const Graph g = fibrate(named_graph("c5"));
    const auto inst = PackingInstance::from_graph(
        g, std::vector<Rational>(g.size(), Rational(1, g.size())));
    for (auto _ : state) {
        auto fp = solve_fractional(inst);
        benchmark::DoNotOptimize(fp);
    }
}
BENCHMARK(BM_FractionalFibration);

void BM_IntegralFibration(benchmark::State& state) {
    const Graph g = fibrate(named_graph("c5"));
    const auto inst = PackingInstance::from_graph(
        g, std::vector<Rational>(g.size(), Rational(1, g.size())));
    for (auto _ : state) {
        auto ip = solve_integral(inst);
        benchmark::DoNotOptimize(ip);
    }
}
BENCHMARK(BM_IntegralFibration);

void BM_OddHoleFibration(benchmark::State& state) {
    const Graph g = fibrate(named_graph("c5"));
    for (auto _ : state) {
        auto hole = find_odd_hole(g, 13);
        benchmark::DoNotOptimize(hole);
    }
}
BENCHMARK(BM_OddHoleFibration);

void BM_EmbedRoundTrip(benchmark::State& state) {
    const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 7);
    for (auto _ : state) {
        auto ds = graph_to_distribution(g, Rational(1, 2), kL2);
        benchmark::DoNotOptimize(ds);
    }
}
BENCHMARK(BM_EmbedRoundTrip)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
