#include <benchmark/benchmark.h>

#include "nichols/cartan.hpp"
#include "nichols/cartan_graph.hpp"
#include "nichols/classification.hpp"
#include "nichols/neighborhoods.hpp"
#include "nichols/reflection.hpp"

namespace {

using namespace nichols;

const FixtureSet& fixtures() {
    static FixtureSet fx = load_fixtures(NICHOLS_FIXTURE_DIR);
    return fx;
}

const ParametricRow& row(const std::string& id) {
    for (const auto& r : fixtures().rows)
        if (r.row_id == id) return r;
    throw BadParameter("no such row: " + id);
}

GDDiagram base_diagram(const std::string& id) {
    const auto& r = row(id);
    Instantiation inst = default_instantiation(r);
    return instantiate_row(r, inst.p, inst.zeta_exp, inst.N).front();
}

void BM_reflect_diagram(benchmark::State& state) {
    GDDiagram D = base_diagram("11");
    for (auto _ : state) benchmark::DoNotOptimize(reflect_diagram(D, 2));
}
BENCHMARK(BM_reflect_diagram);

void BM_cartan_matrix(benchmark::State& state) {
    GDDiagram D = base_diagram("21");
    for (auto _ : state) benchmark::DoNotOptimize(cartan_matrix(D));
}
BENCHMARK(BM_cartan_matrix);

void BM_build_graph_row11(benchmark::State& state) {
    GDDiagram D = base_diagram("11");
    for (auto _ : state) benchmark::DoNotOptimize(build_graph(D).size());
}
BENCHMARK(BM_build_graph_row11);

void BM_enumerate_roots_row11(benchmark::State& state) {
    CartanGraph G = build_graph(base_diagram("11"));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_roots(G).positive.size());
}
BENCHMARK(BM_enumerate_roots_row11);

void BM_goodnei_row21(benchmark::State& state) {
    CartanGraph G = build_graph(base_diagram("21"));
    for (auto _ : state) benchmark::DoNotOptimize(goodnei_exists(G).has_value());
}
BENCHMARK(BM_goodnei_row21);

void BM_verify_row11(benchmark::State& state) {
    const auto& fx = fixtures();
    for (auto _ : state) benchmark::DoNotOptimize(verify_row(row("11"), fx.lists).pass());
}
BENCHMARK(BM_verify_row11);

void BM_q_integer_grid(benchmark::State& state) {
    for (auto _ : state) {
        int hits = 0;
        for (int N = 1; N <= 30; ++N)
            for (int q = 0; q < N; ++q)
                for (int n = 1; n <= 50; ++n)
                    hits += q_integer_is_zero_exp(n, q, N, 5);
        benchmark::DoNotOptimize(hits);
    }
}
BENCHMARK(BM_q_integer_grid);

} // namespace

BENCHMARK_MAIN();
