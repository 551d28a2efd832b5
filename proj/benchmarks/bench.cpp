#include <benchmark/benchmark.h>

#include <random>

#include "assortnet/census.hpp"
#include "assortnet/measures.hpp"
#include "assortnet/nullmodel.hpp"
#include "assortnet/simulate.hpp"

using namespace assortnet;

namespace {

Network random_network(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Network net;
    for (int i = 0; i < n; ++i) net.add_node("n" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) net.add_edge("n" + std::to_string(i), "n" + std::to_string(j));
    return net;
}

CensusData simulated_data(std::size_t pop, std::size_t groups, std::size_t censuses) {
    SimulationConfig cfg;
    cfg.population = pop;
    cfg.groups_per_census = groups;
    cfg.censuses = censuses;
    cfg.runs = 1;
    cfg.seed = 12;
    return run_simulation(cfg).data[0];
}

void bm_newman(benchmark::State& state) {
    Network net = random_network(static_cast<int>(state.range(0)), 0.1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(newman_assortativity(net));
}
BENCHMARK(bm_newman)->Arg(100)->Arg(500);

void bm_spearman(benchmark::State& state) {
    Network net = random_network(static_cast<int>(state.range(0)), 0.1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(spearman_assortativity(net));
}
BENCHMARK(bm_spearman)->Arg(100)->Arg(500);

void bm_accumulate(benchmark::State& state) {
    CensusData data = simulated_data(static_cast<std::size_t>(state.range(0)), 10, 20);
    for (auto _ : state) benchmark::DoNotOptimize(accumulate(data, Weighting::count));
}
BENCHMARK(bm_accumulate)->Arg(50)->Arg(200);

void bm_swap_steps(benchmark::State& state) {
    CensusData data = simulated_data(static_cast<std::size_t>(state.range(0)), 10, 10);
    SwapChain chain(to_occurrence_matrix(data));
    Rng rng = derive_rng(3, 0);
    for (auto _ : state) benchmark::DoNotOptimize(chain.step(rng));
}
BENCHMARK(bm_swap_steps)->Arg(50)->Arg(200);

void bm_matrix_statistic(benchmark::State& state) {
    CensusData data = simulated_data(static_cast<std::size_t>(state.range(0)), 10, 10);
    OccurrenceMatrix m = to_occurrence_matrix(data);
    for (auto _ : state)
        benchmark::DoNotOptimize(assortativity_from_matrix(m, AssortMethod::newman));
}
BENCHMARK(bm_matrix_statistic)->Arg(50)->Arg(200);

void bm_simulation_run(benchmark::State& state) {
    SimulationConfig cfg;
    cfg.population = 100;
    cfg.groups_per_census = 20;
    cfg.censuses = 20;
    cfg.runs = 1;
    cfg.seed = 7;
    for (auto _ : state) benchmark::DoNotOptimize(run_simulation(cfg));
}
BENCHMARK(bm_simulation_run);

}  // namespace

BENCHMARK_MAIN();
