// Microbenchmarks for the combinatorial core: complex construction,
// Betti-number reduction, Hilbert-grid evaluation, and the exact
// Prokhorov distance.

#include <benchmark/benchmark.h>

#include <random>

#include "dowker/bifiltration.hpp"
#include "dowker/homology.hpp"
#include "dowker/metrics.hpp"
#include "dowker/relations.hpp"

using namespace dowker;

namespace {

PointCloud random_cloud(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto unit = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < n; ++i) pts.push_back({unit(), unit()});
    return PointCloud(std::move(pts));
}

void BM_build_measure_dowker(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto L = random_uniform_lambda(n, n, 1);
    BuildParams p;
    p.m_max = 10;
    p.dim_max = 2;
    p.r_max = 0.25;
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_measure_dowker(L, p));
    }
}
BENCHMARK(BM_build_measure_dowker)->Arg(25)->Arg(50)->Arg(100);

void BM_betti_numbers(benchmark::State& state) {
    auto L = random_uniform_lambda(40, 40, 2);
    BuildParams p;
    p.m_max = 4;
    p.dim_max = 2;
    p.r_max = 0.2;
    auto C = build_measure_dowker(L, p);
    auto K = slice(C, 1, 0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(betti_numbers(K, 2));
    }
}
BENCHMARK(BM_betti_numbers);

void BM_hilbert_grid(benchmark::State& state) {
    auto L = random_uniform_lambda(40, 40, 3);
    BuildParams p;
    p.m_max = 10;
    p.dim_max = 2;
    p.r_max = 0.25;
    auto C = build_measure_dowker(L, p);
    std::vector<double> m_values, r_values;
    for (int i = 1; i <= 10; ++i) {
        m_values.push_back(i);
        r_values.push_back(0.025 * i);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(hilbert_grid(C, m_values, r_values, 1));
    }
}
BENCHMARK(BM_hilbert_grid);

void BM_prokhorov(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto mu = EmpiricalMeasure::probability(random_cloud(n, 4));
    auto nu = EmpiricalMeasure::probability(random_cloud(n, 5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(prokhorov(mu, nu, Metric::euclidean));
    }
}
BENCHMARK(BM_prokhorov)->Arg(10)->Arg(20)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
