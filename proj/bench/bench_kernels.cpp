// Serial reference against the OpenMP path for the three heavy kernels.

#include "w3f/fusion.hpp"
#include "w3f/linalg.hpp"
#include "w3f/registry.hpp"
#include "w3f/singular.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace w3f;

namespace {

Execution mode(const benchmark::State& s) { return s.range(0) ? Execution::parallel : Execution::serial; }

const ModuleRegistry& registry() {
    static const ModuleRegistry r = load_registry(std::string(W3F_SOURCE_DIR) + "/configs/registry.json");
    return r;
}

void BM_BuildTable(benchmark::State& s) {
    const auto& r = registry();
    for (auto _ : s) benchmark::DoNotOptimize(build_table(r, nullptr, mode(s)));
}

void BM_SingularSpaceDegree6(benchmark::State& s) {
    const ModuleParams p{parse_scalar("1/2"), QuadScalar()};
    for (auto _ : s) benchmark::DoNotOptimize(singular_space(6, p, mode(s)));
}

void BM_Bareiss(benchmark::State& s) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> d(-9, 9);
    Matrix m(48, Row(48));
    for (auto& row : m)
        for (auto& x : row) x = QuadScalar(make_rational(d(rng), 1), make_rational(d(rng), 1));
    for (auto _ : s) benchmark::DoNotOptimize(bareiss(m, mode(s)));
}

}  // namespace

BENCHMARK(BM_BuildTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingularSpaceDegree6)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Bareiss)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
