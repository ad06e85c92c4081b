// Serial vs OpenMP statevector kernels.
//   ./bench_kernels --benchmark_filter=Apply1q

#include <benchmark/benchmark.h>

#include <vector>

#include "qspline/kernels.hpp"
#include "qspline/rng.hpp"

using namespace qspline;
using kernels::Complex;

namespace {

std::vector<Complex> random_state(unsigned n) {
    Rng rng(n);
    std::vector<Complex> v(std::size_t{1} << n);
    for (auto& a : v) a = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    return v;
}

const kernels::Matrix2 kRy = {0.8, -0.6, 0.6, 0.8};
const kernels::Matrix4 kCx = {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};

template <auto Fn>
void apply_1q(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    auto v = random_state(n);
    for (auto _ : state) {
        for (unsigned q = 0; q < n; ++q) Fn(v, kRy, q, 0, 0);
        benchmark::DoNotOptimize(v.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n) * static_cast<std::int64_t>(v.size()));
}

template <auto Fn>
void apply_2q(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    auto v = random_state(n);
    for (auto _ : state) {
        for (unsigned q = 0; q + 1 < n; ++q) Fn(v, kCx, q, q + 1, 0, 0);
        benchmark::DoNotOptimize(v.data());
    }
}

template <auto Fn>
void norm(benchmark::State& state) {
    const auto v = random_state(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Fn(v));
}

}  // namespace

BENCHMARK(apply_1q<kernels::serial::apply_1q>)->Name("Apply1q/serial")->DenseRange(4, 20, 4);
BENCHMARK(apply_1q<kernels::omp::apply_1q>)->Name("Apply1q/omp")->DenseRange(4, 20, 4);
BENCHMARK(apply_2q<kernels::serial::apply_2q>)->Name("Apply2q/serial")->DenseRange(4, 20, 4);
BENCHMARK(apply_2q<kernels::omp::apply_2q>)->Name("Apply2q/omp")->DenseRange(4, 20, 4);
BENCHMARK(norm<kernels::serial::norm_squared>)->Name("NormSquared/serial")->DenseRange(4, 20, 4);
BENCHMARK(norm<kernels::omp::norm_squared>)->Name("NormSquared/omp")->DenseRange(4, 20, 4);
BENCHMARK_MAIN();
