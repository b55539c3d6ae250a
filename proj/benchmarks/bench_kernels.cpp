#include <benchmark/benchmark.h>

#include "qtorus/experiments.hpp"
#include "qtorus/kernels.hpp"
#include "qtorus/reference.hpp"

// OpenMP kernels against their serial reference implementations.

using namespace qtorus;

namespace {

QtElement bench_element(int d, int degree, int terms) {
  Rng rng(42);
  return random_element(Theta::golden(d), degree, terms, rng);
}

void BM_represent_omp(benchmark::State& state) {
  const QtElement x = bench_element(2, 3, 12);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rep = represent(x, N, 1 << 20);
    benchmark::DoNotOptimize(rep.mat.data());
  }
}
BENCHMARK(BM_represent_omp)->Arg(8)->Arg(16)->Arg(24);

void BM_represent_serial(benchmark::State& state) {
  const QtElement x = bench_element(2, 3, 12);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rep = ref::represent(x, N, 1 << 20);
    benchmark::DoNotOptimize(rep.mat.data());
  }
}
BENCHMARK(BM_represent_serial)->Arg(8)->Arg(16)->Arg(24);

void BM_circular_poisson_omp(benchmark::State& state) {
  const TorusPoint s(std::vector<double>{0.31, 0.62, 0.17});
  const double r = 0.8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(circular_poisson_paths(r, s, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_circular_poisson_omp)->Arg(40)->Arg(80);

void BM_fourier_ball_serial(benchmark::State& state) {
  const std::vector<double> s{0.31, 0.62, 0.17};
  const int M = auto_fourier_M(0.8, 3, 1e-8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ref::fourier_ball_sum(0.8, s, M));
  }
}
BENCHMARK(BM_fourier_ball_serial)->Arg(0);

void BM_lattice_sum_serial(benchmark::State& state) {
  const std::vector<double> s{0.31, 0.12, -0.4};
  const double eps = -std::log(0.8) / (2.0 * M_PI);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ref::poisson_lattice_sum(eps, s, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_lattice_sum_serial)->Arg(40)->Arg(80);

void BM_approx_identity_omp(benchmark::State& state) {
  const int N = 32;
  const ScalarKernel k = [N](const TorusPoint& s) { return fejer_kernel(N, s); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(approx_identity_report(k, 2, 0.1, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_approx_identity_omp)->Arg(128)->Arg(256);

void BM_grid_mean_serial(benchmark::State& state) {
  const int N = 32;
  for (auto _ : state) {
    auto v = ref::grid_mean(
        [N](const std::vector<double>& t) { return fejer_kernel(N, TorusPoint(t)); }, 2,
        static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_grid_mean_serial)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
