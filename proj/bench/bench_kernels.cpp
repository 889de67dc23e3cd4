// Serial reference vs OpenMP kernels at MNIST-sized shapes.
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "bioleaf/kernels.hpp"

using namespace bioleaf;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(r, c);
  for (double& x : m.data()) x = u(rng);
  return m;
}

template <auto Fn>
void bm_matvec(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const Matrix w = random_matrix(rows, 784, 1);
  const Matrix x = random_matrix(1, 784, 2);
  std::vector<double> y(rows);
  for (auto _ : state) {
    Fn(w, x.row(0), y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(rows * 784));
}

template <auto Fn>
void bm_correlation(benchmark::State& state) {
  const auto steps = static_cast<std::size_t>(state.range(0));
  const Matrix post = random_matrix(steps, 300, 3);
  const Matrix pre = random_matrix(steps, 784, 4);
  Matrix dw(300, 784);
  for (auto _ : state) {
    Fn(post, pre, 1e-3, dw);
    benchmark::DoNotOptimize(dw.data().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(steps * 300 * 784));
}

}  // namespace

BENCHMARK(bm_matvec<kernels::serial::matvec>)->Name("matvec/serial")->Arg(10)->Arg(300);
BENCHMARK(bm_matvec<kernels::omp::matvec>)->Name("matvec/omp")->Arg(10)->Arg(300);
BENCHMARK(bm_correlation<kernels::serial::accumulate_time_correlation>)->Name("correlation/serial")->Arg(5)->Arg(50);
BENCHMARK(bm_correlation<kernels::omp::accumulate_time_correlation>)->Name("correlation/omp")->Arg(5)->Arg(50);

BENCHMARK_MAIN();
