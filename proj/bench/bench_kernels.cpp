// Serial vs OpenMP kernels. Arguments are matrix orders or sample counts.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "specmat/kernels.hpp"
#include "specmat/matfun.hpp"
#include "specmat/spectral.hpp"

using namespace specmat;

namespace {

Matrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(n);
  for (auto& x : m.data()) x = Complex(u(rng), u(rng));
  return m;
}

std::vector<Polynomial> random_polynomials(std::size_t count, std::size_t degree) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Complex> c(degree + 1);
    for (auto& x : c) x = Complex(u(rng), u(rng));
    c.back() = 1.0;
    out.emplace_back(std::move(c));
  }
  return out;
}

template <auto Multiply>
void BM_multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  Matrix out(n);
  for (auto _ : state) {
    Multiply(a.data(), b.data(), out.data(), n);
    benchmark::DoNotOptimize(out.data().data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * n * n * n));
}

template <auto Evaluate>
void BM_evaluate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, 3);
  const auto polys = random_polynomials(n, n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(Evaluate(polys, a));
}

template <auto Combine>
void BM_combine(benchmark::State& state) {
  const auto samples = static_cast<std::size_t>(state.range(0));
  const std::size_t n = 12, terms = 12;
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < terms; ++i) mats.push_back(random_matrix(n, static_cast<unsigned>(10 + i)));
  kernels::WeightTable w;
  w.samples = samples;
  w.terms = terms;
  w.values.assign(samples * terms, Complex(0.5, -0.25));
  for (auto _ : state) benchmark::DoNotOptimize(Combine(mats, w));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * samples));
}

// End to end: a 12x12 Jordan-structured matrix sampled along a trajectory.
void BM_trajectory(benchmark::State& state) {
  const std::size_t n = 12;
  Matrix a(n);
  std::vector<SpectrumEntry> entries;
  for (std::size_t b = 0; b < 4; ++b) {
    const Complex alpha(0.5 * static_cast<double>(b) - 1.0, 0.25 * static_cast<double>(b));
    for (std::size_t i = 0; i < 3; ++i) {
      a(3 * b + i, 3 * b + i) = alpha;
      if (i < 2) a(3 * b + i, 3 * b + i + 1) = 1.0;
    }
    entries.push_back({alpha, 3});
  }
  const ComponentSystem cs = component_matrices(a, Spectrum(entries));
  std::vector<double> times(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < times.size(); ++i) times[i] = 0.01 * static_cast<double>(i);
  for (auto _ : state) benchmark::DoNotOptimize(exponential_trajectory(cs, times));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * times.size()));
}

}  // namespace

BENCHMARK(BM_multiply<kernels::serial::multiply>)->Name("multiply/serial")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_multiply<kernels::omp::multiply>)->Name("multiply/omp")->RangeMultiplier(2)->Range(16, 256)->UseRealTime();
BENCHMARK(BM_evaluate<kernels::serial::evaluate_polynomials>)->Name("evaluate_polynomials/serial")->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_evaluate<kernels::omp::evaluate_polynomials>)->Name("evaluate_polynomials/omp")->Arg(8)->Arg(16)->Arg(32)->UseRealTime();
BENCHMARK(BM_combine<kernels::serial::batched_combine>)->Name("batched_combine/serial")->Arg(64)->Arg(1024)->Arg(8192);
BENCHMARK(BM_combine<kernels::omp::batched_combine>)->Name("batched_combine/omp")->Arg(64)->Arg(1024)->Arg(8192)->UseRealTime();
BENCHMARK(BM_trajectory)->Name("exponential_trajectory")->Arg(100)->Arg(10000)->UseRealTime();

BENCHMARK_MAIN();
