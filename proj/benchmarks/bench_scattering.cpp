#include <benchmark/benchmark.h>

#include <random>

#include "fixtures.hpp"
#include "jacobi/oracle.hpp"
#include "jacobi/scattering.hpp"
#include "jacobi/spectral.hpp"
#include "jacobi/transition.hpp"

namespace {

using namespace jacobi;

CoefficientSequence fixture_of_size(std::size_t sites) {
  std::mt19937_64 rng(sites);
  RawCoefficients raw{{1.0, 0.0, 1.0}, {0, static_cast<Site>(sites) - 1}, {}, {}, {}};
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (std::size_t k = 0; k < sites; ++k) {
    raw.a.push_back(1.0 + 0.5 * u(rng));
    raw.b.push_back(u(rng));
    raw.w.push_back(1.0 + 0.5 * u(rng));
  }
  return validate_sequence(std::move(raw));
}

void BM_ExtractScattering(benchmark::State& state) {
  const CoefficientSequence seq = fixture_of_size(static_cast<std::size_t>(state.range(0)));
  const Complex z = std::polar(1.0, 1.1);
  for (auto _ : state) benchmark::DoNotOptimize(extract_scattering(seq, z));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExtractScattering)->RangeMultiplier(4)->Range(4, 4096)->Complexity();

void BM_TransferOracle(benchmark::State& state) {
  const CoefficientSequence seq = fixture_of_size(static_cast<std::size_t>(state.range(0)));
  const Complex z = std::polar(1.0, 1.1);
  for (auto _ : state) benchmark::DoNotOptimize(transfer_matrix_scattering(seq, z));
}
BENCHMARK(BM_TransferOracle)->RangeMultiplier(4)->Range(4, 4096);

void BM_Sweep(benchmark::State& state) {
  const CoefficientSequence seq = fixture_of_size(40);
  const CircleGrid grid = sample_circle(seq.limits(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scattering_sweep(seq, grid));
}
BENCHMARK(BM_Sweep)->Arg(64)->Arg(512);

void BM_Factorization(benchmark::State& state) {
  const CoefficientSequence seq = fixture_of_size(40);
  std::mt19937_64 rng(7);
  const Fragmentation frag = testing::random_fragmentation(rng, seq, static_cast<std::size_t>(state.range(0)));
  const Complex z = std::polar(1.0, 0.7);
  for (auto _ : state) benchmark::DoNotOptimize(factorization_check(seq, frag, z, 1e-9));
}
BENCHMARK(BM_Factorization)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
