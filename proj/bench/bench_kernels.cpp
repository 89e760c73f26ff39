// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "ptnu/oracle.hpp"
#include "ptnu/quadrature.hpp"
#include "ptnu/trig_pt.hpp"

namespace {

const ptnu::pt::PtPotential kPotential{10.0, 5.0, 3.0, 1.2};
const std::vector<double> kAlphas{1.2, 0.8, 0.4, 0.2, 0.02, 0.002};

void BM_Eigenvalues(benchmark::State& state) {
  const auto op = ptnu::oracle::discretize(kPotential, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ptnu::oracle::lowest_eigenvalues(op, 7));
}

void BM_EigenvaluesSerial(benchmark::State& state) {
  const auto op = ptnu::oracle::discretize(kPotential, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ptnu::oracle::lowest_eigenvalues_serial(op, 7));
}

double integrand(double x) { return std::pow(std::sin(x), 8.85) * std::exp(-x) * std::cos(3.0 * x); }

void BM_Integrate(benchmark::State& state) {
  const int panels = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptnu::special::integrate(integrand, 0.0, 1.3, panels, ptnu::special::Grading::Both));
  }
}

void BM_IntegrateSerial(benchmark::State& state) {
  const int panels = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ptnu::special::integrate_serial(integrand, 0.0, 1.3, panels, ptnu::special::Grading::Both));
  }
}

void BM_SpectrumTable(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ptnu::pt::spectrum_table(10.0, 5.0, 3.0, kAlphas, n_max));
}

void BM_SpectrumTableSerial(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ptnu::pt::spectrum_table_serial(10.0, 5.0, 3.0, kAlphas, n_max));
}

}  // namespace

BENCHMARK(BM_Eigenvalues)->Arg(2000)->Arg(8000)->Arg(32000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EigenvaluesSerial)->Arg(2000)->Arg(8000)->Arg(32000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Integrate)->Arg(64)->Arg(1024);
BENCHMARK(BM_IntegrateSerial)->Arg(64)->Arg(1024);
BENCHMARK(BM_SpectrumTable)->Arg(6)->Arg(60);
BENCHMARK(BM_SpectrumTableSerial)->Arg(6)->Arg(60);

BENCHMARK_MAIN();
