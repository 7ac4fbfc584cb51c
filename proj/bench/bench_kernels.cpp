#include <benchmark/benchmark.h>

#include <cmath>

#include "padepm/approximant.hpp"
#include "padepm/experiments.hpp"

namespace {

using padepm::Complex;

struct LogFixture {
  padepm::Approximation approx;
  std::vector<Complex> mesh;

  LogFixture()
      : approx(padepm::approximate(padepm::gen_log_series(41), padepm::Method::kDm,
                                   padepm::Conformation::make(20, 0))),
        mesh(padepm::unit_disk_mesh(0.02)) {}
};

const LogFixture& fixture() {
  static const LogFixture f;
  return f;
}

Complex log_target(Complex z) { return std::log(1.2 - z); }

void BM_SweepSerial(benchmark::State& state) {
  const auto& f = fixture();
  const padepm::ComplexFn fn = [&f](Complex z) { return f.approx(z); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(padepm::error_sweep_serial(fn, log_target, f.mesh));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.mesh.size()));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto& f = fixture();
  const padepm::ComplexFn fn = [&f](Complex z) { return f.approx(z); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(padepm::error_sweep(fn, log_target, f.mesh));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(f.mesh.size()));
}

void run_geometric(benchmark::State& state, padepm::Execution exec) {
  padepm::ExperimentConfig cfg;
  cfg.samples = 4;
  cfg.execution = exec;
  for (auto _ : state) {
    benchmark::DoNotOptimize(padepm::run_geometric_noise(cfg));
  }
}

void BM_GeometricSerial(benchmark::State& state) {
  run_geometric(state, padepm::Execution::kSerial);
}

void BM_GeometricParallel(benchmark::State& state) {
  run_geometric(state, padepm::Execution::kParallel);
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeometricSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeometricParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
