// Parallel kernels against their serial references.
// Thread count follows OMP_NUM_THREADS; run with 1 to isolate algorithmic cost.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "dlat/enumerate.hpp"
#include "dlat/harness.hpp"
#include "dlat/rng.hpp"
#include "dlat/softdecode.hpp"

using namespace dlat;

namespace {

// n distinct x = g^i, random y, uniform multiplicity m.
std::vector<InterpPoint> points(const FieldPtr& f, std::size_t n, unsigned m) {
  auto g = stream_rng(99, n * 16 + m);
  std::vector<InterpPoint> pts;
  Symbol x = 1;
  for (std::size_t i = 0; i < n; ++i, x = f->mul(x, f->generator()))
    pts.push_back({x, static_cast<Symbol>(uniform_int(g, 0, f->q() - 1)), m});
  return pts;
}

void BM_interpolate_koetter(benchmark::State& st) {
  auto f = binary_field(16);
  auto pts = points(f, 15, static_cast<unsigned>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(interpolate(f, pts, 5));
}

void BM_interpolate_reference(benchmark::State& st) {
  auto f = binary_field(16);
  auto pts = points(f, 15, static_cast<unsigned>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(interpolate_reference(f, pts, 5));
}

struct BallCase {
  ConstructionDLattice lat = lattice_make(tower_make(binary_field(16), 1));
  std::vector<double> y;
  BallCase() {
    auto g = stream_rng(5, 0);
    y = oracle_target(lat, 2.5, g);
  }
};

void BM_enumerate_serial(benchmark::State& st) {
  static BallCase c;
  const double r = static_cast<double>(st.range(0)) / 10;
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_ball(c.lat.basis_int, c.y, r));
}

void BM_enumerate_parallel(benchmark::State& st) {
  static BallCase c;
  const double r = static_cast<double>(st.range(0)) / 10;
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_ball_parallel(c.lat.basis_int, c.y, r));
}

void BM_experiment(benchmark::State& st) {
  ExperimentConfig cfg;
  cfg.q = 64;
  cfg.ell = 2;
  cfg.trials = 16;
  static const ConstructionDLattice lat = lattice_make(tower_make(binary_field(64), 2));
  const int saved = omp_get_max_threads();
  omp_set_num_threads(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(run_experiment(cfg, lat));
  omp_set_num_threads(saved);
}

}  // namespace

BENCHMARK(BM_interpolate_koetter)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_interpolate_reference)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_serial)->Arg(25)->Arg(35)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_parallel)->Arg(25)->Arg(35)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_experiment)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
