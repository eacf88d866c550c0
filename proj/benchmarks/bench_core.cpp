// Microbenchmarks for the hot paths: per-step integration, field queries,
// controller ticks, the sensor pipeline, and the post-processing window
// average. Run with --benchmark_min_time=... to tighten timings.

#include <benchmark/benchmark.h>

#include <cmath>

#include "airseek/averaging.hpp"
#include "airseek/esc.hpp"
#include "airseek/field.hpp"
#include "airseek/gradient_ascent.hpp"
#include "airseek/rng.hpp"
#include "airseek/sensors.hpp"
#include "airseek/simulate.hpp"
#include "airseek/vehicle.hpp"

namespace {

using namespace airseek;

void BM_VehicleStep(benchmark::State& state) {
  Pose pose{1.0, -2.0, 0.3};
  const ControlInput u{1.0, 0.5};
  for (auto _ : state) {
    pose = step(pose, u, 1e-3);
    benchmark::DoNotOptimize(pose);
  }
}
BENCHMARK(BM_VehicleStep);

void BM_FieldGradient(benchmark::State& state) {
  static const char* const kNames[] = {"quadratic", "nonquad_a", "nonquad_b",
                                       "fan"};
  const FieldSpec field = make_field(kNames[state.range(0)]);
  const Vec2 p{1.2, 0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradient(field, p));
  }
}
BENCHMARK(BM_FieldGradient)->DenseRange(0, 3);

void BM_GaControl(benchmark::State& state) {
  const GaGains gains{1.0, 10.0};
  const Vec2 grad{1.2, 1.6};
  const GradientSample sample{grad, perp(grad), GradientFrame::world};
  double theta = 0.0;
  for (auto _ : state) {
    theta += 1e-3;
    benchmark::DoNotOptimize(ga_control(sample, theta, gains));
  }
}
BENCHMARK(BM_GaControl);

void BM_EscControllerStep(benchmark::State& state) {
  const EscParams esc;
  WashoutState filter;
  double t = 0.0;
  double j = -10.0;
  for (auto _ : state) {
    t += 1e-3;
    j = -10.0 + 0.2 * std::sin(10.0 * t);
    const EscStepResult r = esc_controller_step(filter, j, t, 1e-3, 0.4, esc);
    filter = r.state;
    benchmark::DoNotOptimize(filter);
  }
}
BENCHMARK(BM_EscControllerStep);

void BM_SensorMeasure(benchmark::State& state) {
  const SensorCalibration cal;
  RngStream rng(99);
  const Vec2 wind{3.0, -4.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(measure(wind, cal, &rng));
  }
}
BENCHMARK(BM_SensorMeasure);

void BM_SimulateGaStep(benchmark::State& state) {
  SimulationOptions opt;
  opt.dt = 1e-3;
  opt.t_end = 1.0;
  opt.record = false;
  const Pose init{4.0, 3.0, 0.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(make_field("quadratic"),
                                      GaGains{1.0, 10.0}, std::nullopt, init,
                                      opt));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_SimulateGaStep);

void BM_MovingAverage(benchmark::State& state) {
  Trajectory traj;
  traj.dt = 1e-3;
  traj.samples.resize(100000);
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    TrajectorySample& s = traj.samples[i];
    s.t = 1e-3 * static_cast<double>(i);
    s.pose = {std::sin(s.t), std::cos(s.t), 0.0};
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(moving_average(traj, 10.0));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(traj.samples.size()));
}
BENCHMARK(BM_MovingAverage);

}  // namespace

BENCHMARK_MAIN();
