#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "airseek/config.hpp"
#include "airseek/rng.hpp"
#include "airseek/simulate.hpp"

namespace airseek {

/// Initial-condition policy for a batch. Explicit poses are consumed in
/// order (wrapping); random mode draws uniformly from the box with the
/// heading interval in radians, rejecting out-of-domain positions.
struct InitSpec {
  enum class Mode { explicit_list, random_box };
  Mode mode = Mode::random_box;
  std::vector<Pose> poses;
  double z1_min = -5.0, z1_max = 5.0;
  double z2_min = -5.0, z2_max = 5.0;
  double heading_min = 0.0, heading_max = 6.283185307179586;
};

/// Optional one-key parameter sweep: the batch is repeated once per value
/// with config key `key` overridden (dotted section.key form).
struct SweepSpec {
  std::string key;
  std::vector<std::string> values;
};

/// Fully resolved experiment description.
struct ExperimentConfig {
  FieldSpec field;
  ControllerConfig controller;
  std::optional<SensorCalibration> sensors;
  InitSpec init;
  double dt = 1e-3;
  double t_end = 100.0;
  int trials = 1;
  std::uint64_t seed = 1;
  double settle_fraction = 0.2;
  int record_stride = 1;
  double bootstrap_speed = 0.1;
  int threads = 0;  // 0 = one worker per hardware thread
  std::string out_dir = "out";
  std::string label = "run";
  std::optional<SweepSpec> sweep;
  std::uint64_t config_hash = 0;

  /// Build from parsed config text. Unset dt defaults to 1e-3 for single
  /// runs and 1e-2 for multi-trial batches. Throws ConfigError on missing
  /// or inconsistent keys (including omega0 * dt > 0.1 for extremum runs).
  static ExperimentConfig from_config(const Config& cfg);
};

/// First time the distance to `source` falls to fraction * initial distance,
/// scanning the record in order. Empty trajectories are invalid.
std::optional<double> settling_time(const Trajectory& traj, const Vec2& source,
                                    double fraction);

/// Draw one pose from a random-box init spec, rejecting positions outside
/// the field domain (up to 1000 attempts).
Pose sample_initial_conditions(RngStream& rng, const InitSpec& init,
                               const FieldSpec& field);

/// Initial pose of a given trial index under the init policy.
Pose trial_initial_pose(int trial, const ExperimentConfig& cfg);

struct TrialResult {
  int trial = 0;
  Pose init;
  std::optional<double> settling_time;
  double final_distance = 0.0;
  double end_time = 0.0;
  StopReason reason = StopReason::completed;
};

struct BatchSummary {
  std::string label;
  std::vector<TrialResult> trials;
  int settled = 0;
  int failures = 0;  // trials that never settled or aborted early
  // Quartiles of the settling times of settled trials (NaN when none).
  double min_ts = 0.0, q1_ts = 0.0, median_ts = 0.0, q3_ts = 0.0,
         max_ts = 0.0;
  std::uint64_t config_hash = 0;
};

/// Linear-interpolation quantile (inclusive endpoints) of sorted data.
double quantile(const std::vector<double>& sorted, double q);

/// Run the batch on a small worker pool. Results are keyed by trial index
/// and each trial draws from RngStream(seed, trial), so the outcome does
/// not depend on the number of workers.
BatchSummary monte_carlo(const ExperimentConfig& cfg);

}  // namespace airseek
