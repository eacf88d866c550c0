#include "airseek/runner.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include "airseek/errors.hpp"
#include "airseek/report.hpp"

namespace airseek {
namespace {

namespace fs = std::filesystem;

std::string sanitize(const std::string& raw) {
  std::string out = raw;
  for (char& c : out) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '.') {
      c = '_';
    }
  }
  return out;
}

const char* reason_name(StopReason reason) {
  switch (reason) {
    case StopReason::completed:
      return "completed";
    case StopReason::field_domain_exit:
      return "domain-exit";
    default:
      return "numeric-error";
  }
}

void apply_dotted_override(Config& cfg, const std::string& dotted,
                           const std::string& value) {
  const std::size_t dot = dotted.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == dotted.size()) {
    throw ConfigError("override key '" + dotted + "' must be section.key");
  }
  cfg.set(dotted.substr(0, dot), dotted.substr(dot + 1), value);
}

void print_batch(const BatchSummary& batch, int trials) {
  std::printf("%-24s trials=%d settled=%d failures=%d", batch.label.c_str(),
              trials, batch.settled, batch.failures);
  if (batch.settled > 0) {
    std::printf(" ts[min/q1/med/q3/max]=%.3g/%.3g/%.3g/%.3g/%.3g",
                batch.min_ts, batch.q1_ts, batch.median_ts, batch.q3_ts,
                batch.max_ts);
  }
  std::printf("\n");
}

}  // namespace

int run_simulate(const std::string& config_path,
                 const std::optional<std::string>& traj_out_dir) {
  const Config raw = Config::parse_file(config_path);
  const ExperimentConfig cfg = ExperimentConfig::from_config(raw);

  // Mirror trial 0 of a batch: one stream feeds init sampling and noise.
  RngStream rng(cfg.seed, 0);
  Pose init;
  if (cfg.init.mode == InitSpec::Mode::explicit_list) {
    init = cfg.init.poses.front();
  } else {
    init = sample_initial_conditions(rng, cfg.init, cfg.field);
  }

  SimulationOptions options;
  options.dt = cfg.dt;
  options.t_end = cfg.t_end;
  options.record_stride = cfg.record_stride;
  options.settle_fraction = cfg.settle_fraction;
  options.bootstrap_speed = cfg.bootstrap_speed;

  const SimulationResult result =
      simulate(cfg.field, cfg.controller, cfg.sensors, init, options, &rng);

  const fs::path out_dir = traj_out_dir ? fs::path(*traj_out_dir)
                                        : fs::path(cfg.out_dir);
  write_trajectory_csv(out_dir / "trajectory.csv", result.trajectory);

  std::printf("%s: %s at t=%.6g, final=(%.6g, %.6g, %.6g)\n",
              cfg.label.c_str(), reason_name(result.reason), result.end_time,
              result.final_pose.z1, result.final_pose.z2,
              result.final_pose.theta);
  if (result.settling_time) {
    std::printf("settling_time=%.6g\n", *result.settling_time);
  }
  // Reaching the field's domain boundary (the fan exclusion radius) is the
  // intended terminal event of an approach run, not a failure.
  if (result.reason == StopReason::numeric_error) {
    std::fprintf(stderr, "run aborted: %s\n", result.detail.c_str());
    return 3;
  }
  if (result.reason == StopReason::field_domain_exit) {
    std::printf("stopped at the field domain boundary: %s\n",
                result.detail.c_str());
  }
  return 0;
}

int run_montecarlo(const std::string& config_path,
                   std::optional<int> trials_override,
                   std::optional<std::uint64_t> seed_override,
                   bool write_trial_trajectories) {
  Config raw = Config::parse_file(config_path);
  if (trials_override) {
    raw.set("run", "trials", std::to_string(*trials_override));
  }
  if (seed_override) {
    raw.set("run", "seed", std::to_string(*seed_override));
  }
  const ExperimentConfig base = ExperimentConfig::from_config(raw);

  OutputGuard guard;
  const fs::path out_dir(base.out_dir);
  std::vector<BatchSummary> batches;

  if (base.sweep) {
    for (const std::string& value : base.sweep->values) {
      Config swept = raw;
      apply_dotted_override(swept, base.sweep->key, value);
      swept.set("run", "label", base.sweep->key + "=" + value);
      ExperimentConfig cfg = ExperimentConfig::from_config(swept);
      cfg.sweep.reset();
      BatchSummary batch = monte_carlo(cfg);
      print_batch(batch, cfg.trials);

      const fs::path summary_path =
          out_dir / ("summary_" + sanitize(cfg.label) + ".json");
      write_summary_json(summary_path, batch, cfg.trials);
      guard.track(summary_path);
      batches.push_back(std::move(batch));
    }
  } else {
    BatchSummary batch = monte_carlo(base);
    print_batch(batch, base.trials);
    const fs::path summary_path = out_dir / "summary.json";
    write_summary_json(summary_path, batch, base.trials);
    guard.track(summary_path);
    batches.push_back(std::move(batch));
  }

  const fs::path boxplot_path = out_dir / "boxplot.csv";
  write_boxplot_csv(boxplot_path, batches);
  guard.track(boxplot_path);

  if (write_trial_trajectories) {
    // Re-run each trial of the primary batch with recording on.
    SimulationOptions options;
    options.dt = base.dt;
    options.t_end = base.t_end;
    options.record_stride = base.record_stride;
    options.settle_fraction = base.settle_fraction;
    options.bootstrap_speed = base.bootstrap_speed;
    for (int trial = 0; trial < base.trials; ++trial) {
      RngStream rng(base.seed, static_cast<std::uint64_t>(trial));
      Pose init;
      if (base.init.mode == InitSpec::Mode::explicit_list) {
        init = base.init.poses[static_cast<std::size_t>(trial) %
                               base.init.poses.size()];
      } else {
        init = sample_initial_conditions(rng, base.init, base.field);
      }
      const SimulationResult sim = simulate(base.field, base.controller,
                                            base.sensors, init, options, &rng);
      const fs::path path =
          out_dir / ("trial_" + std::to_string(trial) + ".csv");
      write_trajectory_csv(path, sim.trajectory);
      guard.track(path);
    }
  }

  guard.release();
  return 0;
}

int run_avgcheck(const std::string& config_path) {
  const Config raw = Config::parse_file(config_path);
  const ExperimentConfig cfg = ExperimentConfig::from_config(raw);

  const auto* esc = std::get_if<EscParams>(&cfg.controller);
  const auto* quad = std::get_if<QuadraticField>(&cfg.field);
  if (esc == nullptr || quad == nullptr) {
    throw ConfigError(
        "avgcheck needs controller.type = esc and field.type = quadratic");
  }

  Pose init = trial_initial_pose(0, cfg);
  const AveragingReport report =
      compare_full_vs_averaged(*quad, *esc, init, cfg.t_end);

  OutputGuard guard;
  const fs::path out_dir(cfg.out_dir);
  const fs::path csv_path = out_dir / "avgcheck.csv";
  const fs::path json_path = out_dir / "avgcheck.json";
  write_averaging_csv(csv_path, report);
  guard.track(csv_path);
  write_averaging_json(json_path, report, cfg.config_hash);
  guard.track(json_path);
  guard.release();

  std::printf("%s: sup_error=%.6g over %zu samples\n", cfg.label.c_str(),
              report.sup_error, report.tau.size());
  return 0;
}

int run_gradcheck(const std::string& field_name, int points,
                  std::uint64_t seed, double step, double tol) {
  if (points < 1) throw ConfigError("gradcheck needs at least one point");
  if (!(step > 0.0)) throw ConfigError("gradcheck step must be positive");
  if (!(tol > 0.0)) throw ConfigError("gradcheck tolerance must be positive");

  const FieldSpec field = make_field(field_name);
  const bool fan = std::holds_alternative<FanField>(field);
  const bool small_box = std::holds_alternative<NonQuadAField>(field) ||
                         std::holds_alternative<NonQuadBField>(field);
  const double half = fan ? 4.0 : (small_box ? 1.0 : 5.0);

  RngStream rng(seed);
  double max_rel = 0.0;
  for (int i = 0; i < points; ++i) {
    Vec2 p;
    for (int attempt = 0;; ++attempt) {
      p = {rng.uniform(-half, half), rng.uniform(-half, half)};
      // Keep the central-difference stencil inside the fan domain.
      if (!fan || (p - source_position(field)).norm() >= 0.6) break;
      if (attempt >= 1000) {
        throw ConfigError("could not sample an in-domain point");
      }
    }
    const Vec2 analytic = gradient(field, p);
    const Vec2 numeric = finite_diff_gradient(field, p, step);
    const double rel =
        (analytic - numeric).norm() / std::max(analytic.norm(), 1e-12);
    max_rel = std::max(max_rel, rel);
  }

  std::printf("%s: max relative gradient error %.3e over %d points\n",
              field_name.c_str(), max_rel, points);
  return max_rel <= tol ? 0 : 3;
}

}  // namespace airseek
