#include "airseek/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "airseek/errors.hpp"

namespace airseek {
namespace {

constexpr double kPi = 3.14159265358979323846;

FieldSpec field_from_config(const Config& cfg) {
  const std::string type = cfg.get_or("field", "type", "quadratic");
  if (type == "quadratic") {
    QuadraticField f;
    f.j_star = cfg.get_double_or("field", "j_star", 0.0);
    f.c1 = cfg.get_double_or("field", "c1", 1.0);
    f.c2 = cfg.get_double_or("field", "c2", 1.0);
    f.maximizer.x = cfg.get_double_or("field", "z1_star", 0.0);
    f.maximizer.y = cfg.get_double_or("field", "z2_star", 0.0);
    if (!(f.c1 > 0.0) || !(f.c2 > 0.0)) {
      throw ConfigError("field curvatures c1, c2 must be positive");
    }
    return f;
  }
  if (type == "nonquad_a") return NonQuadAField{};
  if (type == "nonquad_b") return NonQuadBField{};
  if (type == "fan") {
    FanField f;
    if (cfg.has("field", "coeffs")) {
      const std::vector<double> c = cfg.get_doubles("field", "coeffs");
      if (c.size() != f.coeffs.size()) {
        throw ConfigError("field.coeffs expects 5 values, degree 4 first");
      }
      std::copy(c.begin(), c.end(), f.coeffs.begin());
    }
    f.blade_radius = cfg.get_double_or("field", "blade_radius", 0.45);
    f.min_distance = cfg.get_double_or("field", "min_distance", 0.5);
    if (cfg.has("field", "source")) {
      const std::vector<double> s = cfg.get_doubles("field", "source");
      if (s.size() != 2) throw ConfigError("field.source expects 'z1 z2'");
      f.source = {s[0], s[1]};
    }
    if (!(f.blade_radius > 0.0) || !(f.min_distance > 0.0)) {
      throw ConfigError("fan blade_radius and min_distance must be positive");
    }
    return f;
  }
  throw ConfigError("unknown field.type '" + type + "'");
}

ControllerConfig controller_from_config(const Config& cfg) {
  const std::string type = cfg.get("controller", "type");
  if (type == "ga") {
    GaGains g;
    g.k1 = cfg.get_double("controller", "k1");
    g.k2 = cfg.get_double("controller", "k2");
    g.validate();
    return g;
  }
  if (type == "esc") {
    EscParams p;
    p.k1 = cfg.get_double("controller", "k1");
    p.k2 = cfg.get_double("controller", "k2");
    p.a = cfg.get_double("controller", "a");
    p.omega0 = cfg.get_double("controller", "omega0");
    p.h = cfg.get_double("controller", "h");
    p.c_z1 = cfg.get_double("controller", "c_z1");
    p.c_z2 = cfg.get_double("controller", "c_z2");
    p.validate();
    return p;
  }
  throw ConfigError("controller.type must be 'ga' or 'esc'");
}

std::optional<SensorCalibration> sensors_from_config(const Config& cfg) {
  if (!cfg.get_bool_or("sensor", "enabled", false)) return std::nullopt;
  SensorCalibration cal;
  cal.gain = cfg.get_double_or("sensor", "gain", 23.80);
  cal.r0 = cfg.get_double_or("sensor", "r0", 47600.0);
  cal.adc_bits = static_cast<int>(cfg.get_int_or("sensor", "adc_bits", 10));
  cal.noise_std = cfg.get_double_or("sensor", "noise_std", 0.0);
  cal.validate();
  return cal;
}

InitSpec init_from_config(const Config& cfg) {
  InitSpec init;
  const std::string mode = cfg.get_or("init", "mode", "random");
  if (mode == "explicit") {
    init.mode = InitSpec::Mode::explicit_list;
    for (const std::string& raw : cfg.get_all("init", "pose")) {
      const Config one = Config::parse_string("[p]\nv = " + raw, "pose");
      const std::vector<double> v = one.get_doubles("p", "v");
      if (v.size() != 3) {
        throw ConfigError("init.pose expects 'z1 z2 heading_deg'");
      }
      init.poses.push_back({v[0], v[1], v[2] * kPi / 180.0});
    }
    if (init.poses.empty()) {
      throw ConfigError("explicit init mode needs at least one init.pose");
    }
    return init;
  }
  if (mode != "random") {
    throw ConfigError("init.mode must be 'explicit' or 'random'");
  }
  init.mode = InitSpec::Mode::random_box;
  const auto range = [&cfg](const std::string& key, double lo_default,
                            double hi_default) {
    if (!cfg.has("init", key)) return std::pair{lo_default, hi_default};
    const std::vector<double> v = cfg.get_doubles("init", key);
    if (v.size() != 2 || !(v[0] <= v[1])) {
      throw ConfigError("init." + key + " expects 'lo hi' with lo <= hi");
    }
    return std::pair{v[0], v[1]};
  };
  std::tie(init.z1_min, init.z1_max) = range("z1_range", -5.0, 5.0);
  std::tie(init.z2_min, init.z2_max) = range("z2_range", -5.0, 5.0);
  const auto [hlo, hhi] = range("heading_range_deg", 0.0, 360.0);
  init.heading_min = hlo * kPi / 180.0;
  init.heading_max = hhi * kPi / 180.0;
  return init;
}

std::optional<SweepSpec> sweep_from_config(const Config& cfg) {
  if (!cfg.has("sweep", "key")) return std::nullopt;
  SweepSpec sweep;
  sweep.key = cfg.get("sweep", "key");
  if (sweep.key.find('.') == std::string::npos) {
    throw ConfigError("sweep.key must use the dotted section.key form");
  }
  const Config list =
      Config::parse_string("[s]\nv = " + cfg.get("sweep", "values"), "sweep");
  for (const double v : list.get_doubles("s", "v")) {
    // Store values the way they would appear in a config file.
    std::string text = std::to_string(v);
    text.erase(text.find_last_not_of('0') + 1);
    if (!text.empty() && text.back() == '.') text.pop_back();
    sweep.values.push_back(text);
  }
  if (sweep.values.empty()) {
    throw ConfigError("sweep.values must list at least one value");
  }
  return sweep;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_config(const Config& cfg) {
  ExperimentConfig out;
  out.field = field_from_config(cfg);
  out.controller = controller_from_config(cfg);
  out.sensors = sensors_from_config(cfg);
  out.init = init_from_config(cfg);
  out.sweep = sweep_from_config(cfg);

  out.trials = static_cast<int>(cfg.get_int_or("run", "trials", 1));
  if (out.trials < 1) throw ConfigError("run.trials must be at least 1");
  out.dt = cfg.get_double_or("run", "dt", out.trials > 1 ? 1e-2 : 1e-3);
  if (!(out.dt > 0.0)) throw ConfigError("run.dt must be positive");
  out.t_end = cfg.get_double_or("run", "t_end", 100.0);
  if (!(out.t_end > out.dt)) {
    throw ConfigError("run.t_end must exceed run.dt");
  }
  out.seed = static_cast<std::uint64_t>(cfg.get_int_or("run", "seed", 1));
  out.settle_fraction = cfg.get_double_or("run", "settle_fraction", 0.2);
  if (!(out.settle_fraction > 0.0 && out.settle_fraction < 1.0)) {
    throw ConfigError("run.settle_fraction must lie in (0, 1)");
  }
  out.record_stride =
      static_cast<int>(cfg.get_int_or("run", "record_stride", 1));
  if (out.record_stride < 1) {
    throw ConfigError("run.record_stride must be at least 1");
  }
  out.bootstrap_speed = cfg.get_double_or("run", "bootstrap_speed", 0.1);
  out.threads = static_cast<int>(cfg.get_int_or("run", "threads", 0));
  out.out_dir = cfg.get_or("run", "out_dir", "out");
  out.label = cfg.get_or("run", "label", "run");

  if (const auto* esc = std::get_if<EscParams>(&out.controller)) {
    // Keep at least ~63 samples per dither period.
    if (esc->omega0 * out.dt > 0.1 * (1.0 + 1e-9)) {
      throw ConfigError(
          "run.dt too coarse for the dither: omega0 * dt must not exceed 0.1");
    }
  }
  if (out.init.mode == InitSpec::Mode::random_box) {
    if (const auto* fan = std::get_if<FanField>(&out.field)) {
      const double lo_x = out.init.z1_min, hi_x = out.init.z1_max;
      const double lo_y = out.init.z2_min, hi_y = out.init.z2_max;
      const bool whole_box_excluded =
          std::max(std::abs(lo_x - fan->source.x),
                   std::abs(hi_x - fan->source.x)) < fan->min_distance &&
          std::max(std::abs(lo_y - fan->source.y),
                   std::abs(hi_y - fan->source.y)) < fan->min_distance;
      if (whole_box_excluded) {
        throw ConfigError("init box lies entirely inside the fan exclusion");
      }
    }
  }

  out.config_hash = cfg.hash();
  return out;
}

std::optional<double> settling_time(const Trajectory& traj, const Vec2& source,
                                    double fraction) {
  if (traj.empty()) {
    throw ValidationError("settling time of an empty trajectory");
  }
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw ValidationError("settle fraction must lie in (0, 1)");
  }
  const double initial =
      (traj.front().pose.position() - source).norm();
  const double radius = fraction * initial;
  for (const TrajectorySample& s : traj.samples) {
    if ((s.pose.position() - source).norm() <= radius) return s.t;
  }
  return std::nullopt;
}

Pose sample_initial_conditions(RngStream& rng, const InitSpec& init,
                               const FieldSpec& field) {
  if (init.mode != InitSpec::Mode::random_box) {
    throw ValidationError("sampling requires a random-box init spec");
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Pose pose;
    pose.z1 = rng.uniform(init.z1_min, init.z1_max);
    pose.z2 = rng.uniform(init.z2_min, init.z2_max);
    pose.theta = rng.uniform(init.heading_min, init.heading_max);
    if (in_domain(field, pose.position())) return pose;
  }
  throw ConfigError(
      "could not sample an in-domain initial pose after 1000 attempts");
}

Pose trial_initial_pose(int trial, const ExperimentConfig& cfg) {
  if (cfg.init.mode == InitSpec::Mode::explicit_list) {
    return cfg.init.poses[static_cast<std::size_t>(trial) %
                          cfg.init.poses.size()];
  }
  RngStream rng(cfg.seed, static_cast<std::uint64_t>(trial));
  return sample_initial_conditions(rng, cfg.init, cfg.field);
}

double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  if (sorted.size() == 1) return sorted.front();
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

BatchSummary monte_carlo(const ExperimentConfig& cfg) {
  BatchSummary summary;
  summary.label = cfg.label;
  summary.config_hash = cfg.config_hash;
  summary.trials.resize(static_cast<std::size_t>(cfg.trials));

  const Vec2 source = source_position(cfg.field);

  const auto run_trial = [&cfg, &source](int trial) -> TrialResult {
    RngStream rng(cfg.seed, static_cast<std::uint64_t>(trial));
    Pose init;
    if (cfg.init.mode == InitSpec::Mode::explicit_list) {
      init = cfg.init.poses[static_cast<std::size_t>(trial) %
                            cfg.init.poses.size()];
    } else {
      init = sample_initial_conditions(rng, cfg.init, cfg.field);
    }

    SimulationOptions options;
    options.dt = cfg.dt;
    options.t_end = cfg.t_end;
    options.record = false;
    options.settle_fraction = cfg.settle_fraction;
    options.bootstrap_speed = cfg.bootstrap_speed;

    const SimulationResult sim =
        simulate(cfg.field, cfg.controller, cfg.sensors, init, options, &rng);

    TrialResult out;
    out.trial = trial;
    out.init = init;
    out.settling_time = sim.settling_time;
    out.final_distance = (sim.final_pose.position() - source).norm();
    out.end_time = sim.end_time;
    out.reason = sim.reason;
    return out;
  };

  unsigned workers = cfg.threads > 0
                         ? static_cast<unsigned>(cfg.threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(cfg.trials));

  if (workers <= 1) {
    for (int i = 0; i < cfg.trials; ++i) {
      summary.trials[static_cast<std::size_t>(i)] = run_trial(i);
    }
  } else {
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          const int i = next.fetch_add(1);
          if (i >= cfg.trials) return;
          try {
            summary.trials[static_cast<std::size_t>(i)] = run_trial(i);
          } catch (...) {
            std::scoped_lock lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            return;
          }
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<double> settled_times;
  settled_times.reserve(summary.trials.size());
  for (const TrialResult& r : summary.trials) {
    if (r.settling_time) {
      settled_times.push_back(*r.settling_time);
    }
  }
  std::sort(settled_times.begin(), settled_times.end());

  summary.settled = static_cast<int>(settled_times.size());
  summary.failures = cfg.trials - summary.settled;
  summary.min_ts = quantile(settled_times, 0.0);
  summary.q1_ts = quantile(settled_times, 0.25);
  summary.median_ts = quantile(settled_times, 0.5);
  summary.q3_ts = quantile(settled_times, 0.75);
  summary.max_ts = quantile(settled_times, 1.0);
  return summary;
}

}  // namespace airseek
