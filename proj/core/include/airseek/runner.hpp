#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace airseek {

/// High-level entry points backing the command-line tool. Each loads the
/// config, runs, writes outputs under the run's output directory and prints
/// a short human-readable summary to stdout. They throw ConfigError for
/// configuration problems and ValidationError / DomainError for runtime
/// failures; the CLI maps those to exit codes 2 and 3.

/// Single closed-loop run (trial 0 of the config). Writes trajectory.csv.
/// Returns 0 on completion, 3 when the run aborted early (the partial
/// trajectory is still written).
int run_simulate(const std::string& config_path,
                 const std::optional<std::string>& traj_out_dir);

/// Batch run; optional trial/seed overrides replace the config values
/// before hashing. Writes summary JSON and boxplot.csv, optionally one
/// trajectory CSV per trial. Always returns 0; unsettled trials are
/// reported in the summary.
int run_montecarlo(const std::string& config_path,
                   std::optional<int> trials_override,
                   std::optional<std::uint64_t> seed_override,
                   bool write_trial_trajectories);

/// Full-loop versus averaged-model comparison on a quadratic field with an
/// extremum-seeking controller. Writes avgcheck.csv and avgcheck.json.
int run_avgcheck(const std::string& config_path);

/// Analytic-versus-central-difference gradient check on a stock field.
/// Returns 0 when the max relative error stays below tol, 3 otherwise.
int run_gradcheck(const std::string& field_name, int points,
                  std::uint64_t seed, double step, double tol);

}  // namespace airseek
