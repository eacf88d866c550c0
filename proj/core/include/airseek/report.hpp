#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "airseek/averaging.hpp"
#include "airseek/experiment.hpp"
#include "airseek/trajectory.hpp"

namespace airseek {

/// Removes every tracked file on destruction unless release() was called;
/// keeps partially written output from surviving a failed run.
class OutputGuard {
 public:
  OutputGuard() = default;
  OutputGuard(const OutputGuard&) = delete;
  OutputGuard& operator=(const OutputGuard&) = delete;
  ~OutputGuard();

  void track(const std::filesystem::path& path);
  void release();

 private:
  std::vector<std::filesystem::path> paths_;
  bool armed_ = true;
};

void write_trajectory_csv(const std::filesystem::path& path,
                          const Trajectory& traj);

/// Batch summary JSON. Keys include median_ts, q1_ts, q3_ts, failures and
/// config_hash; quartiles are null when no trial settled.
void write_summary_json(const std::filesystem::path& path,
                        const BatchSummary& summary, int total_trials);

/// One row per batch: group,min,q1,median,q3,max.
void write_boxplot_csv(const std::filesystem::path& path,
                       const std::vector<BatchSummary>& batches);

/// Slow-time comparison table (tau,zt1,zt2,z1avg_full,z2avg_full,err) plus a
/// JSON summary carrying sup_error.
void write_averaging_csv(const std::filesystem::path& path,
                         const AveragingReport& report);
void write_averaging_json(const std::filesystem::path& path,
                          const AveragingReport& report,
                          std::uint64_t config_hash);

}  // namespace airseek
