#include "airseek/report.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "airseek/errors.hpp"

namespace airseek {
namespace {

using nlohmann::json;

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path);
  if (!out) {
    throw ConfigError("cannot write output file '" + path.string() + "'");
  }
  return out;
}

json finite_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

}  // namespace

OutputGuard::~OutputGuard() {
  if (!armed_) return;
  for (const std::filesystem::path& p : paths_) {
    std::error_code ec;
    std::filesystem::remove(p, ec);
  }
}

void OutputGuard::track(const std::filesystem::path& path) {
  paths_.push_back(path);
}

void OutputGuard::release() { armed_ = false; }

void write_trajectory_csv(const std::filesystem::path& path,
                          const Trajectory& traj) {
  std::ofstream out = open_output(path);
  write_csv(out, traj);
  if (!out) {
    throw ConfigError("short write to '" + path.string() + "'");
  }
}

void write_summary_json(const std::filesystem::path& path,
                        const BatchSummary& summary, int total_trials) {
  json doc;
  doc["label"] = summary.label;
  doc["trials"] = total_trials;
  doc["settled"] = summary.settled;
  doc["failures"] = summary.failures;
  doc["min_ts"] = finite_or_null(summary.min_ts);
  doc["q1_ts"] = finite_or_null(summary.q1_ts);
  doc["median_ts"] = finite_or_null(summary.median_ts);
  doc["q3_ts"] = finite_or_null(summary.q3_ts);
  doc["max_ts"] = finite_or_null(summary.max_ts);
  doc["config_hash"] = to_hex(summary.config_hash);

  std::ofstream out = open_output(path);
  out << doc.dump(2) << '\n';
  if (!out) {
    throw ConfigError("short write to '" + path.string() + "'");
  }
}

void write_boxplot_csv(const std::filesystem::path& path,
                       const std::vector<BatchSummary>& batches) {
  std::ofstream out = open_output(path);
  out << "group,min,q1,median,q3,max\n";
  char line[256];
  for (const BatchSummary& b : batches) {
    std::snprintf(line, sizeof(line), "%s,%.10g,%.10g,%.10g,%.10g,%.10g\n",
                  b.label.c_str(), b.min_ts, b.q1_ts, b.median_ts, b.q3_ts,
                  b.max_ts);
    out << line;
  }
  if (!out) {
    throw ConfigError("short write to '" + path.string() + "'");
  }
}

void write_averaging_csv(const std::filesystem::path& path,
                         const AveragingReport& report) {
  std::ofstream out = open_output(path);
  out << "tau,zt1,zt2,z1avg_full,z2avg_full,err\n";
  char line[256];
  for (std::size_t i = 0; i < report.tau.size(); ++i) {
    std::snprintf(line, sizeof(line), "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n",
                  report.tau[i], report.zt1[i], report.zt2[i],
                  report.z1_avg_full[i], report.z2_avg_full[i],
                  report.err[i]);
    out << line;
  }
  if (!out) {
    throw ConfigError("short write to '" + path.string() + "'");
  }
}

void write_averaging_json(const std::filesystem::path& path,
                          const AveragingReport& report,
                          std::uint64_t config_hash) {
  json doc;
  doc["sup_error"] = report.sup_error;
  doc["samples"] = report.tau.size();
  doc["config_hash"] = to_hex(config_hash);

  std::ofstream out = open_output(path);
  out << doc.dump(2) << '\n';
  if (!out) {
    throw ConfigError("short write to '" + path.string() + "'");
  }
}

}  // namespace airseek
