#pragma once

#include <optional>
#include <string>
#include <variant>

#include "airseek/esc.hpp"
#include "airseek/field.hpp"
#include "airseek/gradient_ascent.hpp"
#include "airseek/rng.hpp"
#include "airseek/sensors.hpp"
#include "airseek/trajectory.hpp"
#include "airseek/vehicle.hpp"

namespace airseek {

/// Either steering law; the variant selects the closed-loop wiring.
using ControllerConfig = std::variant<GaGains, EscParams>;

enum class StopReason {
  completed,         // ran to t_end
  field_domain_exit, // the vehicle left the field's domain (fan exclusion)
  numeric_error      // non-finite state or control
};

struct SimulationOptions {
  double dt = 1e-3;
  double t_end = 100.0;
  /// Record every record_stride-th integration step (starting at t = 0).
  int record_stride = 1;
  /// Disable trajectory storage entirely (batch runs).
  bool record = true;
  /// When set, report the first time the distance to the field source drops
  /// to this fraction of the initial distance. Checked at every step.
  std::optional<double> settle_fraction;
  /// Forward crawl applied in sensor mode until the gradient proxy first
  /// produces a non-zero sample; without it the loop cannot start from rest.
  double bootstrap_speed = 0.1;
};

struct SimulationResult {
  Trajectory trajectory;
  StopReason reason = StopReason::completed;
  std::string detail;
  double end_time = 0.0;
  Pose final_pose;
  std::optional<double> settling_time;
};

/// Run the sampled-data closed loop: at every step the controller sees the
/// current measurement, its output is held constant over the step, and the
/// vehicle advances by one RK4 step. With a calibration present the gradient
/// (or, for extremum seeking, the field value) is obtained through the
/// emulated sensor array; otherwise the analytic field quantities are used.
/// Domain exits and numeric failures terminate early with the partial record.
SimulationResult simulate(const FieldSpec& field,
                          const ControllerConfig& controller,
                          const std::optional<SensorCalibration>& sensors,
                          const Pose& init, const SimulationOptions& options,
                          RngStream* rng = nullptr);

}  // namespace airseek
