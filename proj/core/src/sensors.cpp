#include "airseek/sensors.hpp"

#include <algorithm>
#include <cmath>

#include "airseek/errors.hpp"

namespace airseek {
namespace {

// Round-to-nearest ADC over +-gain with mid-scale zero. The code range is
// symmetric so the worst-case error anywhere on the span is gain / 2^bits.
double quantize(double s, int bits, double gain) {
  const double lsb = gain * std::pow(2.0, 1 - bits);
  const double max_code = std::pow(2.0, bits - 1);
  double code = std::nearbyint(s / lsb);
  code = std::clamp(code, -max_code, max_code);
  return code * lsb;
}

}  // namespace

void SensorCalibration::validate() const {
  if (!(gain > 0.0) || !std::isfinite(gain) || !(r0 > 0.0) ||
      !std::isfinite(r0)) {
    throw ValidationError("sensor gain and base resistance must be positive");
  }
  if (adc_bits != 0 && (adc_bits < 8 || adc_bits > 16)) {
    throw ValidationError("adc_bits must be 0 (disabled) or within [8, 16]");
  }
  if (!(noise_std >= 0.0) || !std::isfinite(noise_std)) {
    throw ValidationError("sensor noise level must be non-negative");
  }
}

double airflow_to_resistance(double s, const SensorCalibration& cal) {
  cal.validate();
  if (!std::isfinite(s)) {
    throw ValidationError("airflow speed must be finite");
  }
  return s / cal.gain * cal.r0;
}

double resistance_to_airflow(double delta_r, const SensorCalibration& cal) {
  cal.validate();
  if (!std::isfinite(delta_r)) {
    throw ValidationError("resistance change must be finite");
  }
  return delta_r / cal.r0 * cal.gain;
}

Vec2 wind_at(const FieldSpec& field, const Pose& pose) {
  const Vec2 g = gradient(field, pose.position());
  const double n = g.norm();
  if (n == 0.0) return {0.0, 0.0};
  const Vec2 world = g * (eval(field, pose.position()) / n);
  return rotated(world, -pose.theta);
}

SensorFrameReading measure(const Vec2& wind_body, const SensorCalibration& cal,
                           RngStream* rng) {
  cal.validate();
  if (!wind_body.finite()) {
    throw ValidationError("sensor frame with non-finite wind");
  }

  SensorFrameReading out;
  // Order: front (+z1), left (+z2), rear (-z1), right (-z2).
  out.s = {std::max(wind_body.x, 0.0), std::max(wind_body.y, 0.0),
           std::max(-wind_body.x, 0.0), std::max(-wind_body.y, 0.0)};

  for (double& s : out.s) {
    if (rng != nullptr && cal.noise_std > 0.0) {
      s += rng->gaussian(0.0, cal.noise_std);
    }
    // Exposed magnitudes saturate at the calibrated span and cannot be
    // negative; the round-trip otherwise preserves the value exactly.
    s = std::clamp(s, 0.0, cal.gain);
    s = resistance_to_airflow(airflow_to_resistance(s, cal), cal);
    if (cal.adc_bits != 0) s = quantize(s, cal.adc_bits, cal.gain);
  }

  // Dominant sensor of each opposing pair carries the axis sign; the rear
  // and right sensors count negative. Ties resolve to the lower index.
  out.s_z1r = out.s[0] >= out.s[2] ? out.s[0] : -out.s[2];
  out.s_z2r = out.s[1] >= out.s[3] ? out.s[1] : -out.s[3];
  out.s_r = std::sqrt(out.s_z1r * out.s_z1r + out.s_z2r * out.s_z2r);
  return out;
}

GradientProxyResult gradient_proxy(const SensorFrameReading& reading,
                                   const GradientProxyState& state,
                                   const Vec2& odom_position,
                                   double min_displacement,
                                   double min_flow_norm) {
  if (!odom_position.finite()) {
    throw ValidationError("gradient proxy with non-finite odometry");
  }
  if (!(min_displacement > 0.0) || !(min_flow_norm > 0.0)) {
    throw ValidationError("gradient proxy guards must be positive");
  }

  GradientProxyState next{reading.s_r, odom_position, true};

  Vec2 grad{0.0, 0.0};
  if (state.valid) {
    const double delta = (odom_position - state.prev_position).norm();
    const Vec2 flow{reading.s_z1r, reading.s_z2r};
    if (delta >= min_displacement && flow.norm() > min_flow_norm) {
      const double dj = (reading.s_r - state.prev_s_r) / delta;
      grad = flow.normalized() * dj;
    }
  }
  return {next, make_gradient_sample(grad, GradientFrame::body)};
}

}  // namespace airseek
