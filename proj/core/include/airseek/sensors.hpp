#pragma once

#include <array>

#include "airseek/field.hpp"
#include "airseek/gradient_ascent.hpp"
#include "airseek/rng.hpp"
#include "airseek/vec2.hpp"
#include "airseek/vehicle.hpp"

namespace airseek {

/// Calibration of one piezoresistive flow sensor plus its readout chain.
/// gain maps airflow speed (m/s) to the relative resistance change
/// dR/r0 = s / gain; the ADC spans +-gain with mid-scale at zero.
/// adc_bits = 0 disables quantization (ideal readout).
struct SensorCalibration {
  double gain = 23.80;
  double r0 = 47600.0;
  int adc_bits = 10;
  double noise_std = 0.0;

  void validate() const;
};

/// Resistance change (Ohm) produced by airflow speed s (m/s).
double airflow_to_resistance(double s, const SensorCalibration& cal);

/// Airflow speed (m/s) recovered from a resistance change (Ohm).
double resistance_to_airflow(double delta_r, const SensorCalibration& cal);

/// One frame of the four-sensor array. s holds the per-sensor exposed
/// magnitudes in order front, left, rear, right; s_z1r/s_z2r are the signed
/// body-axis components reconstructed from the dominant sensor of each
/// opposing pair; s_r is the total flow magnitude.
struct SensorFrameReading {
  std::array<double, 4> s{0.0, 0.0, 0.0, 0.0};
  double s_z1r = 0.0;
  double s_z2r = 0.0;
  double s_r = 0.0;
};

/// Airflow vector at the vehicle, expressed in the body frame. The emulated
/// wind is aligned with the field gradient and carries the field value as
/// magnitude: w = (grad J / |grad J|) * J, or zero where grad J = 0.
Vec2 wind_at(const FieldSpec& field, const Pose& pose);

/// Emulate the array response to a body-frame wind vector: axis projection
/// onto the four sensors, additive Gaussian noise (when rng is non-null and
/// noise_std > 0), clamping to the calibrated span, resistance round-trip
/// with optional ADC quantization, then per-pair sign reconstruction.
SensorFrameReading measure(const Vec2& wind_body, const SensorCalibration& cal,
                           RngStream* rng);

/// Memory of the finite-difference gradient magnitude estimator.
struct GradientProxyState {
  double prev_s_r = 0.0;
  Vec2 prev_position{0.0, 0.0};
  bool valid = false;
};

struct GradientProxyResult {
  GradientProxyState state;
  GradientSample sample;
};

/// Default displacement guard for the dirty derivative (meters).
inline constexpr double kProxyMinDisplacement = 1e-4;

/// Default flow-magnitude guard below which no direction is assigned (m/s).
inline constexpr double kProxyMinFlowNorm = 1e-6;

/// Body-frame gradient proxy: direction from the reconstructed flow vector,
/// magnitude from the dirty derivative of s_r over the odometry displacement.
/// Degenerate frames (first call, displacement below min_displacement, flow
/// below min_flow_norm) yield a zero gradient rather than a division blow-up.
GradientProxyResult gradient_proxy(const SensorFrameReading& reading,
                                   const GradientProxyState& state,
                                   const Vec2& odom_position,
                                   double min_displacement = kProxyMinDisplacement,
                                   double min_flow_norm = kProxyMinFlowNorm);

}  // namespace airseek
