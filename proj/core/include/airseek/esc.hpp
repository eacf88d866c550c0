#pragma once

#include "airseek/vec2.hpp"
#include "airseek/vehicle.hpp"

namespace airseek {

/// Extremum-seeking parameters: dither amplitude a and frequency omega0,
/// washout cutoff h, demodulation gains c_z1/c_z2, steering gains k1/k2.
struct EscParams {
  double a = 0.2;
  double omega0 = 10.0;
  double h = 3.0;
  double c_z1 = 0.5;
  double c_z2 = 0.5;
  double k1 = 1.0;
  double k2 = 20.0;

  void validate() const;
};

/// State of the discrete washout (high-pass) filter s/(s+h).
/// The low-pass shadow starts on the first measurement so the initial
/// transient is zero.
struct WashoutState {
  double lowpass = 0.0;
  bool initialized = false;
};

struct WashoutResult {
  WashoutState state;
  double delta = 0.0;
};

/// Advance the washout filter by dt under a measurement held constant over
/// the step (exact zero-order-hold discretization):
///   lowpass' = j + (lowpass - j) exp(-h dt),  delta = j - lowpass'.
WashoutResult washout_step(const WashoutState& state, double j, double dt,
                           double h);

/// Demodulated gradient estimate at time t:
///   est_1 =  c_z1 delta sin(omega0 t) + a omega0 cos(omega0 t)
///   est_2 = -c_z2 delta cos(omega0 t) + a omega0 sin(omega0 t)
/// The additive dither terms double as the probing excitation.
Vec2 esc_gradient_estimate(double delta, double t, const EscParams& p);

/// Steering from the estimate, with the quarter turn taken counter-clockwise:
///   u = k1 <v, est>,  omega = -k2 <v, (-est_2, est_1)>.
ControlInput esc_control(const Vec2& estimate, double theta,
                         const EscParams& p);

struct EscStepResult {
  WashoutState state;
  ControlInput control;
  Vec2 estimate{0.0, 0.0};
  double delta = 0.0;
};

/// One controller tick: washout update, demodulation at time t, steering.
EscStepResult esc_controller_step(const WashoutState& state, double j_measured,
                                  double t, double dt, double theta,
                                  const EscParams& p);

}  // namespace airseek
