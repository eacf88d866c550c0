#include "airseek/esc.hpp"

#include <cmath>

#include "airseek/errors.hpp"

namespace airseek {

void EscParams::validate() const {
  const bool finite = std::isfinite(a) && std::isfinite(omega0) &&
                      std::isfinite(h) && std::isfinite(c_z1) &&
                      std::isfinite(c_z2) && std::isfinite(k1) &&
                      std::isfinite(k2);
  if (!finite || !(a > 0.0) || !(omega0 > 0.0) || !(h > 0.0) ||
      !(c_z1 > 0.0) || !(c_z2 > 0.0) || !(k1 > 0.0) || !(k2 > 0.0)) {
    throw ValidationError("extremum-seeking parameters must be positive");
  }
}

WashoutResult washout_step(const WashoutState& state, double j, double dt,
                           double h) {
  if (!std::isfinite(j)) {
    throw ValidationError("washout update with non-finite measurement");
  }
  if (!(dt > 0.0) || !std::isfinite(dt) || !(h > 0.0) || !std::isfinite(h)) {
    throw ValidationError("washout update needs dt > 0 and h > 0");
  }

  WashoutState next;
  next.initialized = true;
  if (!state.initialized) {
    // First sample: the shadow starts on the measurement, delta = 0.
    next.lowpass = j;
    return {next, 0.0};
  }
  next.lowpass = j + (state.lowpass - j) * std::exp(-h * dt);
  return {next, j - next.lowpass};
}

Vec2 esc_gradient_estimate(double delta, double t, const EscParams& p) {
  p.validate();
  if (!std::isfinite(delta) || !std::isfinite(t)) {
    throw ValidationError("gradient estimate with non-finite inputs");
  }
  const double s = std::sin(p.omega0 * t);
  const double c = std::cos(p.omega0 * t);
  return {p.c_z1 * delta * s + p.a * p.omega0 * c,
          -p.c_z2 * delta * c + p.a * p.omega0 * s};
}

ControlInput esc_control(const Vec2& estimate, double theta,
                         const EscParams& p) {
  p.validate();
  if (!estimate.finite() || !std::isfinite(theta)) {
    throw ValidationError("extremum-seeking control from non-finite inputs");
  }
  const Vec2 v = heading_vector(theta);
  const Vec2 est_perp{-estimate.y, estimate.x};
  return {p.k1 * v.dot(estimate), -p.k2 * v.dot(est_perp)};
}

EscStepResult esc_controller_step(const WashoutState& state, double j_measured,
                                  double t, double dt, double theta,
                                  const EscParams& p) {
  const WashoutResult w = washout_step(state, j_measured, dt, p.h);
  const Vec2 est = esc_gradient_estimate(w.delta, t, p);
  return {w.state, esc_control(est, theta, p), est, w.delta};
}

}  // namespace airseek
