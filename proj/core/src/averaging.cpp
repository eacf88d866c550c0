#include "airseek/averaging.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "airseek/errors.hpp"
#include "airseek/integrate.hpp"
#include "airseek/simulate.hpp"

namespace airseek {

void AveragingParams::validate() const {
  const bool finite = std::isfinite(a) && std::isfinite(omega0) &&
                      std::isfinite(c_z1) && std::isfinite(c_z2) &&
                      std::isfinite(k1) && std::isfinite(k2) &&
                      std::isfinite(c1) && std::isfinite(c2);
  if (!finite || !(a > 0.0) || !(omega0 > 0.0) || !(c_z1 > 0.0) ||
      !(c_z2 > 0.0) || !(k1 > 0.0) || !(k2 > 0.0) || !(c1 > 0.0) ||
      !(c2 > 0.0)) {
    throw ValidationError("averaging parameters must be positive");
  }
}

AveragingParams AveragingParams::from(const EscParams& esc,
                                      const QuadraticField& f) {
  esc.validate();
  AveragingParams p;
  p.a = esc.a;
  p.omega0 = esc.omega0;
  p.c_z1 = esc.c_z1;
  p.c_z2 = esc.c_z2;
  p.k1 = esc.k1;
  p.k2 = esc.k2;
  p.c1 = f.c1;
  p.c2 = f.c2;
  p.validate();
  return p;
}

AveragedState averaged_rhs(const AveragedState& s, const AveragingParams& p) {
  p.validate();
  const double b1 = p.c_z1 * p.c1 * s.zt1 * s.z5 + p.c_z2 * p.c2 * s.zt2 * s.z6;
  const double b2 = p.c_z1 * p.c1 * s.zt1 * s.z6 - p.c_z2 * p.c2 * s.zt2 * s.z5;
  const double g1 = p.a * p.k1 / p.omega0;
  const double g2 = p.a * p.k2 / p.omega0;
  return {-g1 * s.z5 * b1, -g1 * s.z6 * b1, g2 * s.z6 * b2, -g2 * s.z5 * b2};
}

AveragedState averaged_step(const AveragedState& s, const AveragingParams& p,
                            double dtau) {
  if (!(dtau > 0.0) || !std::isfinite(dtau)) {
    throw ValidationError("averaged step size must be positive");
  }
  const std::array<double, 4> y{s.zt1, s.zt2, s.z5, s.z6};
  const auto rhs = [&p](const std::array<double, 4>& v,
                        double) -> std::array<double, 4> {
    const AveragedState d =
        averaged_rhs({v[0], v[1], v[2], v[3]}, p);
    return {d.zt1, d.zt2, d.z5, d.z6};
  };
  std::array<double, 4> out = rk4_step(y, 0.0, dtau, rhs);

  // (z5, z6) drifts off the unit circle only through roundoff; pin it back.
  const double n = std::sqrt(out[2] * out[2] + out[3] * out[3]);
  if (!(n > 0.0)) {
    throw ValidationError("averaged heading state collapsed to zero");
  }
  return {out[0], out[1], out[2] / n, out[3] / n};
}

double lyapunov_ga(double j_value, double j_star, double z3, double z4) {
  return j_star - j_value + 0.5 * (z3 * z3 + z4 * z4);
}

double lyapunov_esc(const AveragedState& s, const AveragingParams& p) {
  p.validate();
  return 0.5 * (p.c_z1 * p.c1 * s.zt1 * s.zt1 +
                p.c_z2 * p.c2 * s.zt2 * s.zt2 + s.z5 * s.z5 + s.z6 * s.z6);
}

Trajectory moving_average(const Trajectory& traj, double omega0, int periods) {
  if (traj.empty()) {
    throw ValidationError("moving average of an empty trajectory");
  }
  if (!(omega0 > 0.0) || !std::isfinite(omega0) || periods < 1) {
    throw ValidationError("moving average needs omega0 > 0 and periods >= 1");
  }
  if (!(traj.dt > 0.0)) {
    throw ValidationError("moving average needs a positive sample spacing");
  }

  const double window = 2.0 * 3.14159265358979323846 * periods / omega0;
  const std::size_t w =
      static_cast<std::size_t>(std::llround(window / traj.dt));
  if (w < 1 || w > traj.size()) {
    throw ValidationError("moving-average window does not fit the record");
  }

  Trajectory out;
  out.dt = traj.dt;
  out.samples.resize(traj.size() - w + 1);
  // Rectangular (left-Riemann) mean over samples [i, i + w), maintained as
  // sliding sums so long records stay O(n).
  double z1 = 0.0, z2 = 0.0, theta = 0.0, u = 0.0, omega = 0.0, j = 0.0,
         gx = 0.0, gy = 0.0;
  for (std::size_t k = 0; k < w; ++k) {
    const TrajectorySample& s = traj.samples[k];
    z1 += s.pose.z1;
    z2 += s.pose.z2;
    theta += s.pose.theta;
    u += s.control.u;
    omega += s.control.omega;
    j += s.j;
    gx += s.grad_est.x;
    gy += s.grad_est.y;
  }
  const double inv = 1.0 / static_cast<double>(w);
  for (std::size_t i = 0;; ++i) {
    TrajectorySample& o = out.samples[i];
    o.t = traj.samples[i].t;
    o.pose = {z1 * inv, z2 * inv, theta * inv};
    o.control = {u * inv, omega * inv};
    o.j = j * inv;
    o.grad_est = {gx * inv, gy * inv};
    if (i + w >= traj.size()) break;
    const TrajectorySample& add = traj.samples[i + w];
    const TrajectorySample& drop = traj.samples[i];
    z1 += add.pose.z1 - drop.pose.z1;
    z2 += add.pose.z2 - drop.pose.z2;
    theta += add.pose.theta - drop.pose.theta;
    u += add.control.u - drop.control.u;
    omega += add.control.omega - drop.control.omega;
    j += add.j - drop.j;
    gx += add.grad_est.x - drop.grad_est.x;
    gy += add.grad_est.y - drop.grad_est.y;
  }
  return out;
}

AveragingReport compare_full_vs_averaged(const QuadraticField& field,
                                         const EscParams& esc,
                                         const Pose& init, double t_end,
                                         int steps_per_period, double dtau) {
  esc.validate();
  if (steps_per_period < 1) {
    throw ValidationError("steps per period must be positive");
  }
  const double two_pi = 2.0 * 3.14159265358979323846;
  const double dt = two_pi / (esc.omega0 * steps_per_period);

  SimulationOptions options;
  options.dt = dt;
  options.t_end = t_end;
  SimulationResult full =
      simulate(FieldSpec{field}, ControllerConfig{esc}, std::nullopt, init,
               options);
  if (full.reason != StopReason::completed) {
    throw ValidationError("full extremum-seeking run failed: " + full.detail);
  }

  const Trajectory averaged_full = moving_average(full.trajectory, esc.omega0);

  // Matched initial conditions: subtract the dither offsets at t = 0.
  const AveragingParams params = AveragingParams::from(esc, field);
  AveragedState state{init.z1 - field.maximizer.x,
                      init.z2 - field.maximizer.y + esc.a,
                      std::cos(init.theta), std::sin(init.theta)};

  AveragingReport report;
  const std::size_t n = averaged_full.size();
  report.tau.resize(n);
  report.zt1.resize(n);
  report.zt2.resize(n);
  report.z1_avg_full.resize(n);
  report.z2_avg_full.resize(n);
  report.err.resize(n);

  double tau_now = 0.0;
  AveragedState prev = state;
  double tau_prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double tau_i = esc.omega0 * averaged_full.samples[i].t;
    // March the slow-time integrator up to tau_i, then interpolate.
    while (tau_now < tau_i) {
      prev = state;
      tau_prev = tau_now;
      state = averaged_step(state, params, dtau);
      tau_now += dtau;
    }
    double zt1_i = state.zt1;
    double zt2_i = state.zt2;
    if (tau_now > tau_prev && tau_i < tau_now) {
      const double f = (tau_i - tau_prev) / (tau_now - tau_prev);
      zt1_i = prev.zt1 + f * (state.zt1 - prev.zt1);
      zt2_i = prev.zt2 + f * (state.zt2 - prev.zt2);
    }

    const double z1_model = field.maximizer.x + zt1_i;
    const double z2_model = field.maximizer.y + zt2_i;
    const double z1_full = averaged_full.samples[i].pose.z1;
    const double z2_full = averaged_full.samples[i].pose.z2;
    const double err = std::max(std::abs(z1_full - z1_model),
                                std::abs(z2_full - z2_model));

    report.tau[i] = tau_i;
    report.zt1[i] = zt1_i;
    report.zt2[i] = zt2_i;
    report.z1_avg_full[i] = z1_full;
    report.z2_avg_full[i] = z2_full;
    report.err[i] = err;
    report.sup_error = std::max(report.sup_error, err);
  }
  return report;
}

}  // namespace airseek
