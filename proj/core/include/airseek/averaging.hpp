#pragma once

#include <vector>

#include "airseek/esc.hpp"
#include "airseek/field.hpp"
#include "airseek/trajectory.hpp"
#include "airseek/vehicle.hpp"

namespace airseek {

/// State of the averaged extremum-seeking loop in slow time tau = omega0 t:
/// shifted position (zt1, zt2) and heading direction (z5, z6) on the unit
/// circle.
struct AveragedState {
  double zt1 = 0.0;
  double zt2 = 0.0;
  double z5 = 1.0;
  double z6 = 0.0;
};

/// Parameters of the averaged loop: dither and steering parameters plus the
/// quadratic field curvatures c1, c2.
struct AveragingParams {
  double a = 0.2;
  double omega0 = 10.0;
  double c_z1 = 0.5;
  double c_z2 = 0.5;
  double k1 = 1.0;
  double k2 = 20.0;
  double c1 = 1.0;
  double c2 = 1.0;

  void validate() const;

  static AveragingParams from(const EscParams& esc, const QuadraticField& f);
};

/// Right-hand side of the averaged dynamics:
///   zt1' = -(a k1 / omega0) z5 B1      z5' =  (a k2 / omega0) z6 B2
///   zt2' = -(a k1 / omega0) z6 B1      z6' = -(a k2 / omega0) z5 B2
/// with B1 = c_z1 c1 zt1 z5 + c_z2 c2 zt2 z6 and
///      B2 = c_z1 c1 zt1 z6 - c_z2 c2 zt2 z5.
AveragedState averaged_rhs(const AveragedState& s, const AveragingParams& p);

/// One RK4 step of size dtau followed by renormalization of (z5, z6).
AveragedState averaged_step(const AveragedState& s, const AveragingParams& p,
                            double dtau);

/// V = -J + (z3^2 + z4^2)/2 + J*; non-increasing along gradient-ascent runs.
double lyapunov_ga(double j_value, double j_star, double z3, double z4);

/// V = (c_z1 c1 zt1^2 + c_z2 c2 zt2^2 + z5^2 + z6^2) / 2 for the averaged
/// loop; its derivative along averaged_rhs is -(a k1 / omega0) B1^2.
double lyapunov_esc(const AveragedState& s, const AveragingParams& p);

/// Sliding rectangular-window mean over `periods` dither periods
/// (window 2 pi periods / omega0). Each output sample is stamped at the
/// start of its window; the record shrinks by one window length.
Trajectory moving_average(const Trajectory& traj, double omega0,
                          int periods = 1);

/// Result of running the full loop and the averaged model side by side.
/// zt holds the averaged-model shifted positions on the slow-time grid;
/// z*_avg_full the moving-averaged full-loop positions; err the per-sample
/// sup-norm position discrepancy.
struct AveragingReport {
  std::vector<double> tau;
  std::vector<double> zt1;
  std::vector<double> zt2;
  std::vector<double> z1_avg_full;
  std::vector<double> z2_avg_full;
  std::vector<double> err;
  double sup_error = 0.0;
};

/// Integrate the full extremum-seeking loop on a quadratic field and the
/// averaged model from matched initial conditions, window-average the full
/// positions, and report the discrepancy on the common horizon. The full
/// loop uses steps_per_period samples per dither period; the averaged model
/// a fixed step dtau in slow time.
AveragingReport compare_full_vs_averaged(const QuadraticField& field,
                                         const EscParams& esc,
                                         const Pose& init, double t_end,
                                         int steps_per_period = 64,
                                         double dtau = 0.01);

}  // namespace airseek
