#include "airseek/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "airseek/errors.hpp"

namespace airseek {

SimulationResult simulate(const FieldSpec& field,
                          const ControllerConfig& controller,
                          const std::optional<SensorCalibration>& sensors,
                          const Pose& init, const SimulationOptions& options,
                          RngStream* rng) {
  if (!(options.dt > 0.0) || !std::isfinite(options.dt)) {
    throw ValidationError("simulation step size must be positive");
  }
  if (!(options.t_end > 0.0) || !std::isfinite(options.t_end)) {
    throw ValidationError("simulation horizon must be positive");
  }
  if (options.record_stride < 1) {
    throw ValidationError("record stride must be at least 1");
  }
  if (options.settle_fraction &&
      !(*options.settle_fraction > 0.0 && *options.settle_fraction < 1.0)) {
    throw ValidationError("settle fraction must lie in (0, 1)");
  }
  if (const auto* ga = std::get_if<GaGains>(&controller)) ga->validate();
  if (const auto* esc = std::get_if<EscParams>(&controller)) esc->validate();
  if (sensors) sensors->validate();

  const long long steps = std::llround(options.t_end / options.dt);
  if (steps < 1) {
    throw ValidationError("simulation horizon shorter than one step");
  }

  SimulationResult result;
  result.trajectory.dt = options.dt * options.record_stride;
  if (options.record) {
    result.trajectory.samples.reserve(
        static_cast<std::size_t>(steps / options.record_stride) + 1);
  }

  const Vec2 source = source_position(field);
  const double initial_distance = (init.position() - source).norm();
  const double settle_radius =
      options.settle_fraction ? *options.settle_fraction * initial_distance
                              : 0.0;

  Pose pose = init;
  WashoutState washout;
  GradientProxyState proxy;
  bool proxy_started = false;

  for (long long k = 0;; ++k) {
    const double t = static_cast<double>(k) * options.dt;
    result.end_time = t;
    result.final_pose = pose;

    if (options.settle_fraction && !result.settling_time &&
        (pose.position() - source).norm() <= settle_radius) {
      result.settling_time = t;
    }

    double j = 0.0;
    ControlInput control;
    Vec2 grad_est{0.0, 0.0};
    try {
      j = eval(field, pose.position());

      if (const auto* ga = std::get_if<GaGains>(&controller)) {
        GradientSample sample;
        if (sensors) {
          const Vec2 wind = wind_at(field, pose);
          const SensorFrameReading frame = measure(wind, *sensors, rng);
          GradientProxyResult proxied =
              gradient_proxy(frame, proxy, pose.position());
          proxy = proxied.state;
          sample = proxied.sample;
        } else {
          sample = make_gradient_sample(gradient(field, pose.position()));
        }
        control = ga_control(sample, pose.theta, *ga);
        grad_est = sample.grad;
        if (sensors && !proxy_started) {
          if (sample.grad.x == 0.0 && sample.grad.y == 0.0) {
            // The crawl must move the proxy past its displacement guard
            // within one step, or the dirty derivative never arms. It
            // runs in reverse: arming while retreating puts the loop in
            // the backing configuration, the one whose heading dynamics
            // are stable, so the first latched estimate points the drive
            // toward the nearer field extremum instead of away from it.
            const double floor_speed =
                2.0 * kProxyMinDisplacement / options.dt;
            control = {-std::max(options.bootstrap_speed, floor_speed), 0.0};
          } else {
            proxy_started = true;
          }
        }
      } else {
        const auto& esc = std::get<EscParams>(controller);
        double measurement = j;
        if (sensors) {
          const Vec2 wind = wind_at(field, pose);
          measurement = measure(wind, *sensors, rng).s_r;
        }
        const EscStepResult stepped =
            esc_controller_step(washout, measurement, t, options.dt,
                                pose.theta, esc);
        washout = stepped.state;
        control = stepped.control;
        grad_est = stepped.estimate;
      }
    } catch (const DomainError& e) {
      result.reason = StopReason::field_domain_exit;
      result.detail = e.what();
      return result;
    } catch (const ValidationError& e) {
      result.reason = StopReason::numeric_error;
      result.detail = e.what();
      return result;
    }

    if (options.record && k % options.record_stride == 0) {
      result.trajectory.samples.push_back({t, pose, control, j, grad_est});
    }

    if (k == steps) break;

    try {
      pose = step(pose, control, options.dt);
    } catch (const ValidationError& e) {
      result.reason = StopReason::numeric_error;
      result.detail = e.what();
      return result;
    }
  }

  result.reason = StopReason::completed;
  return result;
}

}  // namespace airseek
