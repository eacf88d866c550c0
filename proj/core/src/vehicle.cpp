#include "airseek/vehicle.hpp"

#include <array>
#include <cmath>

#include "airseek/errors.hpp"
#include "airseek/integrate.hpp"

namespace airseek {

Pose step(const Pose& pose, const ControlInput& control, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ValidationError("vehicle step size must be positive and finite");
  }
  if (!std::isfinite(pose.z1) || !std::isfinite(pose.z2) ||
      !std::isfinite(pose.theta)) {
    throw ValidationError("vehicle step from non-finite pose");
  }
  if (!std::isfinite(control.u) || !std::isfinite(control.omega)) {
    throw ValidationError("vehicle step with non-finite control");
  }

  const std::array<double, 3> y{pose.z1, pose.z2, pose.theta};
  const auto rhs = [&control](const std::array<double, 3>& s,
                              double) -> std::array<double, 3> {
    return {control.u * std::cos(s[2]), control.u * std::sin(s[2]),
            control.omega};
  };
  const std::array<double, 3> out = rk4_step(y, 0.0, dt, rhs);
  return {out[0], out[1], out[2]};
}

}  // namespace airseek
