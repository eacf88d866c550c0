#pragma once

#include "airseek/vec2.hpp"

namespace airseek {

/// Planar unicycle pose. theta is kept unwrapped (radians, unbounded).
struct Pose {
  double z1 = 0.0;
  double z2 = 0.0;
  double theta = 0.0;

  Vec2 position() const { return {z1, z2}; }
};

/// Commanded forward speed and turn rate.
struct ControlInput {
  double u = 0.0;
  double omega = 0.0;
};

/// Advance the unicycle kinematics
///   z1' = u cos(theta), z2' = u sin(theta), theta' = omega
/// by one RK4 step of size dt with the control held constant.
/// Throws ValidationError on non-finite inputs or dt <= 0.
Pose step(const Pose& pose, const ControlInput& control, double dt);

}  // namespace airseek
