#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "airseek/vec2.hpp"
#include "airseek/vehicle.hpp"

namespace airseek {

/// One recorded closed-loop sample. `control` and `grad_est` are the values
/// computed at this pose; `j` is the true field value there.
struct TrajectorySample {
  double t = 0.0;
  Pose pose;
  ControlInput control;
  double j = 0.0;
  Vec2 grad_est{0.0, 0.0};
};

/// Uniformly sampled record of a run. `dt` is the spacing between samples
/// (the integration step times the record stride).
struct Trajectory {
  std::vector<TrajectorySample> samples;
  double dt = 0.0;

  std::size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
  const TrajectorySample& front() const { return samples.front(); }
  const TrajectorySample& back() const { return samples.back(); }
};

/// Write the canonical CSV layout: t,z1,z2,theta,u,omega,J,gx,gy.
void write_csv(std::ostream& os, const Trajectory& traj);

}  // namespace airseek
