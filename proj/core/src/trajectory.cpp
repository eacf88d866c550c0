#include "airseek/trajectory.hpp"

#include <cstdio>
#include <ostream>

namespace airseek {

void write_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,z1,z2,theta,u,omega,J,gx,gy\n";
  char line[256];
  for (const TrajectorySample& s : traj.samples) {
    std::snprintf(line, sizeof(line),
                  "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n",
                  s.t, s.pose.z1, s.pose.z2, s.pose.theta, s.control.u,
                  s.control.omega, s.j, s.grad_est.x, s.grad_est.y);
    os << line;
  }
}

}  // namespace airseek
