#pragma once

#include <array>
#include <cstddef>

namespace airseek {

/// One classic fourth-order Runge-Kutta step for a fixed-size state.
/// Rhs has signature std::array<double, N>(const std::array<double, N>&, double t).
template <std::size_t N, typename Rhs>
std::array<double, N> rk4_step(const std::array<double, N>& y, double t,
                               double dt, Rhs&& rhs) {
  std::array<double, N> k1 = rhs(y, t);

  std::array<double, N> tmp;
  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * dt * k1[i];
  std::array<double, N> k2 = rhs(tmp, t + 0.5 * dt);

  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + 0.5 * dt * k2[i];
  std::array<double, N> k3 = rhs(tmp, t + 0.5 * dt);

  for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + dt * k3[i];
  std::array<double, N> k4 = rhs(tmp, t + dt);

  std::array<double, N> out;
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = y[i] + (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

}  // namespace airseek
