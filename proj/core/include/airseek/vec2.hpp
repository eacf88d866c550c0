#pragma once

#include <cmath>

namespace airseek {

/// Plain 2D vector used for positions, gradients and flow vectors.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }

  constexpr Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }

  constexpr bool operator==(const Vec2& o) const = default;

  constexpr double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  constexpr double squared_norm() const { return x * x + y * y; }
  double norm() const { return std::sqrt(squared_norm()); }

  /// Unit vector, or (0,0) when the norm is below eps.
  Vec2 normalized(double eps = 0.0) const {
    const double n = norm();
    if (n <= eps) return {0.0, 0.0};
    return {x / n, y / n};
  }

  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

/// Clockwise quarter turn: perp(g) = (g_y, -g_x).
/// Satisfies <perp(g), g> = 0, |perp(g)| = |g| and cross(perp(g), g) >= 0.
constexpr Vec2 perp(const Vec2& g) { return {g.y, -g.x}; }

/// z-component of the 3D cross product of (a,0) and (b,0).
constexpr double cross(const Vec2& a, const Vec2& b) {
  return a.x * b.y - a.y * b.x;
}

/// Rotate v by angle (counter-clockwise, radians).
inline Vec2 rotated(const Vec2& v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Heading unit vector (cos theta, sin theta).
inline Vec2 heading_vector(double theta) {
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace airseek
