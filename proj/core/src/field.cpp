#include "airseek/field.hpp"

#include <cmath>

#include "airseek/errors.hpp"

namespace airseek {
namespace {

void require_finite(const Vec2& p) {
  if (!p.finite()) {
    throw ValidationError("field query at non-finite position");
  }
}

double horner(const std::array<double, 5>& c, double x) {
  double acc = c[0];
  for (std::size_t i = 1; i < c.size(); ++i) acc = acc * x + c[i];
  return acc;
}

// Derivative of the degree-4 polynomial, evaluated at x.
double horner_derivative(const std::array<double, 5>& c, double x) {
  double acc = 4.0 * c[0];
  acc = acc * x + 3.0 * c[1];
  acc = acc * x + 2.0 * c[2];
  acc = acc * x + c[3];
  return acc;
}

// Distance to the fan with the exclusion disc enforced.
double fan_distance(const FanField& f, const Vec2& p) {
  const double d = (p - f.source).norm();
  if (d < f.min_distance) {
    throw DomainError("fan field query at distance " + std::to_string(d) +
                      " inside exclusion radius " +
                      std::to_string(f.min_distance));
  }
  return d;
}

}  // namespace

double eval(const FieldSpec& field, const Vec2& p) {
  require_finite(p);
  return std::visit(
      [&p](const auto& f) -> double {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, QuadraticField>) {
          const Vec2 e = p - f.maximizer;
          return f.j_star - f.c1 * e.x * e.x - f.c2 * e.y * e.y;
        } else if constexpr (std::is_same_v<T, NonQuadAField>) {
          const double w = p.y * p.y - p.x * p.x * p.x;
          return -p.x * p.x - w * w;
        } else if constexpr (std::is_same_v<T, NonQuadBField>) {
          const double w = p.y - p.x * p.x;
          return -p.x * p.x - w * w;
        } else {
          const double d = fan_distance(f, p);
          return horner(f.coeffs, f.blade_radius / d);
        }
      },
      field);
}

Vec2 gradient(const FieldSpec& field, const Vec2& p) {
  require_finite(p);
  return std::visit(
      [&p](const auto& f) -> Vec2 {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, QuadraticField>) {
          const Vec2 e = p - f.maximizer;
          return {-2.0 * f.c1 * e.x, -2.0 * f.c2 * e.y};
        } else if constexpr (std::is_same_v<T, NonQuadAField>) {
          const double w = p.y * p.y - p.x * p.x * p.x;
          return {-2.0 * p.x + 6.0 * p.x * p.x * w, -4.0 * p.y * w};
        } else if constexpr (std::is_same_v<T, NonQuadBField>) {
          const double w = p.y - p.x * p.x;
          return {-2.0 * p.x + 4.0 * p.x * w, -2.0 * w};
        } else {
          const double d = fan_distance(f, p);
          const double r = f.blade_radius / d;
          // dJ/dd = P'(R) * (-blade_radius / d^2); gradient along (p - source)/d.
          const double scale =
              -horner_derivative(f.coeffs, r) * f.blade_radius / (d * d * d);
          return (p - f.source) * scale;
        }
      },
      field);
}

Vec2 finite_diff_gradient(const FieldSpec& field, const Vec2& p, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw ValidationError("finite difference step must be positive");
  }
  const double gx =
      (eval(field, {p.x + h, p.y}) - eval(field, {p.x - h, p.y})) / (2.0 * h);
  const double gy =
      (eval(field, {p.x, p.y + h}) - eval(field, {p.x, p.y - h})) / (2.0 * h);
  return {gx, gy};
}

bool in_domain(const FieldSpec& field, const Vec2& p) {
  if (!p.finite()) return false;
  if (const auto* fan = std::get_if<FanField>(&field)) {
    return (p - fan->source).norm() >= fan->min_distance;
  }
  return true;
}

Vec2 source_position(const FieldSpec& field) {
  if (const auto* q = std::get_if<QuadraticField>(&field)) return q->maximizer;
  if (const auto* fan = std::get_if<FanField>(&field)) return fan->source;
  return {0.0, 0.0};
}

std::string field_name(const FieldSpec& field) {
  switch (field.index()) {
    case 0:
      return "quadratic";
    case 1:
      return "nonquad_a";
    case 2:
      return "nonquad_b";
    default:
      return "fan";
  }
}

FieldSpec make_field(const std::string& name) {
  if (name == "quadratic") return QuadraticField{};
  if (name == "nonquad_a") return NonQuadAField{};
  if (name == "nonquad_b") return NonQuadBField{};
  if (name == "fan") return FanField{};
  throw ConfigError("unknown field '" + name + "'");
}

}  // namespace airseek
