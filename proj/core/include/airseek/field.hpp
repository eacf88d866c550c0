#pragma once

#include <array>
#include <string>
#include <variant>

#include "airseek/vec2.hpp"

namespace airseek {

/// Concave paraboloid J(z) = j_star - c1 (z1 - m1)^2 - c2 (z2 - m2)^2.
struct QuadraticField {
  double j_star = 0.0;
  double c1 = 1.0;
  double c2 = 1.0;
  Vec2 maximizer{0.0, 0.0};
};

/// J(z) = -z1^2 - (z2^2 - z1^3)^2, unique maximum at the origin.
struct NonQuadAField {};

/// J(z) = -z1^2 - (z2 - z1^2)^2, unique maximum at the origin.
struct NonQuadBField {};

/// Radial airflow-speed model around a fan: J(z) = P(R) with
/// R = blade_radius / d and d the distance to the fan position.
/// Queries with d < min_distance are outside the model's domain.
struct FanField {
  // Polynomial coefficients for P(R), highest degree first.
  std::array<double, 5> coeffs{68.54, -102.80, 36.13, 6.41, -0.34};
  double blade_radius = 0.45;
  double min_distance = 0.5;
  Vec2 source{0.0, 0.0};
};

using FieldSpec =
    std::variant<QuadraticField, NonQuadAField, NonQuadBField, FanField>;

/// Field value at p. Throws DomainError outside the field's domain and
/// ValidationError on non-finite input.
double eval(const FieldSpec& field, const Vec2& p);

/// Analytic gradient of the field at p. Same error contract as eval().
Vec2 gradient(const FieldSpec& field, const Vec2& p);

/// Central-difference gradient, step h per axis. Used as an oracle
/// against the analytic gradient.
Vec2 finite_diff_gradient(const FieldSpec& field, const Vec2& p,
                          double h = 1e-5);

/// True whenever eval/gradient accept p.
bool in_domain(const FieldSpec& field, const Vec2& p);

/// Location of the signal source (field maximizer, or the fan position).
Vec2 source_position(const FieldSpec& field);

/// Short lowercase identifier, e.g. for output labels.
std::string field_name(const FieldSpec& field);

/// Build one of the named stock fields with default parameters:
/// "quadratic", "nonquad_a", "nonquad_b", "fan".
FieldSpec make_field(const std::string& name);

}  // namespace airseek
