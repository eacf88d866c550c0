#pragma once

#include <cmath>

#include "airseek/errors.hpp"
#include "airseek/vec2.hpp"
#include "airseek/vehicle.hpp"

namespace airseek {

/// Frame the gradient sample is expressed in. Body-frame samples come from
/// the on-board flow sensing pipeline; world-frame samples from an analytic
/// field query.
enum class GradientFrame { world, body };

/// A gradient observation handed to the projected gradient-ascent law.
/// perp_grad must equal perp(grad); callers should build samples through
/// make_gradient_sample so the pair stays consistent.
struct GradientSample {
  Vec2 grad{0.0, 0.0};
  Vec2 perp_grad{0.0, 0.0};
  GradientFrame frame = GradientFrame::world;
};

inline GradientSample make_gradient_sample(
    const Vec2& grad, GradientFrame frame = GradientFrame::world) {
  if (!grad.finite()) {
    throw ValidationError("gradient sample with non-finite gradient");
  }
  return {grad, perp(grad), frame};
}

struct GaGains {
  double k1 = 1.0;
  double k2 = 1.0;

  void validate() const {
    if (!(k1 > 0.0) || !(k2 > 0.0) || !std::isfinite(k1) ||
        !std::isfinite(k2)) {
      throw ValidationError("gradient-ascent gains must be positive");
    }
  }
};

/// Projected gradient-ascent steering:
///   u     =  k1 <v(theta), grad J>
///   omega = -k2 <v(theta), perp(grad J)>
/// with v(theta) the heading unit vector. For body-frame samples the
/// projection uses v = (1, 0) since the sample already lives in the
/// vehicle frame.
inline ControlInput ga_control(const GradientSample& sample, double theta,
                               const GaGains& gains) {
  gains.validate();
  if (!sample.grad.finite() || !sample.perp_grad.finite()) {
    throw ValidationError("gradient-ascent control from non-finite sample");
  }
  if (!std::isfinite(theta)) {
    throw ValidationError("gradient-ascent control with non-finite heading");
  }
  // perp_grad must be the clockwise quarter turn of grad.
  const Vec2 expected = perp(sample.grad);
  if (sample.perp_grad.x != expected.x || sample.perp_grad.y != expected.y) {
    throw ValidationError("gradient sample perp component is inconsistent");
  }

  const Vec2 v = sample.frame == GradientFrame::body ? Vec2{1.0, 0.0}
                                                     : heading_vector(theta);
  return {gains.k1 * v.dot(sample.grad), -gains.k2 * v.dot(sample.perp_grad)};
}

}  // namespace airseek
