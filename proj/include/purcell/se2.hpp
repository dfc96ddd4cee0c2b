#pragma once

#include <cmath>

namespace purcell {

/// Planar rigid-body pose: position of the base frame and its heading.
/// theta is kept unwrapped so that displacement accumulated over many gait
/// cycles stays monotone; use normalized() to map it into (-pi, pi].
struct Pose {
  double x = 0.0;      ///< position, units of link half-length
  double y = 0.0;
  double theta = 0.0;  ///< heading [rad], unwrapped

  static Pose identity() { return {}; }
};

/// Body-frame velocity (vx, vy, omega): the velocity of a frame expressed in
/// that frame's own axes, together with its angular rate.
struct BodyTwist {
  double vx = 0.0;
  double vy = 0.0;
  double omega = 0.0;
};

constexpr double kPi = 3.14159265358979323846;

/// Map an angle to (-pi, pi].
inline double normalize_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);  // (-pi, pi], except -pi maps to -pi
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

inline Pose normalized(const Pose& p) { return {p.x, p.y, normalize_angle(p.theta)}; }

/// Group product a*b: b's translation is rotated into a's frame and appended;
/// heading angles add (and stay unwrapped).
inline Pose se2_compose(const Pose& a, const Pose& b) {
  const double c = std::cos(a.theta), s = std::sin(a.theta);
  return {a.x + c * b.x - s * b.y, a.y + s * b.x + c * b.y, a.theta + b.theta};
}

/// Group inverse: se2_compose(a, se2_inverse(a)) is the identity.
inline Pose se2_inverse(const Pose& a) {
  const double c = std::cos(a.theta), s = std::sin(a.theta);
  return {-(c * a.x + s * a.y), -(c * a.y - s * a.x), -a.theta};
}

/// Exact exponential of a constant twist applied for duration dt.
///
/// The translation uses the closed form
///   p = [sin(w)/w, -(1-cos(w))/w; (1-cos(w))/w, sin(w)/w] * (vx, vy) * dt
/// with w = omega*dt. Below |w| = small_angle the sinc-style coefficients are
/// replaced by their second-order series to avoid dividing by a vanishing
/// angle; at the default threshold the switch is continuous to ~1e-26.
inline Pose se2_exp(const BodyTwist& xi, double dt, double small_angle = 1e-6) {
  const double w = xi.omega * dt;
  double a, b;  // a = sin(w)/w, b = (1 - cos(w))/w
  if (std::abs(w) < small_angle) {
    a = 1.0 - w * w / 6.0;
    b = w / 2.0 - w * w * w / 24.0;
  } else {
    a = std::sin(w) / w;
    b = (1.0 - std::cos(w)) / w;
  }
  const double px = xi.vx * dt, py = xi.vy * dt;
  return {px * a - py * b, px * b + py * a, w};
}

}  // namespace purcell
