#pragma once

#include <cmath>
#include <tuple>

#include "purcell/detail/linalg3.hpp"
#include "purcell/se2.hpp"

namespace purcell {

/// Physical constants of the three-link swimmer. Each link is a slender rod
/// of length 2L; k is the resistive-force-theory drag density.
struct SwimmerParams {
  double L = 1.0;  ///< half-link length
  double k = 1.0;  ///< viscous drag coefficient [force*time/length^2]
};

/// Joint angles of the two limbs relative to the base link [rad].
struct ShapeState {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
};

/// Joint angle rates [rad/time].
struct ShapeRate {
  double alpha1_dot = 0.0;
  double alpha2_dot = 0.0;
};

/// Planar force and moment acting on a body, in that body's frame.
struct Wrench {
  double fx = 0.0;
  double fy = 0.0;
  double m = 0.0;
};

/// Drag-law selection.
///
/// The reference closed-form expressions were published alongside per-link
/// drag formulas whose printed coefficients are internally inconsistent:
/// the lateral force is printed with the longitudinal coefficient kL, and the
/// moment with (2/3)kL^2, which is dimensionally short one length factor.
/// Printed reproduces those coefficients verbatim; Corrected uses the values
/// the line-density integrals actually produce (2kL lateral, (2/3)kL^3
/// moment). Differential tests adjudicate which one the closed forms used.
enum class DragMode {
  Printed,    ///< lateral kL, moment (2/3)kL^2, as published
  Corrected,  ///< lateral 2kL, moment (2/3)kL^3
};

/// Link-velocity formula selection.
///
/// The published formula for the trailing link's lateral velocity carries
/// -(1+cos a2)*L*omega, which contradicts the moment arm +L(1+cos a2) used
/// when its wrench is mapped back to the base frame. Printed keeps the
/// published sign; Derived re-derives the row from the frame geometry (joints
/// at (+-L, 0), link centers one half-link beyond each joint), which flips it.
enum class GeometryVariant {
  Printed,
  Derived,
};

/// Net drag wrench on one link moving with body twist xi, in its own frame.
/// Longitudinal drag is kL*vx in both modes.
inline Wrench link_wrench(const BodyTwist& xi, const SwimmerParams& p,
                          DragMode mode) {
  const double lat = (mode == DragMode::Printed) ? p.k * p.L : 2.0 * p.k * p.L;
  const double mom = (mode == DragMode::Printed)
                         ? (2.0 / 3.0) * p.k * p.L * p.L
                         : (2.0 / 3.0) * p.k * p.L * p.L * p.L;
  return {p.k * p.L * xi.vx, lat * xi.vy, mom * xi.omega};
}

/// Body twists of the three links expressed in their own frames, given the
/// base-link twist xi and the joint rates. The middle link is the base link,
/// so its twist is xi unchanged. Limb 1 hangs off the joint at (-L, 0) with
/// frame angle -alpha1; limb 3 off (+L, 0) with frame angle +alpha2.
inline std::tuple<BodyTwist, BodyTwist, BodyTwist> link_velocities(
    const ShapeState& shape, const ShapeRate& rate, const BodyTwist& xi,
    const SwimmerParams& p, GeometryVariant variant) {
  const double c1 = std::cos(shape.alpha1), s1 = std::sin(shape.alpha1);
  const double c2 = std::cos(shape.alpha2), s2 = std::sin(shape.alpha2);
  const double L = p.L;

  const BodyTwist xi1{
      c1 * xi.vx - s1 * xi.vy + s1 * L * xi.omega,
      s1 * xi.vx + c1 * xi.vy - (1.0 + c1) * L * xi.omega + L * rate.alpha1_dot,
      xi.omega - rate.alpha1_dot};

  const BodyTwist xi2 = xi;

  const double lat3 = (variant == GeometryVariant::Printed)
                          ? -(1.0 + c2) * L * xi.omega
                          : +(1.0 + c2) * L * xi.omega;
  const BodyTwist xi3{c2 * xi.vx + s2 * xi.vy + s2 * L * xi.omega,
                      -s2 * xi.vx + c2 * xi.vy + lat3 + L * rate.alpha2_dot,
                      xi.omega + rate.alpha2_dot};

  return {xi1, xi2, xi3};
}

/// Total drag wrench on the swimmer in the base frame: per-link wrenches are
/// rotated into the base frame and given their moment arms about the base
/// origin, then summed.
inline Wrench net_wrench(const ShapeState& shape, const ShapeRate& rate,
                         const BodyTwist& xi, const SwimmerParams& p,
                         DragMode mode, GeometryVariant variant) {
  const double c1 = std::cos(shape.alpha1), s1 = std::sin(shape.alpha1);
  const double c2 = std::cos(shape.alpha2), s2 = std::sin(shape.alpha2);
  const double L = p.L;

  const auto [xi1, xi2, xi3] = link_velocities(shape, rate, xi, p, variant);
  const Wrench w1 = link_wrench(xi1, p, mode);
  const Wrench w2 = link_wrench(xi2, p, mode);
  const Wrench w3 = link_wrench(xi3, p, mode);

  // limb 1: rotation by -alpha1, center at (-L(1+cos a1), L sin a1)
  const double f1x = c1 * w1.fx + s1 * w1.fy;
  const double f1y = -s1 * w1.fx + c1 * w1.fy;
  const double m1 = L * s1 * w1.fx - L * (1.0 + c1) * w1.fy + w1.m;

  // limb 3: rotation by +alpha2, center at (+L(1+cos a2), L sin a2)
  const double f3x = c2 * w3.fx - s2 * w3.fy;
  const double f3y = s2 * w3.fx + c2 * w3.fy;
  const double m3 = L * s2 * w3.fx + L * (1.0 + c2) * w3.fy + w3.m;

  return {f1x + w2.fx + f3x, f1y + w2.fy + f3y, m1 + w2.m + m3};
}

/// Wrench response split into the base-twist block (3x3) and the shape-rate
/// block (3x2): net wrench = b1*xi + b2*alpha_dot, exactly.
struct BMatrix {
  detail::Mat3 b1{};
  detail::Mat32 b2{};
};

/// Assemble the wrench-response matrix by evaluating net_wrench on the five
/// unit basis inputs. Linearity then holds by construction.
inline BMatrix build_b_matrix(const ShapeState& shape, const SwimmerParams& p,
                              DragMode mode, GeometryVariant variant) {
  BMatrix b;
  for (int j = 0; j < 3; ++j) {
    BodyTwist e{};
    (j == 0 ? e.vx : j == 1 ? e.vy : e.omega) = 1.0;
    const Wrench w = net_wrench(shape, {}, e, p, mode, variant);
    b.b1[0][j] = w.fx;
    b.b1[1][j] = w.fy;
    b.b1[2][j] = w.m;
  }
  for (int j = 0; j < 2; ++j) {
    ShapeRate r{};
    (j == 0 ? r.alpha1_dot : r.alpha2_dot) = 1.0;
    const Wrench w = net_wrench(shape, r, {}, p, mode, variant);
    b.b2[0][j] = w.fx;
    b.b2[1][j] = w.fy;
    b.b2[2][j] = w.m;
  }
  return b;
}

}  // namespace purcell
