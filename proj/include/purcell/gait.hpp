#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "purcell/connection.hpp"
#include "purcell/errors.hpp"
#include "purcell/se2.hpp"
#include "purcell/swimmer.hpp"

namespace purcell {

enum class GaitKind { Square, Ellipse, Waypoints };
enum class IntegrationMethod { RK4, Euler };

/// One vertex of a piecewise-linear gait loop. `fraction` is the share of the
/// period spent moving from this waypoint to the next one (cyclically).
struct Waypoint {
  ShapeState shape{};
  double fraction = 0.0;
};

/// Periodic shape trajectory. All kinds are closed loops by construction:
///   Square     corners center+(a,a) -> (-a,a) -> (-a,-a) -> (a,-a) -> back,
///              each edge taking period/4 at constant rate
///   Ellipse    alpha(t) = center + (a1 cos wt, a2 sin wt), w = 2pi*dir/T
///   Waypoints  piecewise-linear loop through the given vertices
/// direction = -1 traverses the same loop backwards.
struct GaitSpec {
  GaitKind kind = GaitKind::Square;
  double amplitude1 = 0.0;  ///< Square: half-side; Ellipse: alpha1 semi-axis
  double amplitude2 = 0.0;  ///< Ellipse: alpha2 semi-axis
  ShapeState center{};
  double period = 1.0;
  int direction = +1;
  std::vector<Waypoint> waypoints;  ///< Waypoints kind only

  static GaitSpec square(double amplitude, double period, int direction = +1,
                         ShapeState center = {}) {
    GaitSpec g;
    g.kind = GaitKind::Square;
    g.amplitude1 = g.amplitude2 = amplitude;
    g.period = period;
    g.direction = direction;
    g.center = center;
    return g;
  }

  static GaitSpec ellipse(double amplitude1, double amplitude2, double period,
                          int direction = +1, ShapeState center = {}) {
    GaitSpec g;
    g.kind = GaitKind::Ellipse;
    g.amplitude1 = amplitude1;
    g.amplitude2 = amplitude2;
    g.period = period;
    g.direction = direction;
    g.center = center;
    return g;
  }

  static GaitSpec waypoint_loop(std::vector<Waypoint> pts, double period,
                                int direction = +1) {
    GaitSpec g;
    g.kind = GaitKind::Waypoints;
    g.waypoints = std::move(pts);
    g.period = period;
    g.direction = direction;
    return g;
  }
};

inline void validate(const GaitSpec& g) {
  if (!(g.period > 0.0)) throw InvalidGaitSpec("period must be > 0");
  if (g.amplitude1 < 0.0 || g.amplitude2 < 0.0)
    throw InvalidGaitSpec("amplitude must be >= 0");
  if (g.direction != +1 && g.direction != -1)
    throw InvalidGaitSpec("direction must be +1 or -1");
  if (g.kind == GaitKind::Waypoints) {
    if (g.waypoints.empty()) throw InvalidGaitSpec("waypoints may not be empty");
    double sum = 0.0;
    for (const Waypoint& w : g.waypoints) {
      if (!(w.fraction > 0.0))
        throw InvalidGaitSpec("waypoint fractions must be > 0");
      sum += w.fraction;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      throw InvalidGaitSpec("waypoint fractions must sum to 1, got " +
                            std::to_string(sum));
  }
}

namespace detail {

/// Piece of a gait over [t0, t1) within one cycle. Linear pieces carry a
/// constant rate; the ellipse is a single smooth piece.
struct GaitSegment {
  double t0 = 0.0, t1 = 0.0;
  ShapeState start{};
  ShapeRate rate{};
};

inline std::vector<GaitSegment> gait_segments(const GaitSpec& g) {
  std::vector<GaitSegment> segs;
  auto add_loop = [&](const std::vector<std::pair<ShapeState, double>>& pts) {
    const std::size_t n = pts.size();
    double t = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const ShapeState& a = pts[i].first;
      const ShapeState& b = pts[(i + 1) % n].first;
      const double dur = pts[i].second * g.period;
      GaitSegment s;
      s.t0 = t;
      s.t1 = (i + 1 == n) ? g.period : t + dur;
      s.start = a;
      s.rate = {(b.alpha1 - a.alpha1) / dur, (b.alpha2 - a.alpha2) / dur};
      segs.push_back(s);
      t = s.t1;
    }
  };

  switch (g.kind) {
    case GaitKind::Square: {
      const double a = g.amplitude1;
      std::vector<std::pair<ShapeState, double>> pts = {
          {{g.center.alpha1 + a, g.center.alpha2 + a}, 0.25},
          {{g.center.alpha1 - a, g.center.alpha2 + a}, 0.25},
          {{g.center.alpha1 - a, g.center.alpha2 - a}, 0.25},
          {{g.center.alpha1 + a, g.center.alpha2 - a}, 0.25}};
      if (g.direction < 0) std::reverse(pts.begin() + 1, pts.end());
      add_loop(pts);
      break;
    }
    case GaitKind::Waypoints: {
      std::vector<std::pair<ShapeState, double>> pts;
      for (const Waypoint& w : g.waypoints) pts.emplace_back(w.shape, w.fraction);
      if (g.direction < 0) {
        // traverse the loop backwards: reverse vertex order past the start,
        // and give segment i->i+1 the fraction of the forward segment it undoes
        std::vector<std::pair<ShapeState, double>> rev;
        const std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i) {
          const std::size_t j = (n - i) % n;
          rev.emplace_back(pts[j].first, pts[(n - 1 - i) % n].second);
        }
        pts = rev;
      }
      add_loop(pts);
      break;
    }
    case GaitKind::Ellipse:
      // single smooth piece; start/rate unused (closed form below)
      segs.push_back({0.0, g.period, g.center, {}});
      break;
  }
  return segs;
}

inline std::pair<ShapeState, ShapeRate> shape_on_segment(
    const GaitSpec& g, const GaitSegment& s, double tau) {
  if (g.kind == GaitKind::Ellipse) {
    const double w = 2.0 * kPi * static_cast<double>(g.direction) / g.period;
    const double ph = w * (s.t0 + tau);
    return {{g.center.alpha1 + g.amplitude1 * std::cos(ph),
             g.center.alpha2 + g.amplitude2 * std::sin(ph)},
            {-g.amplitude1 * w * std::sin(ph), g.amplitude2 * w * std::cos(ph)}};
  }
  return {{s.start.alpha1 + s.rate.alpha1_dot * tau,
           s.start.alpha2 + s.rate.alpha2_dot * tau},
          s.rate};
}

// se(2) bracket for body-frame twists: [u, v] = (w_u J v - w_v J u, 0)
inline BodyTwist bracket(const BodyTwist& u, const BodyTwist& v) {
  return {-u.omega * v.vy + v.omega * u.vy, u.omega * v.vx - v.omega * u.vx,
          0.0};
}

// inverse right-trivialized tangent for gdot = g*xi^:
// with g = g0 exp(u), udot = xi + [u, xi]/2 + [u, [u, xi]]/12 + O(u^3)
inline BodyTwist dexpinv_body(const BodyTwist& u, const BodyTwist& v) {
  const BodyTwist b1 = bracket(u, v);
  const BodyTwist b2 = bracket(u, b1);
  return {v.vx + 0.5 * b1.vx + b2.vx / 12.0,
          v.vy + 0.5 * b1.vy + b2.vy / 12.0,
          v.omega + 0.5 * b1.omega + b2.omega / 12.0};
}

inline BodyTwist scaled(const BodyTwist& v, double s) {
  return {v.vx * s, v.vy * s, v.omega * s};
}

}  // namespace detail

/// Shape and its exact time derivative at time t (taken modulo the period).
/// At a segment corner the rate is the right-hand limit.
inline std::pair<ShapeState, ShapeRate> gait_shape(const GaitSpec& g,
                                                   double t) {
  validate(g);
  double tt = std::fmod(t, g.period);
  if (tt < 0.0) tt += g.period;
  const auto segs = detail::gait_segments(g);
  for (const auto& s : segs) {
    if (tt < s.t1 || &s == &segs.back())
      return detail::shape_on_segment(g, s, tt - s.t0);
  }
  return detail::shape_on_segment(g, segs.back(), tt - segs.back().t0);
}

struct TrajectorySample {
  double t = 0.0;
  Pose pose{};
  ShapeState shape{};
  BodyTwist twist{};
};

/// Integrated gait run: pose samples at every step boundary (t = 0 included),
/// plus the configuration that produced them.
struct Trajectory {
  std::vector<TrajectorySample> samples;
  GaitSpec gait;
  SwimmerParams params{};
  DragMode mode = DragMode::Corrected;
  GeometryVariant variant = GeometryVariant::Derived;
  int steps_per_cycle = 0;
  int cycles = 0;
  IntegrationMethod method = IntegrationMethod::RK4;
};

/// Integrate the reconstruction equation gdot = g * xi^ with xi = A(alpha) *
/// alpha_dot over `cycles` periods of the gait.
///
/// The shape is prescribed, never integrated; only the pose is. Steps are
/// fixed at period/steps_per_cycle, and any step that straddles a rate
/// discontinuity (a gait corner) is split at it, so every RK stage sees a
/// smooth segment and the classical order is preserved for any step count.
/// Poses are updated through the group exponential and therefore stay on
/// SE(2) exactly. RK4 uses the Munthe-Kaas correction terms; Euler is the
/// plain Lie-Euler update (first order, for comparison runs).
inline Trajectory integrate_gait(const GaitSpec& gait, int cycles,
                                 const SwimmerParams& p, DragMode mode,
                                 GeometryVariant variant, int steps_per_cycle,
                                 IntegrationMethod method) {
  validate(gait);
  if (steps_per_cycle < 8)
    throw InvalidGaitSpec("steps_per_cycle must be >= 8");
  if (cycles < 0) throw InvalidGaitSpec("cycles must be >= 0");

  const auto segs = detail::gait_segments(gait);
  const double T = gait.period;
  const double h = T / static_cast<double>(steps_per_cycle);

  auto segment_at = [&](double tt) -> const detail::GaitSegment& {
    for (const auto& s : segs)
      if (tt < s.t1) return s;
    return segs.back();
  };

  auto xi_at = [&](const detail::GaitSegment& s, double tau) {
    const auto [shape, rate] = detail::shape_on_segment(gait, s, tau);
    try {
      return base_twist(shape, rate, p, mode, variant);
    } catch (const NearSingularConfiguration& e) {
      throw NearSingularConfiguration(
          std::string(e.what()) + " at t=" + std::to_string(s.t0 + tau) +
          ", alpha=(" + std::to_string(shape.alpha1) + ", " +
          std::to_string(shape.alpha2) + ")");
    }
  };

  Trajectory traj;
  traj.gait = gait;
  traj.params = p;
  traj.mode = mode;
  traj.variant = variant;
  traj.steps_per_cycle = steps_per_cycle;
  traj.cycles = cycles;
  traj.method = method;

  Pose g = Pose::identity();
  auto sample = [&](double t_global) {
    double tt = std::fmod(t_global, T);
    if (tt < 0.0) tt += T;
    const auto& s = segment_at(tt);
    const auto [shape, rate] = detail::shape_on_segment(gait, s, tt - s.t0);
    traj.samples.push_back({t_global, g, shape, xi_at(s, tt - s.t0)});
  };
  sample(0.0);

  const double cut_tol = 1e-9 * h;
  for (int cyc = 0; cyc < cycles; ++cyc) {
    for (int i = 0; i < steps_per_cycle; ++i) {
      const double a = static_cast<double>(i) * h;
      const double b = (i + 1 == steps_per_cycle)
                           ? T
                           : static_cast<double>(i + 1) * h;
      // split the step at interior segment boundaries
      std::vector<double> cuts{a};
      for (const auto& s : segs)
        if (s.t1 > a + cut_tol && s.t1 < b - cut_tol) cuts.push_back(s.t1);
      cuts.push_back(b);

      for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const double u0 = cuts[c], u1 = cuts[c + 1];
        const double hh = u1 - u0;
        const auto& s = segment_at(0.5 * (u0 + u1));
        const double tau0 = u0 - s.t0;
        BodyTwist u{};
        if (method == IntegrationMethod::Euler) {
          u = detail::scaled(xi_at(s, tau0), hh);
        } else {
          const BodyTwist k1 = xi_at(s, tau0);
          const BodyTwist mid = xi_at(s, tau0 + 0.5 * hh);
          const BodyTwist k2 = detail::dexpinv_body(detail::scaled(k1, 0.5 * hh), mid);
          const BodyTwist k3 = detail::dexpinv_body(detail::scaled(k2, 0.5 * hh), mid);
          const BodyTwist k4 =
              detail::dexpinv_body(detail::scaled(k3, hh), xi_at(s, tau0 + hh));
          u = {hh / 6.0 * (k1.vx + 2.0 * k2.vx + 2.0 * k3.vx + k4.vx),
               hh / 6.0 * (k1.vy + 2.0 * k2.vy + 2.0 * k3.vy + k4.vy),
               hh / 6.0 * (k1.omega + 2.0 * k2.omega + 2.0 * k3.omega + k4.omega)};
        }
        g = se2_compose(g, se2_exp(u, 1.0));
      }
      sample(static_cast<double>(cyc) * T +
             ((i + 1 == steps_per_cycle) ? T : static_cast<double>(i + 1) * h));
    }
  }
  return traj;
}

/// Net displacement over the trajectory: the holonomy of the shape loop,
/// identity-start convention. Requires an integer number of gait cycles.
inline Pose net_displacement(const Trajectory& traj) {
  if (traj.samples.empty()) return Pose::identity();
  const double span = traj.samples.back().t;
  const double cycles = span / traj.gait.period;
  if (std::abs(cycles - std::round(cycles)) > 1e-9)
    throw IncompleteCycle("trajectory spans " + std::to_string(cycles) +
                          " cycles");
  return traj.samples.back().pose;
}

}  // namespace purcell
