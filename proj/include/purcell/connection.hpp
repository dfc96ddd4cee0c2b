#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "purcell/detail/linalg3.hpp"
#include "purcell/errors.hpp"
#include "purcell/se2.hpp"
#include "purcell/swimmer.hpp"

namespace purcell {

/// Local connection A(alpha): the 3x2 map from joint rates to the base-link
/// body twist that makes the total drag wrench vanish. Rows are (vx, vy,
/// omega); columns are (alpha1_dot, alpha2_dot). Rows 1-2 carry units of
/// length, row 3 is dimensionless; the drag coefficient k cancels entirely.
struct ConnectionLocalForm {
  detail::Mat32 a{};

  double operator()(int row, int col) const { return a[row][col]; }
};

/// Solve the quasi-static force balance b1*xi + b2*alpha_dot = 0 for the
/// connection: b1*A = -b2, column by column, via a pivoted 3x3 factorization.
/// Throws NearSingularConfiguration when cond_1(b1) exceeds cond_limit.
inline ConnectionLocalForm local_connection(const ShapeState& shape,
                                            const SwimmerParams& p,
                                            DragMode mode,
                                            GeometryVariant variant,
                                            double cond_limit = 1e12) {
  const BMatrix b = build_b_matrix(shape, p, mode, variant);
  ConnectionLocalForm out;
  for (int j = 0; j < 2; ++j) {
    const detail::Vec3 rhs{-b.b2[0][j], -b.b2[1][j], -b.b2[2][j]};
    const detail::Vec3 col = detail::guarded_solve(b.b1, rhs, cond_limit);
    for (int i = 0; i < 3; ++i) out.a[i][j] = col[i];
  }
  return out;
}

/// Base-link twist induced by joint rates at this shape: xi = A(alpha)*rate.
inline BodyTwist base_twist(const ShapeState& shape, const ShapeRate& rate,
                            const SwimmerParams& p, DragMode mode,
                            GeometryVariant variant) {
  const ConnectionLocalForm A = local_connection(shape, p, mode, variant);
  return {A.a[0][0] * rate.alpha1_dot + A.a[0][1] * rate.alpha2_dot,
          A.a[1][0] * rate.alpha1_dot + A.a[1][1] * rate.alpha2_dot,
          A.a[2][0] * rate.alpha1_dot + A.a[2][1] * rate.alpha2_dot};
}

/// Rectangular sampling request for the shape space.
struct GridSpec {
  double alpha1_min = -1.0, alpha1_max = 1.0;
  double alpha2_min = -1.0, alpha2_max = 1.0;
  std::size_t alpha1_count = 2, alpha2_count = 2;
};

/// Dense evaluation of the connection over a shape-space grid. Entries are
/// stored row-major over (i1, i2); a grid point where the force balance is
/// near-singular is recorded as an empty entry rather than a failure.
struct FieldGrid {
  std::vector<double> alpha1_values;
  std::vector<double> alpha2_values;
  std::vector<std::optional<ConnectionLocalForm>> entries;
  SwimmerParams params;
  DragMode mode = DragMode::Corrected;
  GeometryVariant variant = GeometryVariant::Derived;

  const std::optional<ConnectionLocalForm>& at(std::size_t i1,
                                               std::size_t i2) const {
    return entries[i1 * alpha2_values.size() + i2];
  }
};

namespace detail {
inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}
}  // namespace detail

inline FieldGrid sample_field(const GridSpec& spec, const SwimmerParams& p,
                              DragMode mode, GeometryVariant variant) {
  if (spec.alpha1_count < 2 || spec.alpha2_count < 2)
    throw InvalidGridSpec("counts must be >= 2 per axis");
  if (!(spec.alpha1_min < spec.alpha1_max) ||
      !(spec.alpha2_min < spec.alpha2_max))
    throw InvalidGridSpec("ranges must be finite and increasing");

  FieldGrid g;
  g.alpha1_values =
      detail::linspace(spec.alpha1_min, spec.alpha1_max, spec.alpha1_count);
  g.alpha2_values =
      detail::linspace(spec.alpha2_min, spec.alpha2_max, spec.alpha2_count);
  g.params = p;
  g.mode = mode;
  g.variant = variant;
  g.entries.reserve(spec.alpha1_count * spec.alpha2_count);
  for (double a1 : g.alpha1_values) {
    for (double a2 : g.alpha2_values) {
      try {
        g.entries.push_back(local_connection({a1, a2}, p, mode, variant));
      } catch (const NearSingularConfiguration&) {
        g.entries.push_back(std::nullopt);
      }
    }
  }
  return g;
}

/// Per-row scalar curvature grids produced by connection_curvature: the
/// central-difference curl dA_j2/da1 - dA_j1/da2 for each twist row j,
/// defined on the interior points of the source grid.
struct CurvatureGrid {
  std::vector<double> alpha1_values;  ///< interior nodes
  std::vector<double> alpha2_values;
  std::vector<std::array<double, 3>> values;  ///< row-major, (vx, vy, omega)
};

inline CurvatureGrid connection_curvature(const FieldGrid& grid) {
  const std::size_t n1 = grid.alpha1_values.size();
  const std::size_t n2 = grid.alpha2_values.size();
  if (n1 < 3 || n2 < 3)
    throw InvalidGridSpec("curvature needs at least a 3x3 grid");

  auto spacing = [](const std::vector<double>& v) {
    const double h = v[1] - v[0];
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
      if (std::abs((v[i + 1] - v[i]) - h) > 1e-9 * std::abs(h))
        throw InvalidGridSpec("non-uniform grid spacing");
    return h;
  };
  const double h1 = spacing(grid.alpha1_values);
  const double h2 = spacing(grid.alpha2_values);

  CurvatureGrid out;
  out.alpha1_values.assign(grid.alpha1_values.begin() + 1,
                           grid.alpha1_values.end() - 1);
  out.alpha2_values.assign(grid.alpha2_values.begin() + 1,
                           grid.alpha2_values.end() - 1);
  for (std::size_t i = 1; i + 1 < n1; ++i) {
    for (std::size_t j = 1; j + 1 < n2; ++j) {
      const auto& xp = grid.at(i + 1, j);
      const auto& xm = grid.at(i - 1, j);
      const auto& yp = grid.at(i, j + 1);
      const auto& ym = grid.at(i, j - 1);
      if (!xp || !xm || !yp || !ym)
        throw InvalidGridSpec("missing entry in curvature stencil");
      std::array<double, 3> curl{};
      for (int r = 0; r < 3; ++r)
        curl[r] = (xp->a[r][1] - xm->a[r][1]) / (2.0 * h1) -
                  (yp->a[r][0] - ym->a[r][0]) / (2.0 * h2);
      out.values.push_back(curl);
    }
  }
  return out;
}

}  // namespace purcell
