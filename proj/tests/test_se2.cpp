#include <array>
#include <cmath>

#include <catch_amalgamated.hpp>

#include "purcell/detail/rng.hpp"
#include "purcell/se2.hpp"

using namespace purcell;

namespace {

// Independent oracle: poses as 3x3 homogeneous matrices.
using HMat = std::array<std::array<double, 3>, 3>;

HMat to_matrix(const Pose& p) {
  const double c = std::cos(p.theta), s = std::sin(p.theta);
  return {{{c, -s, p.x}, {s, c, p.y}, {0.0, 0.0, 1.0}}};
}

HMat mat_mul(const HMat& a, const HMat& b) {
  HMat r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

// Generic Gauss-Jordan inverse; deliberately knows nothing about rotations.
HMat mat_inv(HMat a) {
  HMat inv{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const double d = a[col][col];
    for (int j = 0; j < 3; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = a[r][col];
      for (int j = 0; j < 3; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

void check_pose_matches_matrix(const Pose& p, const HMat& m, double tol) {
  CHECK(p.x == Catch::Approx(m[0][2]).margin(tol));
  CHECK(p.y == Catch::Approx(m[1][2]).margin(tol));
  CHECK(std::cos(p.theta) == Catch::Approx(m[0][0]).margin(tol));
  CHECK(std::sin(p.theta) == Catch::Approx(m[1][0]).margin(tol));
}

// Matrix-ODE oracle for the exponential: RK4 on Mdot = M * hat(xi) with many
// substeps, independent of the closed-form path under test.
HMat integrate_matrix_ode(const BodyTwist& xi, double dt, int steps) {
  const HMat hat = {{{0.0, -xi.omega, xi.vx}, {xi.omega, 0.0, xi.vy}, {0.0, 0.0, 0.0}}};
  auto rhs = [&](const HMat& m) { return mat_mul(m, hat); };
  HMat m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  const double h = dt / steps;
  for (int i = 0; i < steps; ++i) {
    const HMat k1 = rhs(m);
    HMat tmp = m;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) tmp[r][c] = m[r][c] + 0.5 * h * k1[r][c];
    const HMat k2 = rhs(tmp);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) tmp[r][c] = m[r][c] + 0.5 * h * k2[r][c];
    const HMat k3 = rhs(tmp);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) tmp[r][c] = m[r][c] + h * k3[r][c];
    const HMat k4 = rhs(tmp);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        m[r][c] += h / 6.0 * (k1[r][c] + 2.0 * k2[r][c] + 2.0 * k3[r][c] + k4[r][c]);
  }
  return m;
}

Pose random_pose(purcell::detail::SplitMix64& rng, double lim = 5.0) {
  return {rng.uniform(-lim, lim), rng.uniform(-lim, lim), rng.uniform(-lim, lim)};
}

}  // namespace

TEST_CASE("se2_compose basics") {
  const Pose p{1.0, 2.0, 0.3};
  const Pose r = se2_compose(Pose::identity(), p);
  CHECK(r.x == 1.0);
  CHECK(r.y == 2.0);
  CHECK(r.theta == 0.3);

  const Pose q = se2_compose({0.0, 0.0, kPi / 2.0}, {1.0, 0.0, 0.0});
  CHECK(q.x == Catch::Approx(0.0).margin(1e-15));
  CHECK(q.y == Catch::Approx(1.0).margin(1e-15));
  CHECK(q.theta == Catch::Approx(kPi / 2.0));
}

TEST_CASE("se2_compose matches the homogeneous-matrix product") {
  const Pose a{0.3, -0.1, 0.7}, b{0.2, 0.5, -0.4};
  const Pose r = se2_compose(a, b);
  check_pose_matches_matrix(r, mat_mul(to_matrix(a), to_matrix(b)), 1e-14);
}

TEST_CASE("se2_inverse basics and matrix oracle") {
  const Pose i = se2_inverse(Pose::identity());
  CHECK(i.x == 0.0);
  CHECK(i.y == 0.0);
  CHECK(i.theta == -0.0);

  const Pose t = se2_inverse({1.0, 0.0, 0.0});
  CHECK(t.x == -1.0);
  CHECK(t.y == 0.0);

  const Pose a{0.3, -0.1, 0.7};
  check_pose_matches_matrix(se2_inverse(a), mat_inv(to_matrix(a)), 1e-14);
}

TEST_CASE("compose with inverse returns identity") {
  purcell::detail::SplitMix64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Pose p{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-9.9, 9.9)};
    const Pose r = se2_compose(p, se2_inverse(p));
    CHECK(std::abs(r.x) < 1e-12);
    CHECK(std::abs(r.y) < 1e-12);
    CHECK(std::abs(r.theta) < 1e-12);
  }
}

TEST_CASE("compose is associative") {
  purcell::detail::SplitMix64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Pose a = random_pose(rng), b = random_pose(rng), c = random_pose(rng);
    const Pose lhs = se2_compose(se2_compose(a, b), c);
    const Pose rhs = se2_compose(a, se2_compose(b, c));
    CHECK(std::abs(lhs.x - rhs.x) < 1e-12);
    CHECK(std::abs(lhs.y - rhs.y) < 1e-12);
    CHECK(std::abs(lhs.theta - rhs.theta) < 1e-12);
  }
}

TEST_CASE("se2_exp on pure translation and pure rotation") {
  const Pose t = se2_exp({2.5, 0.0, 0.0}, 0.4);
  CHECK(t.x == Catch::Approx(1.0).margin(1e-15));
  CHECK(t.y == 0.0);
  CHECK(t.theta == 0.0);

  const Pose r = se2_exp({0.0, 0.0, 1.3}, 2.0);
  CHECK(r.x == 0.0);
  CHECK(r.y == 0.0);
  CHECK(r.theta == Catch::Approx(2.6));

  const Pose z = se2_exp({0.0, 0.0, 0.0}, 123.0);
  CHECK(z.x == 0.0);
  CHECK(z.y == 0.0);
  CHECK(z.theta == 0.0);
}

TEST_CASE("se2_exp quarter turn") {
  const Pose p = se2_exp({1.0, 0.0, kPi / 2.0}, 1.0);
  CHECK(p.x == Catch::Approx(2.0 / kPi).epsilon(1e-14));
  CHECK(p.y == Catch::Approx(2.0 / kPi).epsilon(1e-14));
  CHECK(p.theta == Catch::Approx(kPi / 2.0));
}

TEST_CASE("se2_exp matches the matrix-ODE oracle") {
  purcell::detail::SplitMix64 rng(13);
  for (int i = 0; i < 10; ++i) {
    const BodyTwist xi{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const double dt = rng.uniform(-1.5, 1.5);
    check_pose_matches_matrix(se2_exp(xi, dt),
                              integrate_matrix_ode(xi, dt, 20000), 1e-10);
  }
}

TEST_CASE("se2_exp composes over time") {
  purcell::detail::SplitMix64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const BodyTwist xi{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const double t1 = rng.uniform(-2, 2), t2 = rng.uniform(-2, 2);
    const Pose whole = se2_exp(xi, t1 + t2);
    const Pose split = se2_compose(se2_exp(xi, t1), se2_exp(xi, t2));
    CHECK(std::abs(whole.x - split.x) < 1e-10);
    CHECK(std::abs(whole.y - split.y) < 1e-10);
    CHECK(std::abs(whole.theta - split.theta) < 1e-10);
  }
}

TEST_CASE("se2_exp is continuous across the small-angle switch") {
  // the jump introduced by switching branches is bounded by the cancellation
  // noise of (1 - cos w)/w, far below 1e-9 on either side of the threshold
  const double thr = 1e-6;
  for (double w : {thr * 0.9, thr, thr * 1.1}) {
    const BodyTwist xi{1.0, 0.3, w};
    const Pose series = se2_exp(xi, 1.0, /*small_angle=*/1e-3);
    const Pose closed = se2_exp(xi, 1.0, /*small_angle=*/1e-12);
    CHECK(std::abs(series.x - closed.x) < 1e-9);
    CHECK(std::abs(series.y - closed.y) < 1e-9);
    CHECK(series.theta == closed.theta);
  }
}

TEST_CASE("normalize_angle maps into (-pi, pi]") {
  CHECK(normalize_angle(0.0) == 0.0);
  CHECK(normalize_angle(kPi) == Catch::Approx(kPi));
  CHECK(normalize_angle(-kPi) == Catch::Approx(kPi));
  CHECK(normalize_angle(3.0 * kPi) == Catch::Approx(kPi));
  CHECK(normalize_angle(2.0 * kPi + 0.25) == Catch::Approx(0.25));
  const Pose p = normalized({1.0, 2.0, 7.0 * kPi + 0.1});
  CHECK(p.theta == Catch::Approx(-kPi + 0.1).margin(1e-12));
}
