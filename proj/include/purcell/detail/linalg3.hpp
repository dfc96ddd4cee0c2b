#pragma once

#include <array>
#include <cmath>

#include "purcell/errors.hpp"

namespace purcell::detail {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using Mat32 = std::array<std::array<double, 2>, 3>;

inline Vec3 mul(const Mat3& a, const Vec3& v) {
  Vec3 r{};
  for (int i = 0; i < 3; ++i)
    r[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
  return r;
}

inline double norm1(const Mat3& a) {
  double best = 0.0;
  for (int j = 0; j < 3; ++j) {
    const double c = std::abs(a[0][j]) + std::abs(a[1][j]) + std::abs(a[2][j]);
    if (c > best) best = c;
  }
  return best;
}

/// LU factorization with partial pivoting of a 3x3 matrix.
struct Lu3 {
  Mat3 lu{};
  std::array<int, 3> piv{};
  bool singular = false;
};

inline Lu3 lu_factor(Mat3 a) {
  Lu3 f;
  f.piv = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int p = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(a[r][col]) > std::abs(a[p][col])) p = r;
    if (p != col) {
      std::swap(a[p], a[col]);
      std::swap(f.piv[p], f.piv[col]);
    }
    if (a[col][col] == 0.0) {
      f.singular = true;
      continue;
    }
    for (int r = col + 1; r < 3; ++r) {
      a[r][col] /= a[col][col];
      for (int c = col + 1; c < 3; ++c) a[r][c] -= a[r][col] * a[col][c];
    }
  }
  f.lu = a;
  return f;
}

inline Vec3 lu_solve(const Lu3& f, const Vec3& b) {
  Vec3 y{b[f.piv[0]], b[f.piv[1]], b[f.piv[2]]};
  y[1] -= f.lu[1][0] * y[0];
  y[2] -= f.lu[2][0] * y[0] + f.lu[2][1] * y[1];
  Vec3 x = y;
  x[2] /= f.lu[2][2];
  x[1] = (x[1] - f.lu[1][2] * x[2]) / f.lu[1][1];
  x[0] = (x[0] - f.lu[0][1] * x[1] - f.lu[0][2] * x[2]) / f.lu[0][0];
  return x;
}

inline Mat3 lu_inverse(const Lu3& f) {
  Mat3 inv{};
  for (int j = 0; j < 3; ++j) {
    Vec3 e{};
    e[j] = 1.0;
    const Vec3 col = lu_solve(f, e);
    for (int i = 0; i < 3; ++i) inv[i][j] = col[i];
  }
  return inv;
}

/// Solve a*x = b, guarding against ill conditioning.
/// Throws NearSingularConfiguration when cond_1(a) exceeds cond_limit.
inline Vec3 guarded_solve(const Mat3& a, const Vec3& b,
                          double cond_limit = 1e12) {
  const Lu3 f = lu_factor(a);
  if (f.singular) throw NearSingularConfiguration("exactly singular 3x3 system");
  const Mat3 inv = lu_inverse(f);
  const double cond = norm1(a) * norm1(inv);
  if (!(cond < cond_limit))
    throw NearSingularConfiguration("condition number " + std::to_string(cond) +
                                    " exceeds " + std::to_string(cond_limit));
  return lu_solve(f, b);
}

}  // namespace purcell::detail
