// Term-by-term evaluators for the closed-form connection entries.
// Each entry A_jk is a sum of three numerator/denominator ratios; the
// expressions below keep the source term ordering so individual terms can
// be audited one at a time.
#pragma once

namespace purcell::closed_form::detail {

struct TrigShape {
  double c1, s1, c2, s2;
};

inline double num1_11(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L3 = L * L * L, c12 = c1 * c1, s12 = s1 * s1, s13 = s1 * s1 * s1, c22 = c2 * c2,
      s22 = s2 * s2, s23 = s2 * s2 * s2;
  const double sum = 2.0 * c12 * c2 * s2 + c12 * s1 + 2.0 * c12 * s2 + 2.0 * c1 * s1 * c22
      + c1 * s1 * c2 + c1 * c2 * s2 + c1 * s1 * s22 + c1 * s1 + 2.0 * s1 * c22 + c22 * s2
      + s12 * c2 * s2 + c2 * s2 + s13 + s12 * s2 + s1 * s22 + 2.0 * s1 + s23 + 2.0 * s2;
  return (2.0 * L3 * k / 3.0 + 2.0 * L3 * k * (c1 + 1.0)) * sum;
}

inline double den1_11(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, c13 = c1 * c1 * c1, c14 = (c1 * c1) * (c1 * c1),
      s12 = s1 * s1, s13 = s1 * s1 * s1, s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2,
      c23 = c2 * c2 * c2, c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2, s23 = s2 * s2 * s2,
      s24 = (s2 * s2) * (s2 * s2);
  const double sum = 8.0 * k * L2 * c14 * c22 + 8.0 * k * L2 * c14 * c2
      + 4.0 * k * L2 * c14 * s22 + 6.0 * k * L2 * c14 + 8.0 * k * L2 * c13 * c22
      + 4.0 * k * L2 * c13 * c2 + 4.0 * k * L2 * c13 * s22 + 4.0 * k * L2 * c13
      + 8.0 * k * L2 * c12 * c24 + 8.0 * k * L2 * c12 * c23 + 16.0 * k * L2 * c12 * s12 * c22
      + 16.0 * k * L2 * c12 * c22 * s22 + 20.0 * k * L2 * c12 * c22
      + 16.0 * k * L2 * c12 * s12 * c2 - 4.0 * k * L2 * c12 * s1 * c2 * s2
      + 8.0 * k * L2 * c12 * c2 * s22 + 12.0 * k * L2 * c12 * c2
      + 8.0 * k * L2 * c12 * s12 * s22 + 12.0 * k * L2 * c12 * s12
      - 4.0 * k * L2 * c12 * s1 * s2 + 8.0 * k * L2 * c12 * s24 + 16.0 * k * L2 * c12 * s22
      + 12.0 * k * L2 * c12 + 8.0 * k * L2 * c1 * c24 + 4.0 * k * L2 * c1 * c23
      + 8.0 * k * L2 * c1 * s12 * c22 - 4.0 * k * L2 * c1 * s1 * c22 * s2
      + 16.0 * k * L2 * c1 * c22 * s22 + 12.0 * k * L2 * c1 * c22 + 4.0 * k * L2 * c1 * s12 * c2
      - 4.0 * k * L2 * c1 * s1 * c2 * s2 + 4.0 * k * L2 * c1 * c2 * s22 + 4.0 * k * L2 * c1 * c2
      + 4.0 * k * L2 * c1 * s12 * s22 + 4.0 * k * L2 * c1 * s12 - 4.0 * k * L2 * c1 * s1 * s23
      - 4.0 * k * L2 * c1 * s1 * s2 + 8.0 * k * L2 * c1 * s24 + 12.0 * k * L2 * c1 * s22
      + 4.0 * k * L2 * c1 + 4.0 * k * L2 * s12 * c24 + 6.0 * k * L2 * c24
      + 4.0 * k * L2 * s12 * c23 + 4.0 * k * L2 * c23 + 8.0 * k * L2 * s14 * c22
      + 8.0 * k * L2 * s12 * c22 * s22 + 16.0 * k * L2 * s12 * c22
      - 4.0 * k * L2 * s1 * c22 * s2 + 12.0 * k * L2 * c22 * s22 + 12.0 * k * L2 * c22
      + 8.0 * k * L2 * s14 * c2 - 4.0 * k * L2 * s13 * c2 * s2 + 4.0 * k * L2 * s12 * c2 * s22
      + 12.0 * k * L2 * s12 * c2 - 4.0 * k * L2 * s1 * c2 * s2 + 4.0 * k * L2 * c2 * s22
      + 4.0 * k * L2 * c2 + 4.0 * k * L2 * s14 * s22 + 6.0 * k * L2 * s14
      - 4.0 * k * L2 * s13 * s2 + 4.0 * k * L2 * s12 * s24 + 14.0 * k * L2 * s12 * s22
      + 12.0 * k * L2 * s12 - 4.0 * k * L2 * s1 * s23 - 8.0 * k * L2 * s1 * s2
      + 6.0 * k * L2 * s24 + 12.0 * k * L2 * s22 + 6.0 * k * L2;
  return sum;
}

inline double num2_11(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, s12 = s1 * s1, c22 = c2 * c2, s22 = s2 * s2;
  const double sum = 4.0 * c12 * c22 + 4.0 * c12 * c2 + 2.0 * c12 * s22 + 3.0 * c12
      + 4.0 * c1 * c22 + 2.0 * c1 * c2 + 2.0 * c1 * s22 + 2.0 * c1 + 2.0 * s12 * c22 + 3.0 * c22
      + 2.0 * s12 * c2 + 2.0 * c2 + s12 * s22 + 2.0 * s12 + 2.0 * s22 + 3.0;
  return -2.0 * L2 * k * s1 * sum;
}

inline double den2_11(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double c12 = c1 * c1, c13 = c1 * c1 * c1, c14 = (c1 * c1) * (c1 * c1), s12 = s1 * s1,
      s13 = s1 * s1 * s1, s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2, c23 = c2 * c2 * c2,
      c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2, s23 = s2 * s2 * s2,
      s24 = (s2 * s2) * (s2 * s2);
  const double sum = 4.0 * k * L * c14 * c22 + 4.0 * k * L * c14 * c2 + 2.0 * k * L * c14 * s22
      + 3.0 * k * L * c14 + 4.0 * k * L * c13 * c22 + 2.0 * k * L * c13 * c2
      + 2.0 * k * L * c13 * s22 + 2.0 * k * L * c13 + 4.0 * k * L * c12 * c24
      + 4.0 * k * L * c12 * c23 + 8.0 * k * L * c12 * s12 * c22 + 8.0 * k * L * c12 * c22 * s22
      + 10.0 * k * L * c12 * c22 + 8.0 * k * L * c12 * s12 * c2
      - 2.0 * k * L * c12 * s1 * c2 * s2 + 4.0 * k * L * c12 * c2 * s22 + 6.0 * k * L * c12 * c2
      + 4.0 * k * L * c12 * s12 * s22 + 6.0 * k * L * c12 * s12 - 2.0 * k * L * c12 * s1 * s2
      + 4.0 * k * L * c12 * s24 + 8.0 * k * L * c12 * s22 + 6.0 * k * L * c12
      + 4.0 * k * L * c1 * c24 + 2.0 * k * L * c1 * c23 + 4.0 * k * L * c1 * s12 * c22
      - 2.0 * k * L * c1 * s1 * c22 * s2 + 8.0 * k * L * c1 * c22 * s22 + 6.0 * k * L * c1 * c22
      + 2.0 * k * L * c1 * s12 * c2 - 2.0 * k * L * c1 * s1 * c2 * s2
      + 2.0 * k * L * c1 * c2 * s22 + 2.0 * k * L * c1 * c2 + 2.0 * k * L * c1 * s12 * s22
      + 2.0 * k * L * c1 * s12 - 2.0 * k * L * c1 * s1 * s23 - 2.0 * k * L * c1 * s1 * s2
      + 4.0 * k * L * c1 * s24 + 6.0 * k * L * c1 * s22 + 2.0 * k * L * c1
      + 2.0 * k * L * s12 * c24 + 3.0 * k * L * c24 + 2.0 * k * L * s12 * c23
      + 2.0 * k * L * c23 + 4.0 * k * L * s14 * c22 + 4.0 * k * L * s12 * c22 * s22
      + 8.0 * k * L * s12 * c22 - 2.0 * k * L * s1 * c22 * s2 + 6.0 * k * L * c22 * s22
      + 6.0 * k * L * c22 + 4.0 * k * L * s14 * c2 - 2.0 * k * L * s13 * c2 * s2
      + 2.0 * k * L * s12 * c2 * s22 + 6.0 * k * L * s12 * c2 - 2.0 * k * L * s1 * c2 * s2
      + 2.0 * k * L * c2 * s22 + 2.0 * k * L * c2 + 2.0 * k * L * s14 * s22 + 3.0 * k * L * s14
      - 2.0 * k * L * s13 * s2 + 2.0 * k * L * s12 * s24 + 7.0 * k * L * s12 * s22
      + 6.0 * k * L * s12 - 2.0 * k * L * s1 * s23 - 4.0 * k * L * s1 * s2 + 3.0 * k * L * s24
      + 6.0 * k * L * s22 + 3.0 * k * L;
  return sum;
}

inline double num3_11(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, s12 = s1 * s1, s13 = s1 * s1 * s1, c22 = c2 * c2,
      s22 = s2 * s2, s23 = s2 * s2 * s2;
  const double sum = 2.0 * c12 * c2 * s2 + c12 * s1 + 2.0 * c12 * s2 - 2.0 * c1 * s1 * c22
      - 3.0 * c1 * s1 * c2 + 3.0 * c1 * c2 * s2 - c1 * s1 * s22 - c1 * s1 + 2.0 * c1 * s2
      - 2.0 * s1 * c22 - c22 * s2 + s12 * c2 * s2 - 2.0 * s1 * c2 + c2 * s2 + s13 + s12 * s2
      - s1 * s22 - s23;
  return -L2 * k * c1 * sum;
}

inline double num1_12(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L3 = L * L * L, c12 = c1 * c1, c13 = c1 * c1 * c1, c14 = (c1 * c1) * (c1 * c1),
      s12 = s1 * s1, s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2, c23 = c2 * c2 * c2,
      c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2, s24 = (s2 * s2) * (s2 * s2);
  const double sum = 2.0 * c14 + 2.0 * c13 - 2.0 * c12 * c2 + 4.0 * c12 * s12 + 3.0 * c12 * s22
      + 2.0 * c12 + 2.0 * c1 * c22 + 2.0 * c1 * s12 - 2.0 * c1 * s1 * s2 + 4.0 * c1 * s22
      + 2.0 * c1 - 2.0 * c24 - 2.0 * c23 - 3.0 * s12 * c22 - 4.0 * c22 * s22 - 2.0 * c22
      - 4.0 * s12 * c2 + 2.0 * s1 * c2 * s2 - 2.0 * c2 * s22 - 2.0 * c2 + 2.0 * s14 + s12
      - 2.0 * s24 - s22;
  return (2.0 * L3 * k / 3.0 + 2.0 * L3 * k * (c1 + 1.0)) * sum;
}

inline double den1_12(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, c13 = c1 * c1 * c1, c14 = (c1 * c1) * (c1 * c1),
      s12 = s1 * s1, s13 = s1 * s1 * s1, s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2,
      c23 = c2 * c2 * c2, c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2, s23 = s2 * s2 * s2,
      s24 = (s2 * s2) * (s2 * s2);
  const double sum = 16.0 * k * L2 * c14 * c22 + 16.0 * k * L2 * c14 * c2
      + 8.0 * k * L2 * c14 * s22 + 12.0 * k * L2 * c14 + 16.0 * k * L2 * c13 * c22
      + 8.0 * k * L2 * c13 * c2 + 8.0 * k * L2 * c13 * s22 + 8.0 * k * L2 * c13
      + 16.0 * k * L2 * c12 * c24 + 16.0 * k * L2 * c12 * c23 + 32.0 * k * L2 * c12 * s12 * c22
      + 32.0 * k * L2 * c12 * c22 * s22 + 40.0 * k * L2 * c12 * c22
      + 32.0 * k * L2 * c12 * s12 * c2 - 8.0 * k * L2 * c12 * s1 * c2 * s2
      + 16.0 * k * L2 * c12 * c2 * s22 + 24.0 * k * L2 * c12 * c2
      + 16.0 * k * L2 * c12 * s12 * s22 + 24.0 * k * L2 * c12 * s12
      - 8.0 * k * L2 * c12 * s1 * s2 + 16.0 * k * L2 * c12 * s24 + 32.0 * k * L2 * c12 * s22
      + 24.0 * k * L2 * c12 + 16.0 * k * L2 * c1 * c24 + 8.0 * k * L2 * c1 * c23
      + 16.0 * k * L2 * c1 * s12 * c22 - 8.0 * k * L2 * c1 * s1 * c22 * s2
      + 32.0 * k * L2 * c1 * c22 * s22 + 24.0 * k * L2 * c1 * c22 + 8.0 * k * L2 * c1 * s12 * c2
      - 8.0 * k * L2 * c1 * s1 * c2 * s2 + 8.0 * k * L2 * c1 * c2 * s22 + 8.0 * k * L2 * c1 * c2
      + 8.0 * k * L2 * c1 * s12 * s22 + 8.0 * k * L2 * c1 * s12 - 8.0 * k * L2 * c1 * s1 * s23
      - 8.0 * k * L2 * c1 * s1 * s2 + 16.0 * k * L2 * c1 * s24 + 24.0 * k * L2 * c1 * s22
      + 8.0 * k * L2 * c1 + 8.0 * k * L2 * s12 * c24 + 12.0 * k * L2 * c24
      + 8.0 * k * L2 * s12 * c23 + 8.0 * k * L2 * c23 + 16.0 * k * L2 * s14 * c22
      + 16.0 * k * L2 * s12 * c22 * s22 + 32.0 * k * L2 * s12 * c22
      - 8.0 * k * L2 * s1 * c22 * s2 + 24.0 * k * L2 * c22 * s22 + 24.0 * k * L2 * c22
      + 16.0 * k * L2 * s14 * c2 - 8.0 * k * L2 * s13 * c2 * s2 + 8.0 * k * L2 * s12 * c2 * s22
      + 24.0 * k * L2 * s12 * c2 - 8.0 * k * L2 * s1 * c2 * s2 + 8.0 * k * L2 * c2 * s22
      + 8.0 * k * L2 * c2 + 8.0 * k * L2 * s14 * s22 + 12.0 * k * L2 * s14
      - 8.0 * k * L2 * s13 * s2 + 8.0 * k * L2 * s12 * s24 + 28.0 * k * L2 * s12 * s22
      + 24.0 * k * L2 * s12 - 8.0 * k * L2 * s1 * s23 - 16.0 * k * L2 * s1 * s2
      + 12.0 * k * L2 * s24 + 24.0 * k * L2 * s22 + 12.0 * k * L2;
  return sum;
}

inline double num2_12(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, s12 = s1 * s1, s13 = s1 * s1 * s1, c22 = c2 * c2,
      s22 = s2 * s2, s23 = s2 * s2 * s2;
  const double sum = 2.0 * c12 * c2 * s2 + c12 * s1 + 2.0 * c12 * s2 - 2.0 * c1 * s1 * c22
      - 3.0 * c1 * s1 * c2 + 3.0 * c1 * c2 * s2 - c1 * s1 * s22 - c1 * s1 + 2.0 * c1 * s2
      - 2.0 * s1 * c22 - c22 * s2 + s12 * c2 * s2 - 2.0 * s1 * c2 + c2 * s2 + s13 + s12 * s2
      - s1 * s22 - s23;
  return -L2 * k * s1 * sum;
}

inline double num3_12(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, c13 = c1 * c1 * c1, c14 = (c1 * c1) * (c1 * c1),
      s12 = s1 * s1, s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2, c23 = c2 * c2 * c2,
      c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2, s24 = (s2 * s2) * (s2 * s2);
  const double sum = 2.0 * c14 + 4.0 * c13 + 4.0 * c12 * c22 + 4.0 * c12 * c2 + 4.0 * c12 * s12
      + 5.0 * c12 * s22 + 8.0 * c12 + 4.0 * c1 * c22 - 2.0 * c1 * s1 * c2 * s2 + 4.0 * c1 * s12
      - 4.0 * c1 * s1 * s2 + 8.0 * c1 * s22 + 4.0 * c1 + 2.0 * c24 + 4.0 * c23 + 5.0 * s12 * c22
      + 4.0 * c22 * s22 + 8.0 * c22 + 8.0 * s12 * c2 - 4.0 * s1 * c2 * s2 + 4.0 * c2 * s22
      + 4.0 * c2 + 2.0 * s14 + 4.0 * s12 * s22 + 9.0 * s12 - 8.0 * s1 * s2 + 2.0 * s24
      + 9.0 * s22 + 6.0;
  return -L2 * k * c1 * sum;
}

inline double den3_12(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double c12 = c1 * c1, c13 = c1 * c1 * c1, c14 = (c1 * c1) * (c1 * c1), s12 = s1 * s1,
      s13 = s1 * s1 * s1, s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2, c23 = c2 * c2 * c2,
      c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2, s23 = s2 * s2 * s2,
      s24 = (s2 * s2) * (s2 * s2);
  const double sum = 8.0 * k * L * c14 * c22 + 8.0 * k * L * c14 * c2 + 4.0 * k * L * c14 * s22
      + 6.0 * k * L * c14 + 8.0 * k * L * c13 * c22 + 4.0 * k * L * c13 * c2
      + 4.0 * k * L * c13 * s22 + 4.0 * k * L * c13 + 8.0 * k * L * c12 * c24
      + 8.0 * k * L * c12 * c23 + 16.0 * k * L * c12 * s12 * c22
      + 16.0 * k * L * c12 * c22 * s22 + 20.0 * k * L * c12 * c22
      + 16.0 * k * L * c12 * s12 * c2 - 4.0 * k * L * c12 * s1 * c2 * s2
      + 8.0 * k * L * c12 * c2 * s22 + 12.0 * k * L * c12 * c2 + 8.0 * k * L * c12 * s12 * s22
      + 12.0 * k * L * c12 * s12 - 4.0 * k * L * c12 * s1 * s2 + 8.0 * k * L * c12 * s24
      + 16.0 * k * L * c12 * s22 + 12.0 * k * L * c12 + 8.0 * k * L * c1 * c24
      + 4.0 * k * L * c1 * c23 + 8.0 * k * L * c1 * s12 * c22 - 4.0 * k * L * c1 * s1 * c22 * s2
      + 16.0 * k * L * c1 * c22 * s22 + 12.0 * k * L * c1 * c22 + 4.0 * k * L * c1 * s12 * c2
      - 4.0 * k * L * c1 * s1 * c2 * s2 + 4.0 * k * L * c1 * c2 * s22 + 4.0 * k * L * c1 * c2
      + 4.0 * k * L * c1 * s12 * s22 + 4.0 * k * L * c1 * s12 - 4.0 * k * L * c1 * s1 * s23
      - 4.0 * k * L * c1 * s1 * s2 + 8.0 * k * L * c1 * s24 + 12.0 * k * L * c1 * s22
      + 4.0 * k * L * c1 + 4.0 * k * L * s12 * c24 + 6.0 * k * L * c24 + 4.0 * k * L * s12 * c23
      + 4.0 * k * L * c23 + 8.0 * k * L * s14 * c22 + 8.0 * k * L * s12 * c22 * s22
      + 16.0 * k * L * s12 * c22 - 4.0 * k * L * s1 * c22 * s2 + 12.0 * k * L * c22 * s22
      + 12.0 * k * L * c22 + 8.0 * k * L * s14 * c2 - 4.0 * k * L * s13 * c2 * s2
      + 4.0 * k * L * s12 * c2 * s22 + 12.0 * k * L * s12 * c2 - 4.0 * k * L * s1 * c2 * s2
      + 4.0 * k * L * c2 * s22 + 4.0 * k * L * c2 + 4.0 * k * L * s14 * s22 + 6.0 * k * L * s14
      - 4.0 * k * L * s13 * s2 + 4.0 * k * L * s12 * s24 + 14.0 * k * L * s12 * s22
      + 12.0 * k * L * s12 - 4.0 * k * L * s1 * s23 - 8.0 * k * L * s1 * s2 + 6.0 * k * L * s24
      + 12.0 * k * L * s22 + 6.0 * k * L;
  return sum;
}

inline double num1_21(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, s12 = s1 * s1, c22 = c2 * c2, s22 = s2 * s2;
  const double sum = 4.0 * c12 * c22 + 4.0 * c12 * c2 + 2.0 * c12 * s22 + 3.0 * c12
      + 4.0 * c1 * c22 + 2.0 * c1 * c2 + 2.0 * c1 * s22 + 2.0 * c1 + 2.0 * s12 * c22 + 3.0 * c22
      + 2.0 * s12 * c2 + 2.0 * c2 + s12 * s22 + 2.0 * s12 + 2.0 * s22 + 3.0;
  return 2.0 * L2 * k * s2 * sum;
}

inline double num2_21(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L3 = L * L * L, c12 = c1 * c1, s12 = s1 * s1, s13 = s1 * s1 * s1, c22 = c2 * c2,
      s22 = s2 * s2, s23 = s2 * s2 * s2;
  const double sum = 2.0 * c12 * c2 * s2 + c12 * s1 + 2.0 * c12 * s2 + 2.0 * c1 * s1 * c22
      + c1 * s1 * c2 + c1 * c2 * s2 + c1 * s1 * s22 + c1 * s1 + 2.0 * s1 * c22 + c22 * s2
      + s12 * c2 * s2 + c2 * s2 + s13 + s12 * s2 + s1 * s22 + 2.0 * s1 + s23 + 2.0 * s2;
  return -(2.0 * L3 * k / 3.0 + 2.0 * L3 * k * (c2 + 1.0)) * sum;
}

inline double den2_21(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, c13 = c1 * c1 * c1, c14 = (c1 * c1) * (c1 * c1),
      s12 = s1 * s1, s13 = s1 * s1 * s1, s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2,
      c23 = c2 * c2 * c2, c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2, s23 = s2 * s2 * s2,
      s24 = (s2 * s2) * (s2 * s2);
  const double sum = 8.0 * k * L2 * c14 * c22 + 8.0 * k * L2 * c14 * c2
      + 4.0 * k * L2 * c14 * s22 + 6.0 * k * L2 * c14 + 8.0 * k * L2 * c13 * c22
      + 4.0 * k * L2 * c13 * c2 + 4.0 * k * L2 * c13 * s22 + 4.0 * k * L2 * c13
      + 8.0 * k * L2 * c12 * c24 + 8.0 * k * L2 * c12 * c23 + 16.0 * k * L2 * c12 * s12 * c22
      + 16.0 * k * L2 * c12 * c22 * s22 + 20.0 * k * L2 * c12 * c22
      + 16.0 * k * L2 * c12 * s12 * c2 - 4.0 * k * L2 * c12 * s1 * c2 * s2
      + 8.0 * k * L2 * c12 * c2 * s22 + 12.0 * k * L2 * c12 * c2
      + 8.0 * k * L2 * c12 * s12 * s22 + 12.0 * k * L2 * c12 * s12
      - 4.0 * k * L2 * c12 * s1 * s2 + 8.0 * k * L2 * c12 * s24 + 16.0 * k * L2 * c12 * s22
      + 12.0 * k * L2 * c12 + 8.0 * k * L2 * c1 * c24 + 4.0 * k * L2 * c1 * c23
      + 8.0 * k * L2 * c1 * s12 * c22 - 4.0 * k * L2 * c1 * s1 * c22 * s2
      + 16.0 * k * L2 * c1 * c22 * s22 + 12.0 * k * L2 * c1 * c22 + 4.0 * k * L2 * c1 * s12 * c2
      - 4.0 * k * L2 * c1 * s1 * c2 * s2 + 4.0 * k * L2 * c1 * c2 * s22 + 4.0 * k * L2 * c1 * c2
      + 4.0 * k * L2 * c1 * s12 * s22 + 4.0 * k * L2 * c1 * s12 - 4.0 * k * L2 * c1 * s1 * s23
      - 4.0 * k * L2 * c1 * s1 * s2 + 8.0 * k * L2 * c1 * s24 + 12.0 * k * L2 * c1 * s22
      + 4.0 * k * L2 * c1 + 4.0 * k * L2 * s12 * c24 + 6.0 * k * L2 * c24
      + 4.0 * k * L2 * s12 * c23 + 4.0 * k * L2 * c23 + 8.0 * k * L2 * s14 * c22
      + 8.0 * k * L2 * s12 * c22 * s22 + 16.0 * k * L2 * s12 * c22
      - 4.0 * k * L2 * s1 * c22 * s2 + 12.0 * k * L2 * c22 * s22 + 12.0 * k * L2 * c22
      + 8.0 * k * L2 * s14 * c2 - 4.0 * k * L2 * s13 * c2 * s2 + 4.0 * k * L2 * s12 * c2 * s22
      + 12.0 * k * L2 * s12 * c2 - 4.0 * k * L2 * s1 * c2 * s2 + 4.0 * k * L2 * c2 * s22
      + 4.0 * k * L2 * c2 + 4.0 * k * L2 * s14 * s22 + 6.0 * k * L2 * s14
      - 4.0 * k * L2 * s13 * s2 + 4.0 * k * L2 * s12 * s24 + 14.0 * k * L2 * s12 * s22
      + 12.0 * k * L2 * s12 - 4.0 * k * L2 * s1 * s23 - 8.0 * k * L2 * s1 * s2
      + 6.0 * k * L2 * s24 + 12.0 * k * L2 * s22 + 6.0 * k * L2;
  return sum;
}

inline double num3_21(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, s12 = s1 * s1, s13 = s1 * s1 * s1, c22 = c2 * c2,
      s22 = s2 * s2, s23 = s2 * s2 * s2;
  const double sum = 2.0 * c12 * c2 * s2 + c12 * s1 + 2.0 * c12 * s2 - 2.0 * c1 * s1 * c22
      - 3.0 * c1 * s1 * c2 + 3.0 * c1 * c2 * s2 - c1 * s1 * s22 - c1 * s1 + 2.0 * c1 * s2
      - 2.0 * s1 * c22 - c22 * s2 + s12 * c2 * s2 - 2.0 * s1 * c2 + c2 * s2 + s13 + s12 * s2
      - s1 * s22 - s23;
  return -L2 * k * c2 * sum;
}

inline double num1_22(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, s12 = s1 * s1, s13 = s1 * s1 * s1, c22 = c2 * c2,
      s22 = s2 * s2, s23 = s2 * s2 * s2;
  const double sum = 2.0 * c12 * c2 * s2 + c12 * s1 + 2.0 * c12 * s2 - 2.0 * c1 * s1 * c22
      - 3.0 * c1 * s1 * c2 + 3.0 * c1 * c2 * s2 - c1 * s1 * s22 - c1 * s1 + 2.0 * c1 * s2
      - 2.0 * s1 * c22 - c22 * s2 + s12 * c2 * s2 - 2.0 * s1 * c2 + c2 * s2 + s13 + s12 * s2
      - s1 * s22 - s23;
  return L2 * k * s2 * sum;
}

inline double num2_22(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L3 = L * L * L, c12 = c1 * c1, c13 = c1 * c1 * c1, c14 = (c1 * c1) * (c1 * c1),
      s12 = s1 * s1, s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2, c23 = c2 * c2 * c2,
      c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2, s24 = (s2 * s2) * (s2 * s2);
  const double sum = 2.0 * c14 + 2.0 * c13 - 2.0 * c12 * c2 + 4.0 * c12 * s12 + 3.0 * c12 * s22
      + 2.0 * c12 + 2.0 * c1 * c22 + 2.0 * c1 * s12 - 2.0 * c1 * s1 * s2 + 4.0 * c1 * s22
      + 2.0 * c1 - 2.0 * c24 - 2.0 * c23 - 3.0 * s12 * c22 - 4.0 * c22 * s22 - 2.0 * c22
      - 4.0 * s12 * c2 + 2.0 * s1 * c2 * s2 - 2.0 * c2 * s22 - 2.0 * c2 + 2.0 * s14 + s12
      - 2.0 * s24 - s22;
  return -(2.0 * L3 * k / 3.0 + 2.0 * L3 * k * (c2 + 1.0)) * sum;
}

inline double num3_22(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, c13 = c1 * c1 * c1, c14 = (c1 * c1) * (c1 * c1),
      s12 = s1 * s1, s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2, c23 = c2 * c2 * c2,
      c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2, s24 = (s2 * s2) * (s2 * s2);
  const double sum = 2.0 * c14 + 4.0 * c13 + 4.0 * c12 * c22 + 4.0 * c12 * c2 + 4.0 * c12 * s12
      + 5.0 * c12 * s22 + 8.0 * c12 + 4.0 * c1 * c22 - 2.0 * c1 * s1 * c2 * s2 + 4.0 * c1 * s12
      - 4.0 * c1 * s1 * s2 + 8.0 * c1 * s22 + 4.0 * c1 + 2.0 * c24 + 4.0 * c23 + 5.0 * s12 * c22
      + 4.0 * c22 * s22 + 8.0 * c22 + 8.0 * s12 * c2 - 4.0 * s1 * c2 * s2 + 4.0 * c2 * s22
      + 4.0 * c2 + 2.0 * s14 + 4.0 * s12 * s22 + 9.0 * s12 - 8.0 * s1 * s2 + 2.0 * s24
      + 9.0 * s22 + 6.0;
  return -L2 * k * c2 * sum;
}

inline double num1_31(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L3 = L * L * L, c12 = c1 * c1, c14 = (c1 * c1) * (c1 * c1), s12 = s1 * s1,
      s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2, c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2,
      s24 = (s2 * s2) * (s2 * s2);
  const double sum = 2.0 * c14 + 4.0 * c12 * c22 + 4.0 * c12 * s12 + 5.0 * c12 * s22 + 4.0 * c12
      + 2.0 * c1 * s1 * c2 * s2 + 2.0 * c24 + 5.0 * s12 * c22 + 4.0 * c22 * s22 + 4.0 * c22
      + 2.0 * s14 + 4.0 * s12 * s22 + 5.0 * s12 + 2.0 * s24 + 5.0 * s22 + 2.0;
  return (2.0 * L3 * k / 3.0 + 2.0 * L3 * k * (c1 + 1.0)) * sum;
}

inline double den1_31(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L3 = L * L * L, c12 = c1 * c1, c13 = c1 * c1 * c1, c14 = (c1 * c1) * (c1 * c1),
      s12 = s1 * s1, s13 = s1 * s1 * s1, s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2,
      c23 = c2 * c2 * c2, c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2, s23 = s2 * s2 * s2,
      s24 = (s2 * s2) * (s2 * s2);
  const double sum = 16.0 * k * L3 * c14 * c22 + 16.0 * k * L3 * c14 * c2
      + 8.0 * k * L3 * c14 * s22 + 12.0 * k * L3 * c14 + 16.0 * k * L3 * c13 * c22
      + 8.0 * k * L3 * c13 * c2 + 8.0 * k * L3 * c13 * s22 + 8.0 * k * L3 * c13
      + 16.0 * k * L3 * c12 * c24 + 16.0 * k * L3 * c12 * c23 + 32.0 * k * L3 * c12 * s12 * c22
      + 32.0 * k * L3 * c12 * c22 * s22 + 40.0 * k * L3 * c12 * c22
      + 32.0 * k * L3 * c12 * s12 * c2 - 8.0 * k * L3 * c12 * s1 * c2 * s2
      + 16.0 * k * L3 * c12 * c2 * s22 + 24.0 * k * L3 * c12 * c2
      + 16.0 * k * L3 * c12 * s12 * s22 + 24.0 * k * L3 * c12 * s12
      - 8.0 * k * L3 * c12 * s1 * s2 + 16.0 * k * L3 * c12 * s24 + 32.0 * k * L3 * c12 * s22
      + 24.0 * k * L3 * c12 + 16.0 * k * L3 * c1 * c24 + 8.0 * k * L3 * c1 * c23
      + 16.0 * k * L3 * c1 * s12 * c22 - 8.0 * k * L3 * c1 * s1 * c22 * s2
      + 32.0 * k * L3 * c1 * c22 * s22 + 24.0 * k * L3 * c1 * c22 + 8.0 * k * L3 * c1 * s12 * c2
      - 8.0 * k * L3 * c1 * s1 * c2 * s2 + 8.0 * k * L3 * c1 * c2 * s22 + 8.0 * k * L3 * c1 * c2
      + 8.0 * k * L3 * c1 * s12 * s22 + 8.0 * k * L3 * c1 * s12 - 8.0 * k * L3 * c1 * s1 * s23
      - 8.0 * k * L3 * c1 * s1 * s2 + 16.0 * k * L3 * c1 * s24 + 24.0 * k * L3 * c1 * s22
      + 8.0 * k * L3 * c1 + 8.0 * k * L3 * s12 * c24 + 12.0 * k * L3 * c24
      + 8.0 * k * L3 * s12 * c23 + 8.0 * k * L3 * c23 + 16.0 * k * L3 * s14 * c22
      + 16.0 * k * L3 * s12 * c22 * s22 + 32.0 * k * L3 * s12 * c22
      - 8.0 * k * L3 * s1 * c22 * s2 + 24.0 * k * L3 * c22 * s22 + 24.0 * k * L3 * c22
      + 16.0 * k * L3 * s14 * c2 - 8.0 * k * L3 * s13 * c2 * s2 + 8.0 * k * L3 * s12 * c2 * s22
      + 24.0 * k * L3 * s12 * c2 - 8.0 * k * L3 * s1 * c2 * s2 + 8.0 * k * L3 * c2 * s22
      + 8.0 * k * L3 * c2 + 8.0 * k * L3 * s14 * s22 + 12.0 * k * L3 * s14
      - 8.0 * k * L3 * s13 * s2 + 8.0 * k * L3 * s12 * s24 + 28.0 * k * L3 * s12 * s22
      + 24.0 * k * L3 * s12 - 8.0 * k * L3 * s1 * s23 - 16.0 * k * L3 * s1 * s2
      + 12.0 * k * L3 * s24 + 24.0 * k * L3 * s22 + 12.0 * k * L3;
  return sum;
}

inline double num2_31(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, s12 = s1 * s1, s13 = s1 * s1 * s1, c22 = c2 * c2,
      s22 = s2 * s2, s23 = s2 * s2 * s2;
  const double sum = 2.0 * c12 * c2 * s2 + c12 * s1 + 2.0 * c12 * s2 + 2.0 * c1 * s1 * c22
      + c1 * s1 * c2 + c1 * c2 * s2 + c1 * s1 * s22 + c1 * s1 + 2.0 * s1 * c22 + c22 * s2
      + s12 * c2 * s2 + c2 * s2 + s13 + s12 * s2 + s1 * s22 + 2.0 * s1 + s23 + 2.0 * s2;
  return -L2 * k * s1 * sum;
}

inline double den2_31(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, c13 = c1 * c1 * c1, c14 = (c1 * c1) * (c1 * c1),
      s12 = s1 * s1, s13 = s1 * s1 * s1, s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2,
      c23 = c2 * c2 * c2, c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2, s23 = s2 * s2 * s2,
      s24 = (s2 * s2) * (s2 * s2);
  const double sum = 4.0 * k * L2 * c14 * c22 + 4.0 * k * L2 * c14 * c2
      + 2.0 * k * L2 * c14 * s22 + 3.0 * k * L2 * c14 + 4.0 * k * L2 * c13 * c22
      + 2.0 * k * L2 * c13 * c2 + 2.0 * k * L2 * c13 * s22 + 2.0 * k * L2 * c13
      + 4.0 * k * L2 * c12 * c24 + 4.0 * k * L2 * c12 * c23 + 8.0 * k * L2 * c12 * s12 * c22
      + 8.0 * k * L2 * c12 * c22 * s22 + 10.0 * k * L2 * c12 * c22
      + 8.0 * k * L2 * c12 * s12 * c2 - 2.0 * k * L2 * c12 * s1 * c2 * s2
      + 4.0 * k * L2 * c12 * c2 * s22 + 6.0 * k * L2 * c12 * c2 + 4.0 * k * L2 * c12 * s12 * s22
      + 6.0 * k * L2 * c12 * s12 - 2.0 * k * L2 * c12 * s1 * s2 + 4.0 * k * L2 * c12 * s24
      + 8.0 * k * L2 * c12 * s22 + 6.0 * k * L2 * c12 + 4.0 * k * L2 * c1 * c24
      + 2.0 * k * L2 * c1 * c23 + 4.0 * k * L2 * c1 * s12 * c22
      - 2.0 * k * L2 * c1 * s1 * c22 * s2 + 8.0 * k * L2 * c1 * c22 * s22
      + 6.0 * k * L2 * c1 * c22 + 2.0 * k * L2 * c1 * s12 * c2
      - 2.0 * k * L2 * c1 * s1 * c2 * s2 + 2.0 * k * L2 * c1 * c2 * s22 + 2.0 * k * L2 * c1 * c2
      + 2.0 * k * L2 * c1 * s12 * s22 + 2.0 * k * L2 * c1 * s12 - 2.0 * k * L2 * c1 * s1 * s23
      - 2.0 * k * L2 * c1 * s1 * s2 + 4.0 * k * L2 * c1 * s24 + 6.0 * k * L2 * c1 * s22
      + 2.0 * k * L2 * c1 + 2.0 * k * L2 * s12 * c24 + 3.0 * k * L2 * c24
      + 2.0 * k * L2 * s12 * c23 + 2.0 * k * L2 * c23 + 4.0 * k * L2 * s14 * c22
      + 4.0 * k * L2 * s12 * c22 * s22 + 8.0 * k * L2 * s12 * c22 - 2.0 * k * L2 * s1 * c22 * s2
      + 6.0 * k * L2 * c22 * s22 + 6.0 * k * L2 * c22 + 4.0 * k * L2 * s14 * c2
      - 2.0 * k * L2 * s13 * c2 * s2 + 2.0 * k * L2 * s12 * c2 * s22 + 6.0 * k * L2 * s12 * c2
      - 2.0 * k * L2 * s1 * c2 * s2 + 2.0 * k * L2 * c2 * s22 + 2.0 * k * L2 * c2
      + 2.0 * k * L2 * s14 * s22 + 3.0 * k * L2 * s14 - 2.0 * k * L2 * s13 * s2
      + 2.0 * k * L2 * s12 * s24 + 7.0 * k * L2 * s12 * s22 + 6.0 * k * L2 * s12
      - 2.0 * k * L2 * s1 * s23 - 4.0 * k * L2 * s1 * s2 + 3.0 * k * L2 * s24
      + 6.0 * k * L2 * s22 + 3.0 * k * L2;
  return sum;
}

inline double num3_31(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, c13 = c1 * c1 * c1, c14 = (c1 * c1) * (c1 * c1),
      s12 = s1 * s1, s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2, c23 = c2 * c2 * c2,
      c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2, s24 = (s2 * s2) * (s2 * s2);
  const double sum = 2.0 * c14 + 2.0 * c13 - 2.0 * c12 * c2 + 4.0 * c12 * s12 + 3.0 * c12 * s22
      + 2.0 * c12 + 2.0 * c1 * c22 + 2.0 * c1 * s12 - 2.0 * c1 * s1 * s2 + 4.0 * c1 * s22
      + 2.0 * c1 - 2.0 * c24 - 2.0 * c23 - 3.0 * s12 * c22 - 4.0 * c22 * s22 - 2.0 * c22
      - 4.0 * s12 * c2 + 2.0 * s1 * c2 * s2 - 2.0 * c2 * s22 - 2.0 * c2 + 2.0 * s14 + s12
      - 2.0 * s24 - s22;
  return -L2 * k * c1 * sum;
}

inline double den3_31(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, c13 = c1 * c1 * c1, c14 = (c1 * c1) * (c1 * c1),
      s12 = s1 * s1, s13 = s1 * s1 * s1, s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2,
      c23 = c2 * c2 * c2, c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2, s23 = s2 * s2 * s2,
      s24 = (s2 * s2) * (s2 * s2);
  const double sum = 8.0 * k * L2 * c14 * c22 + 8.0 * k * L2 * c14 * c2
      + 4.0 * k * L2 * c14 * s22 + 6.0 * k * L2 * c14 + 8.0 * k * L2 * c13 * c22
      + 4.0 * k * L2 * c13 * c2 + 4.0 * k * L2 * c13 * s22 + 4.0 * k * L2 * c13
      + 8.0 * k * L2 * c12 * c24 + 8.0 * k * L2 * c12 * c23 + 16.0 * k * L2 * c12 * s12 * c22
      + 16.0 * k * L2 * c12 * c22 * s22 + 20.0 * k * L2 * c12 * c22
      + 16.0 * k * L2 * c12 * s12 * c2 - 4.0 * k * L2 * c12 * s1 * c2 * s2
      + 8.0 * k * L2 * c12 * c2 * s22 + 12.0 * k * L2 * c12 * c2
      + 8.0 * k * L2 * c12 * s12 * s22 + 12.0 * k * L2 * c12 * s12
      - 4.0 * k * L2 * c12 * s1 * s2 + 8.0 * k * L2 * c12 * s24 + 16.0 * k * L2 * c12 * s22
      + 12.0 * k * L2 * c12 + 8.0 * k * L2 * c1 * c24 + 4.0 * k * L2 * c1 * c23
      + 8.0 * k * L2 * c1 * s12 * c22 - 4.0 * k * L2 * c1 * s1 * c22 * s2
      + 16.0 * k * L2 * c1 * c22 * s22 + 12.0 * k * L2 * c1 * c22 + 4.0 * k * L2 * c1 * s12 * c2
      - 4.0 * k * L2 * c1 * s1 * c2 * s2 + 4.0 * k * L2 * c1 * c2 * s22 + 4.0 * k * L2 * c1 * c2
      + 4.0 * k * L2 * c1 * s12 * s22 + 4.0 * k * L2 * c1 * s12 - 4.0 * k * L2 * c1 * s1 * s23
      - 4.0 * k * L2 * c1 * s1 * s2 + 8.0 * k * L2 * c1 * s24 + 12.0 * k * L2 * c1 * s22
      + 4.0 * k * L2 * c1 + 4.0 * k * L2 * s12 * c24 + 6.0 * k * L2 * c24
      + 4.0 * k * L2 * s12 * c23 + 4.0 * k * L2 * c23 + 8.0 * k * L2 * s14 * c22
      + 8.0 * k * L2 * s12 * c22 * s22 + 16.0 * k * L2 * s12 * c22
      - 4.0 * k * L2 * s1 * c22 * s2 + 12.0 * k * L2 * c22 * s22 + 12.0 * k * L2 * c22
      + 8.0 * k * L2 * s14 * c2 - 4.0 * k * L2 * s13 * c2 * s2 + 4.0 * k * L2 * s12 * c2 * s22
      + 12.0 * k * L2 * s12 * c2 - 4.0 * k * L2 * s1 * c2 * s2 + 4.0 * k * L2 * c2 * s22
      + 4.0 * k * L2 * c2 + 4.0 * k * L2 * s14 * s22 + 6.0 * k * L2 * s14
      - 4.0 * k * L2 * s13 * s2 + 4.0 * k * L2 * s12 * s24 + 14.0 * k * L2 * s12 * s22
      + 12.0 * k * L2 * s12 - 4.0 * k * L2 * s1 * s23 - 8.0 * k * L2 * s1 * s2
      + 6.0 * k * L2 * s24 + 12.0 * k * L2 * s22 + 6.0 * k * L2;
  return sum;
}

inline double num1_32(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, s12 = s1 * s1, s13 = s1 * s1 * s1, c22 = c2 * c2,
      s22 = s2 * s2, s23 = s2 * s2 * s2;
  const double sum = 2.0 * c12 * c2 * s2 + c12 * s1 + 2.0 * c12 * s2 + 2.0 * c1 * s1 * c22
      + c1 * s1 * c2 + c1 * c2 * s2 + c1 * s1 * s22 + c1 * s1 + 2.0 * s1 * c22 + c22 * s2
      + s12 * c2 * s2 + c2 * s2 + s13 + s12 * s2 + s1 * s22 + 2.0 * s1 + s23 + 2.0 * s2;
  return L2 * k * s2 * sum;
}

inline double den1_32(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, c13 = c1 * c1 * c1, c14 = (c1 * c1) * (c1 * c1),
      s12 = s1 * s1, s13 = s1 * s1 * s1, s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2,
      c23 = c2 * c2 * c2, c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2, s23 = s2 * s2 * s2,
      s24 = (s2 * s2) * (s2 * s2);
  const double sum = 4.0 * k * L2 * c14 * c22 + 4.0 * k * L2 * c14 * c2
      + 2.0 * k * L2 * c14 * s22 + 3.0 * k * L2 * c14 + 4.0 * k * L2 * c13 * c22
      + 2.0 * k * L2 * c13 * c2 + 2.0 * k * L2 * c13 * s22 + 2.0 * k * L2 * c13
      + 4.0 * k * L2 * c12 * c24 + 4.0 * k * L2 * c12 * c23 + 8.0 * k * L2 * c12 * s12 * c22
      + 8.0 * k * L2 * c12 * c22 * s22 + 10.0 * k * L2 * c12 * c22
      + 8.0 * k * L2 * c12 * s12 * c2 - 2.0 * k * L2 * c12 * s1 * c2 * s2
      + 4.0 * k * L2 * c12 * c2 * s22 + 6.0 * k * L2 * c12 * c2 + 4.0 * k * L2 * c12 * s12 * s22
      + 6.0 * k * L2 * c12 * s12 - 2.0 * k * L2 * c12 * s1 * s2 + 4.0 * k * L2 * c12 * s24
      + 8.0 * k * L2 * c12 * s22 + 6.0 * k * L2 * c12 + 4.0 * k * L2 * c1 * c24
      + 2.0 * k * L2 * c1 * c23 + 4.0 * k * L2 * c1 * s12 * c22
      - 2.0 * k * L2 * c1 * s1 * c22 * s2 + 8.0 * k * L2 * c1 * c22 * s22
      + 6.0 * k * L2 * c1 * c22 + 2.0 * k * L2 * c1 * s12 * c2
      - 2.0 * k * L2 * c1 * s1 * c2 * s2 + 2.0 * k * L2 * c1 * c2 * s22 + 2.0 * k * L2 * c1 * c2
      + 2.0 * k * L2 * c1 * s12 * s22 + 2.0 * k * L2 * c1 * s12 - 2.0 * k * L2 * c1 * s1 * s23
      - 2.0 * k * L2 * c1 * s1 * s2 + 4.0 * k * L2 * c1 * s24 + 6.0 * k * L2 * c1 * s22
      + 2.0 * k * L2 * c1 + 2.0 * k * L2 * s12 * c24 + 3.0 * k * L2 * c24
      + 2.0 * k * L2 * s12 * c23 + 2.0 * k * L2 * c23 + 4.0 * k * L2 * s14 * c22
      + 4.0 * k * L2 * s12 * c22 * s22 + 8.0 * k * L2 * s12 * c22 - 2.0 * k * L2 * s1 * c22 * s2
      + 6.0 * k * L2 * c22 * s22 + 6.0 * k * L2 * c22 + 4.0 * k * L2 * s14 * c2
      - 2.0 * k * L2 * s13 * c2 * s2 + 2.0 * k * L2 * s12 * c2 * s22 + 6.0 * k * L2 * s12 * c2
      - 2.0 * k * L2 * s1 * c2 * s2 + 2.0 * k * L2 * c2 * s22 + 2.0 * k * L2 * c2
      + 2.0 * k * L2 * s14 * s22 + 3.0 * k * L2 * s14 - 2.0 * k * L2 * s13 * s2
      + 2.0 * k * L2 * s12 * s24 + 7.0 * k * L2 * s12 * s22 + 6.0 * k * L2 * s12
      - 2.0 * k * L2 * s1 * s23 - 4.0 * k * L2 * s1 * s2 + 3.0 * k * L2 * s24
      + 6.0 * k * L2 * s22 + 3.0 * k * L2;
  return sum;
}

inline double num2_32(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L3 = L * L * L, c12 = c1 * c1, c14 = (c1 * c1) * (c1 * c1), s12 = s1 * s1,
      s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2, c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2,
      s24 = (s2 * s2) * (s2 * s2);
  const double sum = 2.0 * c14 + 4.0 * c12 * c22 + 4.0 * c12 * s12 + 5.0 * c12 * s22 + 4.0 * c12
      + 2.0 * c1 * s1 * c2 * s2 + 2.0 * c24 + 5.0 * s12 * c22 + 4.0 * c22 * s22 + 4.0 * c22
      + 2.0 * s14 + 4.0 * s12 * s22 + 5.0 * s12 + 2.0 * s24 + 5.0 * s22 + 2.0;
  return -(2.0 * L3 * k / 3.0 + 2.0 * L3 * k * (c2 + 1.0)) * sum;
}

inline double den2_32(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L3 = L * L * L, c12 = c1 * c1, c13 = c1 * c1 * c1, c14 = (c1 * c1) * (c1 * c1),
      s12 = s1 * s1, s13 = s1 * s1 * s1, s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2,
      c23 = c2 * c2 * c2, c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2, s23 = s2 * s2 * s2,
      s24 = (s2 * s2) * (s2 * s2);
  const double sum = 16.0 * k * L3 * c14 * c22 + 16.0 * k * L3 * c14 * c2
      + 8.0 * k * L3 * c14 * s22 + 12.0 * k * L3 * c14 + 16.0 * k * L3 * c13 * c22
      + 8.0 * k * L3 * c13 * c2 + 8.0 * k * L3 * c13 * s22 + 8.0 * k * L3 * c13
      + 16.0 * k * L3 * c12 * c24 + 16.0 * k * L3 * c12 * c23 + 32.0 * k * L3 * c12 * s12 * c22
      + 32.0 * k * L3 * c12 * c22 * s22 + 40.0 * k * L3 * c12 * c22
      + 32.0 * k * L3 * c12 * s12 * c2 - 8.0 * k * L3 * c12 * s1 * c2 * s2
      + 16.0 * k * L3 * c12 * c2 * s22 + 24.0 * k * L3 * c12 * c2
      + 16.0 * k * L3 * c12 * s12 * s22 + 24.0 * k * L3 * c12 * s12
      - 8.0 * k * L3 * c12 * s1 * s2 + 16.0 * k * L3 * c12 * s24 + 32.0 * k * L3 * c12 * s22
      + 24.0 * k * L3 * c12 + 16.0 * k * L3 * c1 * c24 + 8.0 * k * L3 * c1 * c23
      + 16.0 * k * L3 * c1 * s12 * c22 - 8.0 * k * L3 * c1 * s1 * c22 * s2
      + 32.0 * k * L3 * c1 * c22 * s22 + 24.0 * k * L3 * c1 * c22 + 8.0 * k * L3 * c1 * s12 * c2
      - 8.0 * k * L3 * c1 * s1 * c2 * s2 + 8.0 * k * L3 * c1 * c2 * s22 + 8.0 * k * L3 * c1 * c2
      + 8.0 * k * L3 * c1 * s12 * s22 + 8.0 * k * L3 * c1 * s12 - 8.0 * k * L3 * c1 * s1 * s23
      - 8.0 * k * L3 * c1 * s1 * s2 + 16.0 * k * L3 * c1 * s24 + 24.0 * k * L3 * c1 * s22
      + 8.0 * k * L3 * c1 + 8.0 * k * L3 * s12 * c24 + 12.0 * k * L3 * c24
      + 8.0 * k * L3 * s12 * c23 + 8.0 * k * L3 * c23 + 16.0 * k * L3 * s14 * c22
      + 16.0 * k * L3 * s12 * c22 * s22 + 32.0 * k * L3 * s12 * c22
      - 8.0 * k * L3 * s1 * c22 * s2 + 24.0 * k * L3 * c22 * s22 + 24.0 * k * L3 * c22
      + 16.0 * k * L3 * s14 * c2 - 8.0 * k * L3 * s13 * c2 * s2 + 8.0 * k * L3 * s12 * c2 * s22
      + 24.0 * k * L3 * s12 * c2 - 8.0 * k * L3 * s1 * c2 * s2 + 8.0 * k * L3 * c2 * s22
      + 8.0 * k * L3 * c2 + 8.0 * k * L3 * s14 * s22 + 12.0 * k * L3 * s14
      - 8.0 * k * L3 * s13 * s2 + 8.0 * k * L3 * s12 * s24 + 28.0 * k * L3 * s12 * s22
      + 24.0 * k * L3 * s12 - 8.0 * k * L3 * s1 * s23 - 16.0 * k * L3 * s1 * s2
      + 12.0 * k * L3 * s24 + 24.0 * k * L3 * s22 + 12.0 * k * L3;
  return sum;
}

inline double num3_32(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, c13 = c1 * c1 * c1, c14 = (c1 * c1) * (c1 * c1),
      s12 = s1 * s1, s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2, c23 = c2 * c2 * c2,
      c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2, s24 = (s2 * s2) * (s2 * s2);
  const double sum = 2.0 * c14 + 2.0 * c13 - 2.0 * c12 * c2 + 4.0 * c12 * s12 + 3.0 * c12 * s22
      + 2.0 * c12 + 2.0 * c1 * c22 + 2.0 * c1 * s12 - 2.0 * c1 * s1 * s2 + 4.0 * c1 * s22
      + 2.0 * c1 - 2.0 * c24 - 2.0 * c23 - 3.0 * s12 * c22 - 4.0 * c22 * s22 - 2.0 * c22
      - 4.0 * s12 * c2 + 2.0 * s1 * c2 * s2 - 2.0 * c2 * s22 - 2.0 * c2 + 2.0 * s14 + s12
      - 2.0 * s24 - s22;
  return -L2 * k * c2 * sum;
}

inline double den3_32(const TrigShape& t, double L, double k) {
  const double c1 = t.c1, s1 = t.s1, c2 = t.c2, s2 = t.s2;
  const double L2 = L * L, c12 = c1 * c1, c13 = c1 * c1 * c1, c14 = (c1 * c1) * (c1 * c1),
      s12 = s1 * s1, s13 = s1 * s1 * s1, s14 = (s1 * s1) * (s1 * s1), c22 = c2 * c2,
      c23 = c2 * c2 * c2, c24 = (c2 * c2) * (c2 * c2), s22 = s2 * s2, s23 = s2 * s2 * s2,
      s24 = (s2 * s2) * (s2 * s2);
  const double sum = 8.0 * k * L2 * c14 * c22 + 8.0 * k * L2 * c14 * c2
      + 4.0 * k * L2 * c14 * s22 + 6.0 * k * L2 * c14 + 8.0 * k * L2 * c13 * c22
      + 4.0 * k * L2 * c13 * c2 + 4.0 * k * L2 * c13 * s22 + 4.0 * k * L2 * c13
      + 8.0 * k * L2 * c12 * c24 + 8.0 * k * L2 * c12 * c23 + 16.0 * k * L2 * c12 * s12 * c22
      + 16.0 * k * L2 * c12 * c22 * s22 + 20.0 * k * L2 * c12 * c22
      + 16.0 * k * L2 * c12 * s12 * c2 - 4.0 * k * L2 * c12 * s1 * c2 * s2
      + 8.0 * k * L2 * c12 * c2 * s22 + 12.0 * k * L2 * c12 * c2
      + 8.0 * k * L2 * c12 * s12 * s22 + 12.0 * k * L2 * c12 * s12
      - 4.0 * k * L2 * c12 * s1 * s2 + 8.0 * k * L2 * c12 * s24 + 16.0 * k * L2 * c12 * s22
      + 12.0 * k * L2 * c12 + 8.0 * k * L2 * c1 * c24 + 4.0 * k * L2 * c1 * c23
      + 8.0 * k * L2 * c1 * s12 * c22 - 4.0 * k * L2 * c1 * s1 * c22 * s2
      + 16.0 * k * L2 * c1 * c22 * s22 + 12.0 * k * L2 * c1 * c22 + 4.0 * k * L2 * c1 * s12 * c2
      - 4.0 * k * L2 * c1 * s1 * c2 * s2 + 4.0 * k * L2 * c1 * c2 * s22 + 4.0 * k * L2 * c1 * c2
      + 4.0 * k * L2 * c1 * s12 * s22 + 4.0 * k * L2 * c1 * s12 - 4.0 * k * L2 * c1 * s1 * s23
      - 4.0 * k * L2 * c1 * s1 * s2 + 8.0 * k * L2 * c1 * s24 + 12.0 * k * L2 * c1 * s22
      + 4.0 * k * L2 * c1 + 4.0 * k * L2 * s12 * c24 + 6.0 * k * L2 * c24
      + 4.0 * k * L2 * s12 * c23 + 4.0 * k * L2 * c23 + 8.0 * k * L2 * s14 * c22
      + 8.0 * k * L2 * s12 * c22 * s22 + 16.0 * k * L2 * s12 * c22
      - 4.0 * k * L2 * s1 * c22 * s2 + 12.0 * k * L2 * c22 * s22 + 12.0 * k * L2 * c22
      + 8.0 * k * L2 * s14 * c2 - 4.0 * k * L2 * s13 * c2 * s2 + 4.0 * k * L2 * s12 * c2 * s22
      + 12.0 * k * L2 * s12 * c2 - 4.0 * k * L2 * s1 * c2 * s2 + 4.0 * k * L2 * c2 * s22
      + 4.0 * k * L2 * c2 + 4.0 * k * L2 * s14 * s22 + 6.0 * k * L2 * s14
      - 4.0 * k * L2 * s13 * s2 + 4.0 * k * L2 * s12 * s24 + 14.0 * k * L2 * s12 * s22
      + 12.0 * k * L2 * s12 - 4.0 * k * L2 * s1 * s23 - 8.0 * k * L2 * s1 * s2
      + 6.0 * k * L2 * s24 + 12.0 * k * L2 * s22 + 6.0 * k * L2;
  return sum;
}

inline double den3_11(const TrigShape& t, double L, double k) {
  return den2_11(t, L, k);
}

inline double den1_21(const TrigShape& t, double L, double k) {
  return den2_11(t, L, k);
}

inline double den3_21(const TrigShape& t, double L, double k) {
  return den2_11(t, L, k);
}

inline double den1_22(const TrigShape& t, double L, double k) {
  return den2_11(t, L, k);
}

inline double den2_22(const TrigShape& t, double L, double k) {
  return den1_12(t, L, k);
}

inline double den3_22(const TrigShape& t, double L, double k) {
  return den3_12(t, L, k);
}

}  // namespace purcell::closed_form::detail
