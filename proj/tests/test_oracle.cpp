#include <cmath>

#include <catch_amalgamated.hpp>

#include "purcell/closed_form.hpp"
#include "purcell/detail/rng.hpp"

using namespace purcell;
using purcell::closed_form::detail::TrigShape;

namespace {

TrigShape trig(double a1, double a2) {
  return {std::cos(a1), std::sin(a1), std::cos(a2), std::sin(a2)};
}

}  // namespace

TEST_CASE("closed forms at the collinear shape match the hand solve") {
  const ConnectionLocalForm A = oracle_connection({0, 0}, {1, 1});
  const double expected[3][2] = {
      {0.0, 0.0}, {-1.0 / 3.0, -1.0 / 3.0}, {7.0 / 27.0, -7.0 / 27.0}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK(A.a[r][c] == Catch::Approx(expected[r][c]).margin(1e-14));
}

TEST_CASE("entry 11 numerators all vanish at the collinear shape") {
  const OracleEntryBreakdown b = oracle_entry(11, {0, 0}, {1, 1});
  for (const auto& [num, den] : b.terms) {
    CHECK(num == 0.0);
    CHECK(den != 0.0);
  }
  CHECK(b.total == 0.0);
}

TEST_CASE("entry 31 breakdown at the collinear shape (regression anchors)") {
  const OracleEntryBreakdown b = oracle_entry(31, {0, 0}, {1, 1});
  // first term: prefactor (2/3 + 4)kL^3 = 14/3 times a trig sum of 18
  CHECK(b.terms[0].first == Catch::Approx(84.0).margin(1e-12));
  CHECK(b.terms[0].second == Catch::Approx(324.0).margin(1e-12));
  CHECK(b.terms[1].first == Catch::Approx(0.0).margin(1e-15));
  CHECK(b.terms[1].second == Catch::Approx(81.0).margin(1e-12));
  CHECK(b.terms[2].first == Catch::Approx(0.0).margin(1e-15));
  CHECK(b.terms[2].second == Catch::Approx(162.0).margin(1e-12));
  CHECK(b.total == Catch::Approx(7.0 / 27.0).epsilon(1e-14));
}

TEST_CASE("entry breakdown totals equal the assembled matrix") {
  purcell::detail::SplitMix64 rng(73);
  static constexpr int kLabels[3][2] = {{11, 12}, {21, 22}, {31, 32}};
  for (int i = 0; i < 20; ++i) {
    const ShapeState s{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const ConnectionLocalForm A = oracle_connection(s, {1, 1});
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 2; ++c)
        CHECK(oracle_entry(kLabels[r][c], s, {1, 1}).total == A.a[r][c]);
  }
}

TEST_CASE("unknown entry labels are rejected") {
  CHECK_THROWS_AS(oracle_entry(99, {0, 0}, {1, 1}), UnknownEntryLabel);
  CHECK_THROWS_AS(oracle_entry(13, {0, 0}, {1, 1}), UnknownEntryLabel);
}

TEST_CASE("aliased denominators share a code path, hence bits") {
  using namespace purcell::closed_form::detail;
  purcell::detail::SplitMix64 rng(79);
  for (int i = 0; i < 50; ++i) {
    const TrigShape t = trig(rng.uniform(-3, 3), rng.uniform(-3, 3));
    const double L = rng.uniform(0.5, 2.0), k = rng.uniform(0.5, 2.0);
    CHECK(den3_11(t, L, k) == den2_11(t, L, k));
    CHECK(den1_21(t, L, k) == den2_11(t, L, k));
    CHECK(den3_21(t, L, k) == den2_11(t, L, k));
    CHECK(den1_22(t, L, k) == den2_11(t, L, k));
    CHECK(den2_22(t, L, k) == den1_12(t, L, k));
    CHECK(den3_22(t, L, k) == den3_12(t, L, k));
  }
}

TEST_CASE("every term ratio is 2pi-periodic") {
  purcell::detail::SplitMix64 rng(83);
  static constexpr int kEntries[6] = {11, 12, 21, 22, 31, 32};
  for (int i = 0; i < 20; ++i) {
    const ShapeState s{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const ShapeState sp{s.alpha1 + 2.0 * kPi, s.alpha2 - 2.0 * kPi};
    for (int jk : kEntries) {
      const OracleEntryBreakdown a = oracle_entry(jk, s, {1, 1});
      const OracleEntryBreakdown b = oracle_entry(jk, sp, {1, 1});
      for (int t = 0; t < 3; ++t) {
        const double ra = a.terms[t].first / a.terms[t].second;
        const double rb = b.terms[t].first / b.terms[t].second;
        CHECK(std::abs(ra - rb) <= 1e-12 * (1.0 + std::abs(ra)));
      }
    }
  }
}

TEST_CASE("homogeneity audit: every term scales by its printed L,k powers") {
  using namespace purcell::closed_form::detail;
  // expected L exponents, printed: numerators first, then denominators
  struct Row {
    double (*fn)(const TrigShape&, double, double);
    int lpow;
  };
  const Row rows[] = {
      {num1_11, 3}, {num2_11, 2}, {num3_11, 2}, {den1_11, 2}, {den2_11, 1},
      {num1_12, 3}, {num2_12, 2}, {num3_12, 2}, {den1_12, 2}, {den3_12, 1},
      {num1_21, 2}, {num2_21, 3}, {num3_21, 2}, {den2_21, 2},
      {num1_22, 2}, {num2_22, 3}, {num3_22, 2},
      {num1_31, 3}, {num2_31, 2}, {num3_31, 2}, {den1_31, 3}, {den2_31, 2},
      {den3_31, 2},
      {num1_32, 2}, {num2_32, 3}, {num3_32, 2}, {den1_32, 2}, {den2_32, 3},
      {den3_32, 2},
  };
  const TrigShape t = trig(0.9, -0.6);
  for (const Row& r : rows) {
    const double base = r.fn(t, 1.0, 1.0);
    const double scaled = r.fn(t, 2.0, 3.0);
    REQUIRE(base != 0.0);
    const double expect = 3.0 * std::pow(2.0, r.lpow) * base;
    CHECK(scaled == Catch::Approx(expect).epsilon(1e-13));
  }
}

TEST_CASE("closed forms equal the numeric pipeline at random shapes") {
  purcell::detail::SplitMix64 rng(0);
  const double lim = 3.0 * kPi / 4.0;
  for (int i = 0; i < 200; ++i) {
    const ShapeState s{rng.uniform(-lim, lim), rng.uniform(-lim, lim)};
    const ConnectionLocalForm ref = oracle_connection(s, {1, 1});
    const ConnectionLocalForm num =
        local_connection(s, {1, 1}, DragMode::Corrected, GeometryVariant::Derived);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 2; ++c)
        CHECK(std::abs(num.a[r][c] - ref.a[r][c]) <=
              1e-9 * (1.0 + std::abs(ref.a[r][c])));
  }
}

TEST_CASE("agreement also holds away from L = k = 1") {
  purcell::detail::SplitMix64 rng(5);
  const SwimmerParams p{2.0, 3.0};
  for (int i = 0; i < 50; ++i) {
    const ShapeState s{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const ConnectionLocalForm ref = oracle_connection(s, p);
    const ConnectionLocalForm num =
        local_connection(s, p, DragMode::Corrected, GeometryVariant::Derived);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 2; ++c)
        CHECK(std::abs(num.a[r][c] - ref.a[r][c]) <=
              1e-9 * (1.0 + std::abs(ref.a[r][c])));
  }
}

TEST_CASE("spot values frozen from an independent implementation") {
  // computed with a separately written evaluator of the same closed forms
  const ConnectionLocalForm a = oracle_connection({0.7, -1.3}, {1, 1});
  const double expected[3][2] = {
      {-0.29522452905774527, -0.39713419161268226},
      {-0.17842462493757089, -0.13300604036004457},
      {0.3164774768679426, -0.2535547812251162}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c)
      CHECK(a.a[r][c] == Catch::Approx(expected[r][c]).margin(1e-12));

  const ConnectionLocalForm b = oracle_connection({kPi / 2.0, kPi / 2.0}, {1, 1});
  CHECK(b.a[0][0] == Catch::Approx(-2.0 / 9.0).epsilon(1e-13));
  CHECK(b.a[0][1] == Catch::Approx(2.0 / 9.0).epsilon(1e-13));
  CHECK(b.a[1][0] == Catch::Approx(0.0).margin(1e-14));
  CHECK(b.a[1][1] == Catch::Approx(0.0).margin(1e-14));
  CHECK(b.a[2][0] == Catch::Approx(2.0 / 9.0).epsilon(1e-13));
  CHECK(b.a[2][1] == Catch::Approx(-2.0 / 9.0).epsilon(1e-13));
}

TEST_CASE("alternate readings of the defective entries disagree visibly") {
  purcell::detail::SplitMix64 rng(89);
  double worst_d212 = 0.0, worst_noswap = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ShapeState s{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const ConnectionLocalForm num =
        local_connection(s, {1, 1}, DragMode::Corrected, GeometryVariant::Derived);

    OracleOptions alt;
    alt.d212 = D212Reading::Entry12Third;
    const ConnectionLocalForm oa = oracle_connection(s, {1, 1}, alt);
    OracleOptions noswap;
    noswap.swap_offdiagonal = false;
    const ConnectionLocalForm on = oracle_connection(s, {1, 1}, noswap);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 2; ++c) {
        worst_d212 = std::max(worst_d212, std::abs(num.a[r][c] - oa.a[r][c]));
        worst_noswap = std::max(worst_noswap, std::abs(num.a[r][c] - on.a[r][c]));
      }
  }
  CHECK(worst_d212 > 1e-3);
  CHECK(worst_noswap > 1e-2);
}

TEST_CASE("vanishing denominators raise a typed error") {
  CHECK_THROWS_AS(oracle_connection({0, 0}, {0.0, 1.0}), OracleDenominatorZero);
}
