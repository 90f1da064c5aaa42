// Characteristic polynomials, module series, dimension/multiplicity, and
// generic presentation-matrix shapes.
#include "doctest.h"

#include <random>

#include "curvemod/errors.hpp"
#include "curvemod/resolution.hpp"
#include "helpers.hpp"

using namespace curvemod;
using curvemod::testing::ints;
using curvemod::testing::make_betti;
using curvemod::testing::poly;

namespace {
const AlgebraParams kQuad = AlgebraParams::quadratic();
const AlgebraParams kCubic = AlgebraParams::cubic();
}  // namespace

TEST_CASE("characteristic polynomial subtracts relation counts") {
  CHECK(char_poly(make_betti({{1, 1}, {2, 1}, {7, 1}}, {{3, 1}, {7, 1}, {8, 1}})) ==
        poly(1, {1, 1, -1, 0, 0, 0, 0, -1}));
  CHECK(char_poly(make_betti({{0, 1}}, {{1, 1}})) == poly(0, {1, -1}));
  CHECK(char_poly(make_betti({{0, 2}}, {{2, 2}})) == poly(0, {2, 0, -2}));
  CHECK(char_poly(make_betti({{0, 1}}, {{0, 1}})).is_zero());
  CHECK(char_poly(BettiPair()).is_zero());
}

TEST_CASE("smoothed polynomial divides out 1 - t") {
  CHECK(p_poly(poly(1, {1, 1, -1, 0, 0, 0, 0, -1})) ==
        poly(1, {1, 2, 1, 1, 1, 1, 1}));
  CHECK(p_poly(poly(0, {1, -1})) == poly(0, {1}));
  CHECK(p_poly(poly(0, {2, 0, -2})) == poly(0, {2, 2}));
  CHECK_THROWS_AS(p_poly(poly(0, {1})), Error);
}

TEST_CASE("module series from a resolution") {
  CHECK(series_from_resolution(kQuad, make_betti({{0, 1}}, {{3, 1}}), 5)
            .known_prefix(5) == ints({1, 3, 6, 9, 12}));
  CHECK(series_from_resolution(kCubic, make_betti({{0, 1}}, {{1, 1}}), 6)
            .known_prefix(6) == ints({1, 1, 2, 2, 3, 3}));
  CHECK(series_from_resolution(kQuad, make_betti({{0, 2}}, {{1, 2}}), 6)
            .known_prefix(6) == ints({2, 4, 6, 8, 10, 12}));
}

TEST_CASE("module series is the ambient series convolved with the characteristic polynomial") {
  std::mt19937_64 rng(20240819);
  std::uniform_int_distribution<long long> deg(0, 5);
  std::uniform_int_distribution<long long> cnt(1, 3);
  std::uniform_int_distribution<int> entries(1, 3);
  for (int iter = 0; iter < 500; ++iter) {
    BettiPair::DegreeMap a, b;
    for (int i = entries(rng); i > 0; --i) a[deg(rng)] += cnt(rng);
    for (int i = entries(rng); i > 0; --i) b[deg(rng)] += cnt(rng);
    BettiPair pair(a, b);
    for (const AlgebraParams& params : {kQuad, kCubic}) {
      IntSeries via_op = series_from_resolution(params, pair, 12);
      LaurentPoly q = char_poly(pair);
      IntSeries via_conv =
          ambient_hilbert_series(params, 12).times(q).restricted(
              via_op.trunc_order());
      CHECK(via_op == via_conv);
    }
  }
}

TEST_CASE("dimension and multiplicity from the characteristic polynomial") {
  SUBCASE("dimension-two module with spread twists") {
    GkResult r = gk_and_multiplicity(kQuad, poly(1, {1, 1, -1, 0, 0, 0, 0, -1}));
    CHECK(r.gk_dim == 2);
    CHECK(r.multiplicity == Rational(8));
    REQUIRE(r.epsilon.has_value());
    CHECK(*r.epsilon == 8);
  }
  SUBCASE("two-generator kind halves the multiplicity") {
    GkResult r = gk_and_multiplicity(kCubic, poly(0, {1, 0, 0, 0, -1}));  // 1 - t^4
    CHECK(r.gk_dim == 2);
    CHECK(r.multiplicity == Rational(2));
    REQUIRE(r.epsilon.has_value());
    CHECK(*r.epsilon == 4);
  }
  SUBCASE("free module has dimension three") {
    GkResult rq = gk_and_multiplicity(kQuad, poly(0, {1}));
    CHECK(rq.gk_dim == 3);
    CHECK(rq.multiplicity == Rational(1));
    CHECK_FALSE(rq.epsilon.has_value());

    GkResult rc = gk_and_multiplicity(kCubic, poly(0, {1}));
    CHECK(rc.gk_dim == 3);
    CHECK(rc.multiplicity == Rational(1, 2));
    CHECK_FALSE(rc.epsilon.has_value());
  }
  SUBCASE("every extra root at t = 1 drops the dimension") {
    LaurentPoly step = poly(0, {1, -1});
    GkResult r2 = gk_and_multiplicity(kQuad, step);
    CHECK(r2.gk_dim == 2);
    CHECK(r2.multiplicity == Rational(1));
    GkResult r1 = gk_and_multiplicity(kQuad, step * step);
    CHECK(r1.gk_dim == 1);
    CHECK_FALSE(r1.epsilon.has_value());
    GkResult r0 = gk_and_multiplicity(kQuad, step * step * step);
    CHECK(r0.gk_dim == 0);
  }
}

TEST_CASE("generic shapes carry entry degrees") {
  SUBCASE("flat two-by-two pair, subdiagonal-inclusive mode") {
    ShapeGrid grid = generic_shape(make_betti({{0, 2}}, {{1, 2}}),
                                   ShapeMode::Critical);
    REQUIRE(grid.rows == 2);
    REQUIRE(grid.cols == 2);
    for (long long r = 1; r <= 2; ++r)
      for (long long c = 1; c <= 2; ++c) CHECK(grid.degree_at(r, c) == 1);
  }

  SUBCASE("spread pair forces a zero corner") {
    ShapeGrid grid = generic_shape(
        make_betti({{1, 1}, {2, 1}, {7, 1}}, {{3, 1}, {7, 1}, {8, 1}}),
        ShapeMode::CohenMacaulay);
    REQUIRE(grid.rows == 3);
    REQUIRE(grid.cols == 3);
    CHECK(grid.forced_zero(3, 1));
    CHECK(grid.forced_zero(3, 2));
    const long long expected[3][3] = {{2, 6, 7}, {1, 5, 6}, {0, 0, 1}};
    for (long long r = 1; r <= 3; ++r)
      for (long long c = 1; c <= 3; ++c)
        CHECK(grid.degree_at(r, c) == expected[r - 1][c - 1]);
  }

  SUBCASE("bordered pattern: first row, subdiagonal, last column") {
    ShapeGrid grid = generic_shape(make_betti({{0, 3}}, {{1, 3}}),
                                   ShapeMode::Bordered);
    REQUIRE(grid.rows == 3);
    REQUIRE(grid.cols == 3);
    CHECK(grid.forced_zero(2, 2));
    CHECK(grid.forced_zero(3, 1));
    for (long long c = 1; c <= 3; ++c) CHECK(grid.degree_at(1, c) == 1);
    CHECK(grid.degree_at(2, 1) == 1);
    CHECK(grid.degree_at(3, 2) == 1);
    CHECK(grid.degree_at(2, 3) == 1);
    CHECK(grid.degree_at(3, 3) == 1);
  }

  SUBCASE("rejected pairs have no shape") {
    CHECK_THROWS_AS(generic_shape(make_betti({{0, 1}}, {{0, 1}}),
                                  ShapeMode::CohenMacaulay),
                    Error);
    try {
      generic_shape(make_betti({{0, 1}}, {{0, 1}}), ShapeMode::Critical);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ShapeUnavailable);
    }
    // The spread pair fails the strict (subdiagonal) conditions, so the
    // subdiagonal-inclusive modes reject it even though the weak mode works.
    CHECK_THROWS_AS(
        generic_shape(make_betti({{1, 1}, {2, 1}, {7, 1}},
                                 {{3, 1}, {7, 1}, {8, 1}}),
                      ShapeMode::Critical),
        Error);
  }

  SUBCASE("the gate ignores the algebra kind") {
    // This pair is rejected by the cubic strict checker (all entries have
    // degree one), yet its generic shape is still well defined: the gate is
    // the kind-independent core of the conditions.
    ShapeGrid grid = generic_shape(make_betti({{0, 2}}, {{1, 2}}),
                                   ShapeMode::Bordered);
    CHECK(grid.rows == 2);
    CHECK_FALSE(grid.forced_zero(2, 1));
  }
}

TEST_CASE("shape mode names round trip") {
  for (ShapeMode mode : {ShapeMode::CohenMacaulay, ShapeMode::Critical,
                         ShapeMode::Bordered}) {
    CHECK(shape_mode_from_name(shape_mode_name(mode)) == mode);
  }
  CHECK_THROWS_AS(shape_mode_from_name("diagonal"), Error);
}
