// Exact Laurent-polynomial and truncated-series arithmetic.
#include "doctest.h"

#include <random>

#include "curvemod/errors.hpp"
#include "curvemod/series.hpp"
#include "helpers.hpp"

using namespace curvemod;
using curvemod::testing::ints;
using curvemod::testing::poly;

// ---------------------------------------------------------------- LaurentPoly

TEST_CASE("laurent polynomials canonicalize both ends") {
  LaurentPoly p(2, ints({0, 1, 0, 2, 0, 0}));
  CHECK(p.min_exp() == 3);
  CHECK(p.max_exp() == 5);
  CHECK(p.coeff(3) == 1);
  CHECK(p.coeff(4) == 0);
  CHECK(p.coeff(5) == 2);
  CHECK(p.coeff(2) == 0);
  CHECK(p.coeff(6) == 0);

  CHECK(LaurentPoly(5, {}).is_zero());
  CHECK(LaurentPoly(5, ints({0, 0})).is_zero());
  CHECK(LaurentPoly().is_zero());
  CHECK(LaurentPoly().min_exp() == 0);
  CHECK(LaurentPoly().max_exp() == 0);
}

TEST_CASE("laurent arithmetic") {
  const LaurentPoly one_minus_t = LaurentPoly::one_minus_t();
  CHECK(one_minus_t == poly(0, {1, -1}));

  SUBCASE("addition and subtraction cancel") {
    LaurentPoly p = poly(0, {1, 2, 3});
    LaurentPoly q = poly(1, {2, 3});
    CHECK(p - q == poly(0, {1}));
    CHECK(p + (-q) == poly(0, {1}));
    CHECK((p - p).is_zero());
  }

  SUBCASE("multiplication") {
    CHECK(poly(0, {1, 1}) * poly(0, {1, -1}) == poly(0, {1, 0, -1}));
    CHECK(poly(-2, {1}) * poly(3, {5}) == poly(1, {5}));
    CHECK((poly(0, {1, 2}) * LaurentPoly()).is_zero());
  }

  SUBCASE("shift") {
    CHECK(poly(0, {1, 2}).shifted(3) == poly(3, {1, 2}));
    CHECK(poly(2, {7}).shifted(-2) == poly(0, {7}));
  }

  SUBCASE("evaluation helpers") {
    LaurentPoly q = poly(1, {1, 1, -1, 0, 0, 0, 0, -1});  // t + t^2 - t^3 - t^8
    CHECK(q.sum_of_coeffs() == 0);
    CHECK(q.derivative_at_one() == -8);  // 1 + 2 - 3 - 8
  }
}

TEST_CASE("division by 1 - t") {
  // t + t^2 - t^3 - t^8 over 1 - t.
  LaurentPoly q = poly(1, {1, 1, -1, 0, 0, 0, 0, -1});
  LaurentPoly p = q.quotient_by_one_minus_t();
  CHECK(p == poly(1, {1, 2, 1, 1, 1, 1, 1}));

  CHECK(poly(0, {1, -1}).quotient_by_one_minus_t() == poly(0, {1}));
  CHECK(poly(0, {2, 0, -2}).quotient_by_one_minus_t() == poly(0, {2, 2}));
  CHECK(LaurentPoly().quotient_by_one_minus_t().is_zero());

  CHECK_THROWS_AS(poly(0, {1}).quotient_by_one_minus_t(), Error);
  try {
    poly(0, {1, 1}).quotient_by_one_minus_t();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDivisible);
  }
}

TEST_CASE("division roundtrip over random divisible inputs") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long long> coeff(-5, 5);
  std::uniform_int_distribution<long long> off(-3, 3);
  std::uniform_int_distribution<int> len(1, 8);
  for (int iter = 0; iter < 2000; ++iter) {
    std::vector<Int> cs;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) cs.emplace_back(coeff(rng));
    LaurentPoly p(off(rng), cs);
    LaurentPoly q = p * LaurentPoly::one_minus_t();
    CHECK(q.quotient_by_one_minus_t() == p);
  }
}

// ------------------------------------------------------------------ IntSeries

TEST_CASE("series truncation is explicit") {
  IntSeries s(0, ints({1, 3, 6}), 5);
  CHECK(s.offset() == 0);
  CHECK(s.trunc_order() == 5);
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(2) == 6);
  // Exponents between the stored prefix and the truncation order are known
  // zeros, not errors.
  CHECK(s.coeff(3) == 0);
  CHECK(s.coeff(4) == 0);
  CHECK(s.coeff(-7) == 0);
  CHECK_THROWS_AS(s.coeff(5), Error);
  try {
    s.coeff(6);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TruncationExceeded);
  }
}

TEST_CASE("series canonicalize away leading zeros") {
  IntSeries s(0, ints({0, 0, 2, 1}), 8);
  CHECK(s.offset() == 2);
  CHECK(s.coeff(0) == 0);
  CHECK(s.coeff(2) == 2);

  IntSeries z = IntSeries::zero(4);
  CHECK(z.trunc_order() == 4);
  CHECK(z.coeff(3) == 0);
  CHECK_THROWS_AS(z.coeff(4), Error);
}

TEST_CASE("series addition respects the weaker truncation") {
  IntSeries a(0, ints({1, 1, 1, 1}), 4);
  IntSeries b(0, ints({1, 2}), 6);
  IntSeries sum = a + b;
  CHECK(sum.trunc_order() == 4);
  CHECK(sum.coeff(0) == 2);
  CHECK(sum.coeff(1) == 3);
  CHECK(sum.coeff(2) == 1);
  CHECK_THROWS_AS(sum.coeff(4), Error);

  IntSeries diff = a - a;
  CHECK(diff.trunc_order() == 4);
  CHECK(diff.coeff(3) == 0);
}

TEST_CASE("series times polynomial extends truncation by the lowest exponent") {
  IntSeries s(0, ints({1, 1, 1, 1}), 4);  // 1/(1-t) to 4 terms
  SUBCASE("multiplying by a constant keeps the window") {
    IntSeries doubled = s.times(poly(0, {2}));
    CHECK(doubled.trunc_order() == 4);
    CHECK(doubled.coeff(3) == 2);
  }
  SUBCASE("multiplying by t^2 shifts the window out") {
    IntSeries shifted = s.times(poly(2, {1}));
    CHECK(shifted.trunc_order() == 6);
    CHECK(shifted.coeff(2) == 1);
    CHECK(shifted.coeff(5) == 1);
    CHECK_THROWS_AS(shifted.coeff(6), Error);
  }
  SUBCASE("telescoping against 1 - t") {
    IntSeries tele = s.times(LaurentPoly::one_minus_t());
    CHECK(tele.coeff(0) == 1);
    CHECK(tele.coeff(1) == 0);
    CHECK(tele.coeff(3) == 0);
  }
}

TEST_CASE("series inversion of unit-constant denominators") {
  IntSeries geo = IntSeries::inverse_of(poly(0, {1, -1}), 6);
  for (int i = 0; i < 6; ++i) CHECK(geo.coeff(i) == 1);

  IntSeries sq = IntSeries::inverse_of(poly(0, {1, -2, 1}), 6);  // 1/(1-t)^2
  for (int i = 0; i < 6; ++i) CHECK(sq.coeff(i) == i + 1);

  CHECK_THROWS_AS(IntSeries::inverse_of(poly(0, {2, 1}), 4), Error);
  CHECK_THROWS_AS(IntSeries::inverse_of(poly(1, {1}), 4), Error);
}

TEST_CASE("known prefix extraction guards against short windows") {
  IntSeries s(0, ints({1, 3, 6}), 5);
  auto prefix = s.known_prefix(5);
  REQUIRE(prefix.size() == 5);
  CHECK(prefix[0] == 1);
  CHECK(prefix[3] == 0);
  CHECK_THROWS_AS(s.known_prefix(6), Error);
  try {
    s.known_prefix(7);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientTruncation);
  }
}
