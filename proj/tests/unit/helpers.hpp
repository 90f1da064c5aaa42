#pragma once
// Shared fixtures for the unit tests. Include after doctest.h: the error
// helper expands doctest assertion macros.

#include <initializer_list>
#include <utility>
#include <vector>

#include "curvemod/algebra.hpp"
#include "curvemod/betti.hpp"
#include "curvemod/errors.hpp"
#include "curvemod/series.hpp"

namespace curvemod::testing {

inline BettiPair::DegreeMap degree_map(
    std::initializer_list<std::pair<long long, long long>> entries) {
  BettiPair::DegreeMap map;
  for (const auto& [degree, count] : entries) map[degree] = count;
  return map;
}

inline BettiPair make_betti(
    std::initializer_list<std::pair<long long, long long>> generators,
    std::initializer_list<std::pair<long long, long long>> relations) {
  return BettiPair(degree_map(generators), degree_map(relations));
}

inline LaurentPoly poly(long long offset, std::initializer_list<long long> coeffs) {
  std::vector<Int> wide;
  for (long long c : coeffs) wide.emplace_back(c);
  return LaurentPoly(offset, wide);
}

inline std::vector<Int> ints(std::initializer_list<long long> values) {
  std::vector<Int> wide;
  for (long long v : values) wide.emplace_back(v);
  return wide;
}

// Asserts fn() throws an Error carrying exactly the given code.
template <typename Fn>
void check_throws_code(Fn&& fn, ErrorCode code) {
  try {
    fn();
    FAIL_CHECK("expected an error with code " << error_code_name(code));
  } catch (const Error& e) {
    CHECK_MESSAGE(e.code() == code,
                  "expected " << error_code_name(code) << ", got "
                              << error_code_name(e.code()) << ": " << e.what());
  }
}

}  // namespace curvemod::testing
