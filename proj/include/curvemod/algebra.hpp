#pragma once
// The quadratic/cubic dichotomy and the integer constants attached to it:
// number of generators, the multiplicity scale (the integer that turns the
// leading multiplicity e into the integer invariant epsilon = scale * e), and
// the degree of the distinguished central element.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "curvemod/errors.hpp"

namespace curvemod {

// All coefficient arithmetic is exact. Counts and series coefficients use an
// arbitrary-width integer; multiplicities use an exact rational.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class AlgebraKind { Quadratic, Cubic };

struct AlgebraParams {
  AlgebraKind kind = AlgebraKind::Quadratic;
  int num_generators = 3;     // 3 (quadratic) or 2 (cubic)
  int multiplicity_scale = 1; // 4 - num_generators
  int central_degree = 3;     // multiplicity_scale * num_generators

  static AlgebraParams quadratic() {
    return AlgebraParams{AlgebraKind::Quadratic, 3, 1, 3};
  }
  static AlgebraParams cubic() {
    return AlgebraParams{AlgebraKind::Cubic, 2, 2, 4};
  }
  static AlgebraParams of(AlgebraKind kind) {
    return kind == AlgebraKind::Cubic ? cubic() : quadratic();
  }

  bool is_cubic() const { return kind == AlgebraKind::Cubic; }

  friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;
};

// "quadratic" / "cubic".
std::string kind_name(AlgebraKind kind);

// Inverse of kind_name; throws InvalidArgument on anything else.
AlgebraKind kind_from_name(const std::string& name);

}  // namespace curvemod
