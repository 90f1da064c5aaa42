#pragma once
// Invariants read off a resolution: characteristic polynomial, Hilbert
// series, dimension, multiplicity, and the qualitative shape of the
// presentation matrix.

#include <optional>
#include <string>
#include <vector>

#include "curvemod/algebra.hpp"
#include "curvemod/betti.hpp"
#include "curvemod/series.hpp"

namespace curvemod {

// Hilbert series of the algebra itself, to n_terms coefficients.
// Quadratic: 1 / (1-t)^3; cubic: 1 / ((1-t)^2 (1-t^2)).
IntSeries ambient_hilbert_series(const AlgebraParams& params, long long n_terms);

// Characteristic polynomial q(t) = sum_i (generators_i - relations_i) t^i.
LaurentPoly char_poly(const BettiPair& betti);

// p(t) with p(t) (1-t) = q(t); throws NotDivisible when q(1) != 0.
LaurentPoly p_poly(const LaurentPoly& q);

// Hilbert series of the module presented by the pair: ambient series times
// char_poly, truncated n_terms coefficients past the lowest exponent.
IntSeries series_from_resolution(const AlgebraParams& params,
                                 const BettiPair& betti, long long n_terms);

// Dimension and multiplicity data extracted from a nonzero characteristic
// polynomial. Writing q = (1-t)^k r with r(1) != 0: the dimension is 3 - k
// and the multiplicity is r(1) / multiplicity_scale, exactly.
struct GkResult {
  int gk_dim = 0;
  Rational multiplicity;
  // r(1) itself -- the normalized multiplicity the enumeration is graded
  // by -- reported only in dimension two.
  std::optional<Int> epsilon;
};

GkResult gk_and_multiplicity(const AlgebraParams& params, const LaurentPoly& q);

// Qualitative shape of a presentation matrix: which entries are forced zero
// and the degree of each potentially nonzero entry.
enum class ShapeMode {
  CohenMacaulay,  // staircase covering the upper triangle
  Critical,       // staircase covering the upper triangle plus subdiagonal
  Bordered,       // nonzero only on first row, subdiagonal, and last column
};

struct ShapeGrid {
  long long rows = 0;
  long long cols = 0;
  // 0 = forced zero; d >= 1 is a potentially nonzero entry of degree d.
  std::vector<long long> cells;

  long long degree_at(long long row, long long col) const {
    return cells.at(static_cast<std::size_t>((row - 1) * cols + (col - 1)));
  }
  bool forced_zero(long long row, long long col) const {
    return degree_at(row, col) == 0;
  }
};

// Shape of a generic presentation matrix for the pair under the given mode:
// entries carry their degree-matrix degree wherever that degree is >= 1
// (CohenMacaulay / Critical), or on the bordered pattern (first row,
// subdiagonal, last column) for Bordered, which additionally requires a
// square grid. Prerequisite: the pair passes the kind-independent core of
// the matching checker (the strict conditions for Critical and Bordered,
// the weak ones for CohenMacaulay). Throws ShapeUnavailable otherwise.
ShapeGrid generic_shape(const BettiPair& betti, ShapeMode mode);

std::string shape_mode_name(ShapeMode mode);
ShapeMode shape_mode_from_name(const std::string& name);  // throws InvalidArgument

}  // namespace curvemod
