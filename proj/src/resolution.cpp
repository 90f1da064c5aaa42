// Series, dimension, multiplicity, and generic presentation shapes read off
// a Betti pair's characteristic polynomial.
#include "curvemod/resolution.hpp"

#include <cassert>
#include <utility>

#include "curvemod/conditions.hpp"
#include "curvemod/errors.hpp"

namespace curvemod {

namespace {

// 1/(1-t)^3 for the quadratic kind, 1/((1-t)^2 (1-t^2)) for the cubic one,
// as the expanded denominator polynomial.
LaurentPoly ambient_denominator(const AlgebraParams& params) {
  std::vector<Int> coeffs =
      params.is_cubic() ? std::vector<Int>{1, -2, 0, 2, -1}
                        : std::vector<Int>{1, -3, 3, -1};
  return LaurentPoly(0, std::move(coeffs));
}

}  // namespace

IntSeries ambient_hilbert_series(const AlgebraParams& params,
                                 long long n_terms) {
  return IntSeries::inverse_of(ambient_denominator(params), n_terms);
}

LaurentPoly char_poly(const BettiPair& betti) {
  if (betti.empty()) return LaurentPoly();
  const long long lo = betti.min_degree();
  const long long hi = betti.max_degree();
  std::vector<Int> coeffs(static_cast<std::size_t>(hi - lo + 1), Int(0));
  for (const auto& [d, c] : betti.generators())
    coeffs[static_cast<std::size_t>(d - lo)] += c;
  for (const auto& [d, c] : betti.relations())
    coeffs[static_cast<std::size_t>(d - lo)] -= c;
  return LaurentPoly(lo, std::move(coeffs));
}

LaurentPoly p_poly(const LaurentPoly& q) { return q.quotient_by_one_minus_t(); }

IntSeries series_from_resolution(const AlgebraParams& params,
                                 const BettiPair& betti, long long n_terms) {
  return ambient_hilbert_series(params, n_terms).times(char_poly(betti));
}

GkResult gk_and_multiplicity(const AlgebraParams& params,
                             const LaurentPoly& q) {
  if (q.is_zero())
    fail(ErrorCode::InvalidArgument,
         "the characteristic polynomial of a nonzero module is nonzero");
  LaurentPoly r = q;
  int k = 0;
  while (r.sum_of_coeffs() == 0) {
    r = r.quotient_by_one_minus_t();
    ++k;
  }
  GkResult out;
  out.gk_dim = 3 - k;
  Int r1 = r.sum_of_coeffs();
  out.multiplicity = Rational(r1, Int(params.multiplicity_scale));
  if (out.gk_dim == 2) out.epsilon = r1;
  return out;
}

ShapeGrid generic_shape(const BettiPair& betti, ShapeMode mode) {
  // The gate is the kind-independent core of the conditions; running the
  // checker over the quadratic kind realizes exactly that core.
  const AlgebraParams core = AlgebraParams::quadratic();
  const bool ok = mode == ShapeMode::CohenMacaulay
                      ? check_cm(core, betti, CheckForm::Ladder)
                      : check_critical(core, betti, CheckForm::Ladder);
  if (!ok)
    fail(ErrorCode::ShapeUnavailable,
         mode == ShapeMode::CohenMacaulay
             ? "the pair fails the staircase conditions, so no generic "
               "presentation shape exists"
             : "the pair fails the strict staircase conditions, so no "
               "generic presentation shape exists");

  DegreeMatrix dm = degree_matrix(betti);
  ShapeGrid grid;
  grid.rows = dm.rows;
  grid.cols = dm.cols;
  grid.cells.resize(dm.entries.size(), 0);
  for (long long r = 1; r <= grid.rows; ++r)
    for (long long c = 1; c <= grid.cols; ++c) {
      const long long entry = dm.at(r, c);
      bool keep = false;
      switch (mode) {
        case ShapeMode::CohenMacaulay:
        case ShapeMode::Critical:
          keep = entry >= 1;
          break;
        case ShapeMode::Bordered:
          keep = r == 1 || r == c + 1 || c == grid.cols;
          break;
      }
      if (keep) {
        assert(entry >= 1);  // guaranteed by the gate on the kept pattern
        grid.cells[static_cast<std::size_t>((r - 1) * grid.cols + (c - 1))] =
            entry;
      }
    }
  return grid;
}

std::string shape_mode_name(ShapeMode mode) {
  switch (mode) {
    case ShapeMode::CohenMacaulay:
      return "cm";
    case ShapeMode::Critical:
      return "critical";
    case ShapeMode::Bordered:
      return "bordered";
  }
  return "cm";
}

ShapeMode shape_mode_from_name(const std::string& name) {
  if (name == "cm") return ShapeMode::CohenMacaulay;
  if (name == "critical") return ShapeMode::Critical;
  if (name == "bordered") return ShapeMode::Bordered;
  fail(ErrorCode::InvalidArgument,
       "unknown shape mode \"" + name + "\" (expected cm, critical, or bordered)");
}

}  // namespace curvemod
