#pragma once
// Exact Laurent polynomials and truncated integer power series.
//
// An IntSeries carries an explicit truncation order: coefficients at
// exponents >= trunc_order are *unknown*, not zero, and reading one throws.
// This turns truncation bugs into errors instead of silent zeros. Exponents
// below the stored range are known to be zero.

#include <cstdint>
#include <string>
#include <vector>

#include "curvemod/algebra.hpp"

namespace curvemod {

// Finitely supported integer Laurent polynomial, stored densely from its
// lowest exponent. Canonical: first and last stored coefficients are nonzero
// unless the polynomial is zero (empty coefficient list).
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero polynomial
  LaurentPoly(long long offset, std::vector<Int> coeffs);

  static LaurentPoly constant(Int value);
  static LaurentPoly monomial(Int coeff, long long exponent);
  static LaurentPoly one_minus_t();

  bool is_zero() const { return coeffs_.empty(); }
  // Lowest/highest exponent with nonzero coefficient; 0 for the zero poly.
  long long min_exp() const { return coeffs_.empty() ? 0 : offset_; }
  long long max_exp() const {
    return coeffs_.empty() ? 0
                           : offset_ + static_cast<long long>(coeffs_.size()) - 1;
  }
  Int coeff(long long exponent) const;
  long long offset() const { return offset_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly shifted(long long by) const;  // multiply by t^by

  Int sum_of_coeffs() const;      // value at t = 1
  Int derivative_at_one() const;  // sum of exponent * coefficient

  // Exact quotient by (1 - t); throws NotDivisible when the value at t = 1
  // is nonzero (equivalently, when division leaves a remainder).
  LaurentPoly quotient_by_one_minus_t() const;

  // Human-readable form, e.g. "t + 2t^2 - t^3" or "0".
  std::string to_string() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void canonicalize();

  long long offset_ = 0;
  std::vector<Int> coeffs_;
};

// Truncated integer power/Laurent series. Coefficients are stored densely
// from offset(); exponents in [offset + stored size, trunc_order) are known
// zeros; exponents >= trunc_order are unknown.
class IntSeries {
 public:
  // The zero series, known zero on (-inf, trunc_order).
  static IntSeries zero(long long trunc_order);

  IntSeries(long long offset, std::vector<Int> coeffs, long long trunc_order);

  long long offset() const { return offset_; }
  long long trunc_order() const { return trunc_order_; }
  bool known_zero() const { return coeffs_.empty(); }
  // Number of known coefficients starting at offset().
  long long known_count() const { return trunc_order_ - offset_; }

  // Throws TruncationExceeded for exponent >= trunc_order.
  Int coeff(long long exponent) const;

  // The first `count` known coefficients from offset(); throws
  // InsufficientTruncation when fewer are known.
  std::vector<Int> known_prefix(long long count) const;

  IntSeries operator+(const IntSeries& other) const;
  IntSeries operator-(const IntSeries& other) const;

  // Multiply by an exact polynomial. The product is known up to
  // trunc_order() + factor.min_exp().
  IntSeries times(const LaurentPoly& factor) const;

  // Reciprocal series of a polynomial with constant term 1 (offset 0),
  // truncated to n_terms coefficients.
  static IntSeries inverse_of(const LaurentPoly& denom, long long n_terms);

  // Same series with a smaller truncation order.
  IntSeries restricted(long long new_trunc_order) const;

  friend bool operator==(const IntSeries&, const IntSeries&) = default;

 private:
  void canonicalize();

  long long offset_ = 0;
  std::vector<Int> coeffs_;
  long long trunc_order_ = 0;
};

// Default truncation order used when a caller does not specify one.
inline constexpr long long kDefaultTruncOrder = 32;

}  // namespace curvemod
