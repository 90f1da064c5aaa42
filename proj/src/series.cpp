// Exact Laurent-polynomial and truncated-series arithmetic.
#include "curvemod/series.hpp"

#include <algorithm>
#include <sstream>

#include "curvemod/errors.hpp"

namespace curvemod {

namespace {

// Shared term renderer: coefficient 1 on a positive power prints bare.
void append_term(std::ostringstream& out, bool first, const Int& coeff,
                 long long exponent) {
  Int abs = coeff < 0 ? Int(-coeff) : coeff;
  if (first) {
    if (coeff < 0) out << "-";
  } else {
    out << (coeff < 0 ? " - " : " + ");
  }
  if (exponent == 0) {
    out << abs;
    return;
  }
  if (abs != 1) out << abs;
  out << "t";
  if (exponent != 1) out << "^" << exponent;
}

}  // namespace

// ----------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long long offset, std::vector<Int> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
  canonicalize();
}

void LaurentPoly::canonicalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    offset_ = 0;
    return;
  }
  std::size_t tail = coeffs_.size();
  while (tail > lead && coeffs_[tail - 1] == 0) --tail;
  coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(tail), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  offset_ += static_cast<long long>(lead);
}

LaurentPoly LaurentPoly::constant(Int value) {
  return LaurentPoly(0, {std::move(value)});
}

LaurentPoly LaurentPoly::monomial(Int coeff, long long exponent) {
  return LaurentPoly(exponent, {std::move(coeff)});
}

LaurentPoly LaurentPoly::one_minus_t() { return LaurentPoly(0, {Int(1), Int(-1)}); }

Int LaurentPoly::coeff(long long exponent) const {
  if (coeffs_.empty() || exponent < offset_ ||
      exponent >= offset_ + static_cast<long long>(coeffs_.size()))
    return 0;
  return coeffs_[static_cast<std::size_t>(exponent - offset_)];
}

LaurentPoly LaurentPoly::operator-() const {
  std::vector<Int> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return LaurentPoly(offset_, std::move(out));
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  long long lo = std::min(min_exp(), other.min_exp());
  long long hi = std::max(max_exp(), other.max_exp());
  std::vector<Int> out(static_cast<std::size_t>(hi - lo + 1));
  for (long long e = lo; e <= hi; ++e)
    out[static_cast<std::size_t>(e - lo)] = coeff(e) + other.coeff(e);
  return LaurentPoly(lo, std::move(out));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  return *this + (-other);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  if (is_zero() || other.is_zero()) return LaurentPoly();
  std::vector<Int> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return LaurentPoly(offset_ + other.offset_, std::move(out));
}

LaurentPoly LaurentPoly::shifted(long long by) const {
  if (is_zero()) return LaurentPoly();
  return LaurentPoly(offset_ + by, coeffs_);
}

Int LaurentPoly::sum_of_coeffs() const {
  Int total = 0;
  for (const Int& c : coeffs_) total += c;
  return total;
}

Int LaurentPoly::derivative_at_one() const {
  Int total = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    total += coeffs_[i] * (offset_ + static_cast<long long>(i));
  return total;
}

LaurentPoly LaurentPoly::quotient_by_one_minus_t() const {
  if (is_zero()) return LaurentPoly();
  if (sum_of_coeffs() != 0)
    fail(ErrorCode::NotDivisible,
         "polynomial is not divisible by 1 - t (value at t = 1 is nonzero)");
  // q = p (1 - t) means the quotient's coefficients are q's prefix sums.
  std::vector<Int> out(coeffs_.size() - 1);
  Int running = 0;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    running += coeffs_[i];
    out[i] = running;
  }
  return LaurentPoly(offset_, std::move(out));
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    append_term(out, first, coeffs_[i], offset_ + static_cast<long long>(i));
    first = false;
  }
  return out.str();
}

// ------------------------------------------------------------------- IntSeries

IntSeries IntSeries::zero(long long trunc_order) {
  return IntSeries(0, {}, trunc_order);
}

IntSeries::IntSeries(long long offset, std::vector<Int> coeffs,
                     long long trunc_order)
    : offset_(offset), coeffs_(std::move(coeffs)), trunc_order_(trunc_order) {
  if (offset_ + static_cast<long long>(coeffs_.size()) > trunc_order_)
    fail(ErrorCode::InvalidArgument,
         "stored series coefficients extend past the truncation order");
  canonicalize();
}

void IntSeries::canonicalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  std::size_t tail = coeffs_.size();
  while (tail > lead && coeffs_[tail - 1] == 0) --tail;
  coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(tail), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  offset_ += static_cast<long long>(lead);
  if (coeffs_.empty()) offset_ = 0;
}

Int IntSeries::coeff(long long exponent) const {
  if (exponent >= trunc_order_)
    fail(ErrorCode::TruncationExceeded,
         "coefficient " + std::to_string(exponent) +
             " is at or beyond the truncation order " +
             std::to_string(trunc_order_));
  if (exponent < offset_ ||
      exponent >= offset_ + static_cast<long long>(coeffs_.size()))
    return 0;
  return coeffs_[static_cast<std::size_t>(exponent - offset_)];
}

std::vector<Int> IntSeries::known_prefix(long long count) const {
  if (count > known_count())
    fail(ErrorCode::InsufficientTruncation,
         "requested " + std::to_string(count) + " coefficients but only " +
             std::to_string(known_count()) + " are known");
  std::vector<Int> out(static_cast<std::size_t>(std::max<long long>(count, 0)));
  for (long long i = 0; i < count; ++i)
    if (i < static_cast<long long>(coeffs_.size()))
      out[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
  return out;
}

IntSeries IntSeries::operator+(const IntSeries& other) const {
  long long trunc = std::min(trunc_order_, other.trunc_order_);
  long long lo = std::min(known_zero() ? trunc : offset_,
                          other.known_zero() ? trunc : other.offset_);
  if (lo >= trunc) return IntSeries::zero(trunc);
  std::vector<Int> out(static_cast<std::size_t>(trunc - lo));
  for (long long e = lo; e < trunc; ++e)
    out[static_cast<std::size_t>(e - lo)] = coeff(e) + other.coeff(e);
  return IntSeries(lo, std::move(out), trunc);
}

IntSeries IntSeries::operator-(const IntSeries& other) const {
  long long trunc = std::min(trunc_order_, other.trunc_order_);
  long long lo = std::min(known_zero() ? trunc : offset_,
                          other.known_zero() ? trunc : other.offset_);
  if (lo >= trunc) return IntSeries::zero(trunc);
  std::vector<Int> out(static_cast<std::size_t>(trunc - lo));
  for (long long e = lo; e < trunc; ++e)
    out[static_cast<std::size_t>(e - lo)] = coeff(e) - other.coeff(e);
  return IntSeries(lo, std::move(out), trunc);
}

IntSeries IntSeries::times(const LaurentPoly& factor) const {
  if (factor.is_zero()) return IntSeries::zero(trunc_order_);
  long long trunc = trunc_order_ + factor.min_exp();
  if (known_zero()) return IntSeries::zero(trunc);
  long long lo = offset_ + factor.min_exp();
  if (lo >= trunc) return IntSeries::zero(trunc);
  std::vector<Int> out(static_cast<std::size_t>(trunc - lo));
  const std::vector<Int>& f = factor.coeffs();
  for (long long e = factor.min_exp(); e <= factor.max_exp(); ++e) {
    const Int& fc = f[static_cast<std::size_t>(e - factor.min_exp())];
    if (fc == 0) continue;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      long long target = offset_ + static_cast<long long>(i) + e;
      if (target >= trunc) break;
      out[static_cast<std::size_t>(target - lo)] += coeffs_[i] * fc;
    }
  }
  return IntSeries(lo, std::move(out), trunc);
}

IntSeries IntSeries::inverse_of(const LaurentPoly& denom, long long n_terms) {
  if (denom.is_zero() || denom.min_exp() != 0 || denom.coeff(0) != 1)
    fail(ErrorCode::InvalidArgument,
         "series inversion needs a denominator with constant term 1");
  std::vector<Int> out(static_cast<std::size_t>(std::max<long long>(n_terms, 0)));
  for (long long k = 0; k < n_terms; ++k) {
    Int value = k == 0 ? Int(1) : Int(0);
    for (long long j = 1; j <= std::min<long long>(k, denom.max_exp()); ++j)
      value -= denom.coeff(j) * out[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = std::move(value);
  }
  return IntSeries(0, std::move(out), n_terms);
}

IntSeries IntSeries::restricted(long long new_trunc_order) const {
  if (new_trunc_order > trunc_order_)
    fail(ErrorCode::InvalidArgument,
         "cannot extend a series' truncation order by restriction");
  if (known_zero() || offset_ >= new_trunc_order)
    return IntSeries::zero(new_trunc_order);
  std::vector<Int> out(coeffs_.begin(),
                       coeffs_.begin() +
                           static_cast<std::ptrdiff_t>(std::min<long long>(
                               static_cast<long long>(coeffs_.size()),
                               new_trunc_order - offset_)));
  return IntSeries(offset_, std::move(out), new_trunc_order);
}

}  // namespace curvemod
