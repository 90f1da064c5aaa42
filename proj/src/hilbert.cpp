// Weight polynomials, the series <-> class bijection, enumeration and
// counting of classes and of Betti solutions, partitions, and tables.
#include "curvemod/hilbert.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>
#include <utility>

#include "curvemod/conditions.hpp"
#include "curvemod/errors.hpp"
#include "curvemod/resolution.hpp"

namespace curvemod {

namespace {

// epsilon > s_0 > s_1 > ... >= 0, ignoring any kind-specific clause.
bool strict_chain(long long epsilon, const std::vector<long long>& coeffs) {
  long long prev = epsilon;
  for (long long c : coeffs) {
    if (c >= prev) return false;
    prev = c;
  }
  return epsilon >= 1;
}

// The smoothed coefficients p_0, ..., p_{nu-1} of the class, where
// p(t) (1-t) = q(t): p_0 = epsilon - s_0 and p_l = s_{l-1} - s_l after.
std::vector<long long> smoothed_coeffs(long long epsilon, const SPoly& s) {
  const long long nu = s.is_zero() ? 1 : s.degree() + 2;
  std::vector<long long> p(static_cast<std::size_t>(nu));
  p[0] = epsilon - s.coeff(0);
  for (long long l = 1; l < nu; ++l)
    p[static_cast<std::size_t>(l)] = s.coeff(l - 1) - s.coeff(l);
  return p;
}

void render_series_term(std::ostringstream& out, const Int& coeff,
                        long long power) {
  if (power == 0) {
    out << coeff;
    return;
  }
  if (coeff != 1) out << coeff;
  out << "t";
  if (power > 1) out << "^" << power;
}

}  // namespace

// --- SPoly -------------------------------------------------------------------

SPoly::SPoly(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
  for (long long c : coeffs_)
    if (c < 0)
      fail(ErrorCode::InvalidSPoly,
           "weight coefficient " + std::to_string(c) + " is negative");
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long long SPoly::coeff(long long i) const {
  if (i < 0 || i >= static_cast<long long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

bool SPoly::cm_admissible(long long epsilon) const {
  long long prev = epsilon;
  bool first = true;
  for (long long c : coeffs_) {
    if (first ? c >= prev : c > prev) return false;
    first = false;
    prev = c;
  }
  return epsilon >= 1;
}

bool SPoly::critical_admissible(const AlgebraParams& params,
                                long long epsilon) const {
  if (!strict_chain(epsilon, coeffs_)) return false;
  if (params.is_cubic() && epsilon > 1 && is_zero()) return false;
  return true;
}

LaurentPoly SPoly::to_poly() const {
  std::vector<Int> wide(coeffs_.begin(), coeffs_.end());
  return LaurentPoly(0, std::move(wide));
}

std::string SPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    render_series_term(out, Int(coeffs_[i]), static_cast<long long>(i));
  }
  return out.str();
}

// --- series <-> class --------------------------------------------------------

LaurentPoly class_p_poly(long long epsilon, const SPoly& s) {
  std::vector<long long> p = smoothed_coeffs(epsilon, s);
  return LaurentPoly(0, std::vector<Int>(p.begin(), p.end()));
}

LaurentPoly class_q_poly(long long epsilon, const SPoly& s) {
  return class_p_poly(epsilon, s) * LaurentPoly::one_minus_t();
}

IntSeries s_to_hilbert(const HilbertClass& hc, long long n_terms) {
  if (!hc.s.cm_admissible(hc.epsilon))
    fail(ErrorCode::InvalidSPoly,
         "weight polynomial " + hc.s.to_string() +
             " is not admissible for epsilon = " + std::to_string(hc.epsilon));
  return ambient_hilbert_series(hc.params, n_terms)
      .times(class_q_poly(hc.epsilon, hc.s));
}

RecoveredClass hilbert_to_s(const AlgebraParams& params, const IntSeries& h) {
  if (h.known_count() < 8)
    fail(ErrorCode::InsufficientTruncation,
         "recovering a class needs at least 8 known coefficients, got " +
             std::to_string(h.known_count()));
  if (h.offset() != 0)
    fail(ErrorCode::NotInImage,
         "every class series starts with a positive constant term");

  // Multiply by the ambient denominator and smooth by 1/(1-t); for a class
  // series this reproduces p(t), whose coefficients are non-negative and
  // vanish past the weight polynomial.
  const std::vector<Int> denom = params.is_cubic()
                                     ? std::vector<Int>{1, -2, 0, 2, -1}
                                     : std::vector<Int>{1, -3, 3, -1};
  const long long T = h.trunc_order();
  std::vector<Int> pt(static_cast<std::size_t>(T));
  Int running = 0;
  for (long long k = 0; k < T; ++k) {
    Int qk = 0;
    for (std::size_t j = 0; j < denom.size(); ++j) {
      const long long i = k - static_cast<long long>(j);
      if (i < 0) break;
      qk += denom[j] * h.coeff(i);
    }
    running += qk;
    if (running < 0)
      fail(ErrorCode::NotInImage,
           "the smoothed coefficient at degree " + std::to_string(k) +
               " is negative");
    pt[static_cast<std::size_t>(k)] = running;
  }
  if (pt.back() != 0)
    fail(ErrorCode::InsufficientTruncation,
         "cannot certify the weight polynomial terminates within " +
             std::to_string(T) + " coefficients");

  Int eps_hat = 0;
  for (const Int& v : pt) eps_hat += v;
  if (eps_hat < 1)
    fail(ErrorCode::NotInImage, "the recovered multiplicity is not positive");
  if (eps_hat > Int(std::numeric_limits<long long>::max()))
    fail(ErrorCode::NotInImage,
         "the recovered multiplicity exceeds the representable range");

  // s_l is the tail sum of p past degree l; tails of a non-negative vector
  // are automatically weakly decreasing.
  std::vector<long long> s_coeffs(static_cast<std::size_t>(T - 1));
  Int tail = 0;
  for (long long l = T - 2; l >= 0; --l) {
    tail += pt[static_cast<std::size_t>(l + 1)];
    s_coeffs[static_cast<std::size_t>(l)] = tail.convert_to<long long>();
  }
  RecoveredClass rec;
  rec.epsilon = eps_hat.convert_to<long long>();
  rec.s = SPoly(std::move(s_coeffs));
  if (!rec.s.cm_admissible(rec.epsilon))
    fail(ErrorCode::NotInImage,
         "the recovered weight polynomial is not admissible");

  IntSeries expect = s_to_hilbert({params, rec.epsilon, rec.s}, T);
  if (expect.known_prefix(T) != h.known_prefix(T))
    fail(ErrorCode::NotInImage,
         "no admissible class reproduces the known prefix");
  return rec;
}

// --- enumeration and closed-form counts --------------------------------------

namespace {

void enumerate_s_into(const AlgebraParams& params, long long epsilon,
                      bool critical, long long max_degree,
                      std::vector<long long>& prefix,
                      std::vector<SPoly>& out) {
  const long long cap = prefix.empty()
                            ? epsilon - 1
                            : (critical ? prefix.back() - 1 : prefix.back());
  const bool may_extend =
      max_degree < 0 || static_cast<long long>(prefix.size()) <= max_degree;
  if (may_extend) {
    for (long long c = cap; c >= 1; --c) {
      prefix.push_back(c);
      enumerate_s_into(params, epsilon, critical, max_degree, prefix, out);
      prefix.pop_back();
    }
  }
  const bool skip_zero =
      critical && params.is_cubic() && epsilon > 1 && prefix.empty();
  if (!skip_zero) out.push_back(SPoly(prefix));
}

}  // namespace

std::vector<SPoly> enumerate_s(const AlgebraParams& params, long long epsilon,
                               bool critical, long long max_degree) {
  if (epsilon < 1)
    fail(ErrorCode::InvalidArgument,
         "epsilon must be at least 1, got " + std::to_string(epsilon));
  if (!critical && max_degree < 0)
    fail(ErrorCode::InvalidArgument,
         "the weakly-decreasing family is infinite: supply a degree bound");
  std::vector<SPoly> out;
  std::vector<long long> prefix;
  enumerate_s_into(params, epsilon, critical, max_degree, prefix, out);
  return out;
}

Int count_hilbert_closed(const AlgebraParams& params, long long epsilon) {
  if (epsilon < 1)
    fail(ErrorCode::InvalidArgument,
         "epsilon must be at least 1, got " + std::to_string(epsilon));
  Int count = Int(1) << static_cast<unsigned>(epsilon - 1);
  if (params.is_cubic() && epsilon > 1) count -= 1;
  return count;
}

namespace {

void require_mode_admissible(const AlgebraParams& params, long long epsilon,
                             const SPoly& s, bool critical) {
  const bool ok = critical ? s.critical_admissible(params, epsilon)
                           : s.cm_admissible(epsilon);
  if (!ok)
    fail(ErrorCode::InvalidSPoly,
         "weight polynomial " + s.to_string() +
             " is not admissible for epsilon = " + std::to_string(epsilon) +
             (critical ? " in critical mode" : ""));
}

}  // namespace

std::vector<BettiPair> enumerate_betti(const AlgebraParams& params,
                                       long long epsilon, const SPoly& s,
                                       bool critical) {
  require_mode_admissible(params, epsilon, s, critical);
  const std::vector<long long> p = smoothed_coeffs(epsilon, s);
  const long long nu = static_cast<long long>(p.size());
  // q_l = p_l - p_{l-1}; a_0 and a_nu are forced, the interior counts range
  // over a box that is never empty for an admissible class.
  auto q_at = [&p, nu](long long l) {
    const long long cur =
        l < nu ? p[static_cast<std::size_t>(l)] : 0;
    const long long prev =
        l >= 1 && l - 1 < nu ? p[static_cast<std::size_t>(l - 1)] : 0;
    return cur - prev;
  };
  std::vector<long long> lo, hi, a;
  for (long long l = 1; l < nu; ++l) {
    lo.push_back(std::max<long long>(q_at(l), 0));
    hi.push_back(p[static_cast<std::size_t>(l)] - (critical ? 1 : 0));
  }
  a = lo;
  std::vector<BettiPair> out;
  while (true) {
    BettiPair::DegreeMap gens, rels;
    auto add = [](BettiPair::DegreeMap& map, long long d, long long c) {
      if (c != 0) map.emplace(d, c);
    };
    add(gens, 0, q_at(0));
    for (long long l = 1; l < nu; ++l) {
      const long long al = a[static_cast<std::size_t>(l - 1)];
      add(gens, l, al);
      add(rels, l, al - q_at(l));
    }
    add(rels, nu, -q_at(nu));
    BettiPair pair(std::move(gens), std::move(rels));
    assert(critical ? check_critical(params, pair, CheckForm::AB)
                    : check_cm(params, pair, CheckForm::AB));
    out.push_back(std::move(pair));

    // Advance the interior counts in ascending lexicographic order.
    std::size_t pos = a.size();
    while (pos > 0 && a[pos - 1] == hi[pos - 1]) {
      a[pos - 1] = lo[pos - 1];
      --pos;
    }
    if (pos == 0) break;
    ++a[pos - 1];
  }
  return out;
}

Int count_betti_closed(const AlgebraParams& params, long long epsilon,
                       const SPoly& s, bool critical) {
  require_mode_admissible(params, epsilon, s, critical);
  const std::vector<long long> p = smoothed_coeffs(epsilon, s);
  Int count = 1;
  for (std::size_t l = 1; l < p.size(); ++l)
    count *= Int(std::min(p[l - 1], p[l]) + (critical ? 0 : 1));
  return count;
}

bool two_jump_predicate(long long epsilon, const SPoly& s) {
  if (!strict_chain(epsilon, s.coeffs()))
    fail(ErrorCode::InvalidSPoly,
         "weight polynomial " + s.to_string() +
             " is not strictly decreasing below epsilon = " +
             std::to_string(epsilon));
  const std::vector<long long> p = smoothed_coeffs(epsilon, s);
  for (std::size_t l = 0; l + 1 < p.size(); ++l)
    if (p[l] >= 2 && p[l + 1] >= 2) return true;
  return false;
}

Int partition_count_distinct_bounded(long long n, long long m) {
  if (n < 0) return 0;
  std::vector<Int> ways(static_cast<std::size_t>(n + 1), Int(0));
  ways[0] = 1;
  for (long long part = 1; part < m; ++part)
    for (long long v = n; v >= part; --v)
      ways[static_cast<std::size_t>(v)] +=
          ways[static_cast<std::size_t>(v - part)];
  return ways[static_cast<std::size_t>(n)];
}

// --- table generation ---------------------------------------------------------

std::vector<TableBlock> appendix_tables(const AlgebraParams& params,
                                        long long eps_max) {
  std::vector<TableBlock> blocks;
  for (long long eps = 1; eps <= eps_max; ++eps) {
    TableBlock block;
    block.kind = params.kind;
    block.epsilon = eps;
    // The row set is the kind-free strict family, listed ascending; rows the
    // kind excludes stay in place, marked empty.
    std::vector<SPoly> family =
        enumerate_s(AlgebraParams::quadratic(), eps, /*critical=*/true);
    std::reverse(family.begin(), family.end());
    for (SPoly& s : family) {
      TableRow row;
      row.s = std::move(s);
      if (row.s.critical_admissible(params, eps)) {
        row.series = s_to_hilbert({params, eps, row.s}, kTableSeriesTerms)
                         .known_prefix(kTableSeriesTerms);
        row.resolutions = enumerate_betti(params, eps, row.s, /*critical=*/true);
      } else {
        row.empty = true;
      }
      block.rows.push_back(std::move(row));
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::string render_tables_text(const std::vector<TableBlock>& blocks) {
  std::ostringstream out;
  for (const TableBlock& block : blocks) {
    out << "== " << kind_name(block.kind) << ", epsilon = " << block.epsilon
        << " ==\n\n";
    for (const TableRow& row : block.rows) {
      out << "s(t) = " << row.s.to_string() << "\n";
      if (row.empty) {
        out << "h(t) = ∅\n";
      } else {
        out << "h(t) = ";
        for (std::size_t i = 0; i < row.series.size(); ++i) {
          if (i > 0) out << " + ";
          render_series_term(out, row.series[i], static_cast<long long>(i));
        }
        out << " + ...\n";
        for (const BettiPair& res : row.resolutions)
          out << render_resolution(res) << "\n";
      }
      out << "\n";
    }
  }
  std::string text = out.str();
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

std::string render_resolution(const BettiPair& betti) {
  auto render_side = [](const BettiPair::DegreeMap& side) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [degree, count] : side) {
      if (!first) out << " ⊕ ";
      first = false;
      if (degree == 0)
        out << "A";
      else
        out << "A(" << -degree << ")";
      if (count > 1) out << "^" << count;
    }
    return out.str();
  };
  return "0 -> " + render_side(betti.relations()) + " -> " +
         render_side(betti.generators()) + " -> M -> 0";
}

}  // namespace curvemod
