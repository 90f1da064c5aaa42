#pragma once
// The bijection between Hilbert series and weight polynomials s(t), the
// enumeration/counting of series classes and of Betti solutions per class,
// the bounded-distinct-parts partition count, and table generation.

#include <string>
#include <vector>

#include "curvemod/algebra.hpp"
#include "curvemod/betti.hpp"
#include "curvemod/series.hpp"

namespace curvemod {

// A weight polynomial s(t) = s_0 + s_1 t + ... with non-negative integer
// coefficients, canonical (trailing zeros stripped; empty = zero).
class SPoly {
 public:
  SPoly() = default;  // zero
  // Throws InvalidSPoly on negative coefficients.
  explicit SPoly(std::vector<long long> coeffs);

  const std::vector<long long>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // deg s for nonzero s; -1 for the zero polynomial.
  long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
  long long coeff(long long i) const;

  // epsilon > s_0 >= s_1 >= ... >= 0.
  bool cm_admissible(long long epsilon) const;
  // epsilon > s_0 > s_1 > ... >= 0, and nonzero when the algebra is cubic
  // with epsilon > 1.
  bool critical_admissible(const AlgebraParams& params, long long epsilon) const;

  LaurentPoly to_poly() const;
  std::string to_string() const;  // e.g. "3 + 2t + t^2", "0" for zero

  friend bool operator==(const SPoly&, const SPoly&) = default;

 private:
  std::vector<long long> coeffs_;
};

// A Hilbert-series class: the pair (epsilon, s) that determines the series
// over a fixed algebra. Admissibility is checked by the ops that consume it,
// under the criticality mode they are called with.
struct HilbertClass {
  AlgebraParams params;
  long long epsilon = 1;
  SPoly s;
};

// --- series <-> class -------------------------------------------------------

// p(t) = epsilon - s(t)(1-t) and q(t) = p(t)(1-t) for a class. These are the
// building blocks shared by everything below.
LaurentPoly class_p_poly(long long epsilon, const SPoly& s);
LaurentPoly class_q_poly(long long epsilon, const SPoly& s);

// Truncated Hilbert series of the class: h_A(t) * q(t). Throws InvalidSPoly
// when s is not even CM-admissible for epsilon.
IntSeries s_to_hilbert(const HilbertClass& hc, long long n_terms);

// Inverse of s_to_hilbert: recovers (epsilon, s) from a truncated series.
// Requires at least 8 known coefficients, and enough of them to certify the
// weight polynomial has terminated (throws InsufficientTruncation otherwise);
// throws NotInImage when no admissible class reproduces the known prefix.
struct RecoveredClass {
  long long epsilon = 0;
  SPoly s;
};
RecoveredClass hilbert_to_s(const AlgebraParams& params, const IntSeries& h);

// --- enumeration and closed-form counts -------------------------------------

// All admissible weight polynomials for the class family, in descending
// lexicographic order on (s_0, s_1, ...). Critical mode enumerates the
// strictly-decreasing polynomials (finite); CM mode enumerates the weakly
// decreasing ones with degree <= max_degree, which callers must supply since
// the unbounded family is infinite. max_degree < 0 means "no bound" and is
// only legal in critical mode.
std::vector<SPoly> enumerate_s(const AlgebraParams& params, long long epsilon,
                               bool critical, long long max_degree = -1);

// Number of critical Hilbert-series classes with the given epsilon:
// 2^{epsilon-1}, minus 1 for cubic algebras with epsilon > 1.
Int count_hilbert_closed(const AlgebraParams& params, long long epsilon);

// All normalized Betti pairs whose module has the given class, ordered
// ascending lexicographically on the tuple of interior generator counts
// (a_1, a_2, ...). Every emitted pair passes the relevant checker (asserted).
// Throws InvalidSPoly when s fails admissibility for the requested mode.
std::vector<BettiPair> enumerate_betti(const AlgebraParams& params,
                                       long long epsilon, const SPoly& s,
                                       bool critical);

// Closed-form count of the above: a product over the interior degrees
// 0 < l < nu of min(p_{l-1}, p_l) (critical) or 1 + min(p_{l-1}, p_l) (CM).
Int count_betti_closed(const AlgebraParams& params, long long epsilon,
                       const SPoly& s, bool critical);

// True iff the critical count exceeds 1: the jump sequence of
// epsilon, s_0, s_1, ..., 0 has two consecutive drops of size >= 2.
// Kind-independent; throws InvalidSPoly unless epsilon > s_0 > s_1 > ... >= 0.
bool two_jump_predicate(long long epsilon, const SPoly& s);

// Number of partitions of n into distinct parts, each part < m.
Int partition_count_distinct_bounded(long long n, long long m);

// --- table generation --------------------------------------------------------

// One table row: a weight polynomial with its series and all critical Betti
// solutions; `empty` marks classes that are inadmissible for the kind (the
// cubic zero-weight rows), which render as an empty-set marker.
struct TableRow {
  SPoly s;
  bool empty = false;
  std::vector<Int> series;  // first `series_terms` coefficients
  std::vector<BettiPair> resolutions;
};

struct TableBlock {
  AlgebraKind kind = AlgebraKind::Quadratic;
  long long epsilon = 1;
  std::vector<TableRow> rows;
};

inline constexpr long long kTableSeriesTerms = 6;

// Blocks for epsilon = 1..eps_max. Rows are ordered ascending
// lexicographically on (s_0, s_1, ...) to match the reference layout; the
// kind's inadmissible rows are emitted with `empty` set so both kinds list
// the same row set per epsilon.
std::vector<TableBlock> appendix_tables(const AlgebraParams& params,
                                        long long eps_max);

// Fixed-layout plain-text rendering of table blocks (the golden format).
std::string render_tables_text(const std::vector<TableBlock>& blocks);

// Resolution pretty-printer: "0 -> A(-2)^2 -> A^2 -> M -> 0".
std::string render_resolution(const BettiPair& betti);

}  // namespace curvemod
