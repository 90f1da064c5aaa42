// Cohen-Macaulay and criticality deciders in three equivalent forms, plus
// clause-labelled violation witnesses.
#include "curvemod/conditions.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "curvemod/errors.hpp"

namespace curvemod {

namespace {

long long count_at(const BettiPair::DegreeMap& map, long long d) {
  auto it = map.find(d);
  return it == map.end() ? 0 : it->second;
}

// Sorted union of the degrees appearing on either side. Every quantity the
// checks compare is constant between consecutive entries, so scanning these
// degrees decides the conditions over all of Z.
std::vector<long long> event_degrees(const BettiPair& betti) {
  std::vector<long long> degs;
  degs.reserve(betti.generators().size() + betti.relations().size());
  for (const auto& [d, c] : betti.generators()) degs.push_back(d);
  for (const auto& [d, c] : betti.relations()) degs.push_back(d);
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  return degs;
}

// --- AB form: inequalities on prefix totals of the raw count maps. -------
//
// Write A_d / B_d for the number of generators / relations in degrees <= d.
// The weak condition says every relation is preceded by a strictly lower
// generator, counted with multiplicity: B_d <= A_{d-1} for all d. The
// strict condition shifts the comparison by one slot: ignoring the lowest
// generator and the highest relation, the remaining staircases must still
// interlace, which in counts reads min(B_d, n-1) <= max(0, A_{d-1} - 1),
// together with "some generator sits below the lowest relation".

bool cm_ab(const BettiPair& betti) {
  if (betti.generator_count() != betti.relation_count()) return false;
  auto gen = betti.generators().begin();
  const auto gen_end = betti.generators().end();
  long long below = 0;       // A_{d-1}
  long long rel_prefix = 0;  // B_d
  for (const auto& [d, count] : betti.relations()) {
    while (gen != gen_end && gen->first <= d - 1) below += (gen++)->second;
    rel_prefix += count;
    if (rel_prefix > below) return false;
  }
  return true;
}

bool strict_core_ab(const BettiPair& betti) {
  const long long n = betti.relation_count();
  if (betti.generator_count() != n) return false;
  auto gen = betti.generators().begin();
  const auto gen_end = betti.generators().end();
  long long below = 0;
  long long rel_prefix = 0;
  for (const auto& [d, count] : betti.relations()) {
    while (gen != gen_end && gen->first <= d - 1) below += (gen++)->second;
    rel_prefix += count;
    if (rel_prefix >= 1 && below < 1) return false;
    if (std::min(rel_prefix, n - 1) > std::max<long long>(0, below - 1))
      return false;
  }
  return true;
}

// Excluded pattern, AB form: both maps are concentrated in a single degree,
// the relations one degree above the generators, with multiplicity >= 2.
bool excluded_ab(const BettiPair& betti) {
  const auto& a = betti.generators();
  const auto& b = betti.relations();
  return a.size() == 1 && b.size() == 1 &&
         b.begin()->first == a.begin()->first + 1 && a.begin()->second >= 2;
}

// --- Q form: inequalities on partial sums of the characteristic -----------
// polynomial q(t) = sum (a_d - b_d) t^d. With p_d the partial sum of q
// through degree d, the weak condition is p_d >= a_d everywhere (plus
// q(1) = 0), and the strict one sharpens it to p_d > a_d on the half-open
// degree span of the relations, with the top generator strictly below the
// top relation.

bool cm_q(const BettiPair& betti) {
  if (betti.generator_count() != betti.relation_count()) return false;
  long long p = 0;
  for (long long d : event_degrees(betti)) {
    long long a_d = count_at(betti.generators(), d);
    p += a_d - count_at(betti.relations(), d);
    if (p < a_d) return false;
  }
  return true;
}

bool strict_core_q(const BettiPair& betti) {
  if (betti.generator_count() != betti.relation_count()) return false;
  if (betti.generators().rbegin()->first >= betti.relations().rbegin()->first)
    return false;
  const long long rel_lo = betti.relations().begin()->first;
  const long long rel_hi = betti.relations().rbegin()->first;
  long long p = 0;
  for (long long d : event_degrees(betti)) {
    long long a_d = count_at(betti.generators(), d);
    p += a_d - count_at(betti.relations(), d);
    if (d >= rel_lo && d < rel_hi && p <= a_d) return false;
  }
  return true;
}

// Excluded pattern, Q form: under the strict core, the flat pairs are
// exactly those whose smoothed polynomial p = q / (1 - t) is a single
// coefficient of value >= 2.
bool excluded_q(const BettiPair& betti) {
  std::vector<long long> degs = event_degrees(betti);
  long long p = 0;
  int nonzero_runs = 0;
  long long value = 0;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    long long d = degs[i];
    p += count_at(betti.generators(), d) - count_at(betti.relations(), d);
    if (p == 0) continue;
    // p keeps this value up to the next event degree; a single-coefficient
    // polynomial needs exactly one such run, of width one.
    if (++nonzero_runs > 1) return false;
    if (i + 1 >= degs.size() || degs[i + 1] != d + 1) return false;
    value = p;
  }
  return nonzero_runs == 1 && value >= 2;
}

// --- Ladder form: membership of the staircase ladder. --------------------

bool cm_ladder(const BettiPair& betti) {
  Ladder lad = ladder_of(betti);
  if (lad.rows != lad.cols) return false;
  for (long long r = 1; r <= lad.rows; ++r)
    for (long long c = r; c <= lad.cols; ++c)
      if (!lad.contains(r, c)) return false;
  return true;
}

bool strict_core_ladder(const BettiPair& betti) {
  Ladder lad = ladder_of(betti);
  if (lad.rows != lad.cols) return false;
  for (long long r = 1; r <= lad.rows; ++r)
    for (long long c = std::max<long long>(1, r - 1); c <= lad.cols; ++c)
      if (!lad.contains(r, c)) return false;
  return true;
}

// Excluded pattern, ladder form: a square degree matrix of size >= 2 whose
// entries are all exactly one.
bool excluded_ladder(const BettiPair& betti) {
  DegreeMatrix dm = degree_matrix(betti);
  if (dm.rows != dm.cols || dm.rows < 2) return false;
  for (long long e : dm.entries)
    if (e != 1) return false;
  return true;
}

}  // namespace

bool check_cm(const AlgebraParams& params, const BettiPair& betti,
              CheckForm form) {
  (void)params;  // the weak condition does not depend on the kind
  if (betti.empty()) return false;
  switch (form) {
    case CheckForm::Q:
      return cm_q(betti);
    case CheckForm::AB:
      return cm_ab(betti);
    case CheckForm::Ladder:
      return cm_ladder(betti);
  }
  return false;
}

bool check_critical(const AlgebraParams& params, const BettiPair& betti,
                    CheckForm form) {
  if (betti.empty()) return false;
  bool core = false;
  switch (form) {
    case CheckForm::Q:
      core = strict_core_q(betti);
      break;
    case CheckForm::AB:
      core = strict_core_ab(betti);
      break;
    case CheckForm::Ladder:
      core = strict_core_ladder(betti);
      break;
  }
  if (!core) return false;
  if (params.is_cubic()) {
    switch (form) {
      case CheckForm::Q:
        return !excluded_q(betti);
      case CheckForm::AB:
        return !excluded_ab(betti);
      case CheckForm::Ladder:
        return !excluded_ladder(betti);
    }
  }
  return true;
}

std::optional<ConditionWitness> first_violation(const AlgebraParams& params,
                                                const BettiPair& betti,
                                                bool critical) {
  const std::string prefix = critical ? "(2)" : "(1)";
  if (betti.empty())
    return ConditionWitness{
        prefix, "the pair is empty, but a nonzero module needs at least one "
                "generator and one relation"};

  // (a) Non-negative counts. The constructor already enforces this; the
  // scan keeps the lettering total for pairs built by other means.
  for (const auto* side : {&betti.generators(), &betti.relations()}) {
    for (const auto& [d, c] : *side)
      if (c < 0) {
        std::ostringstream msg;
        msg << "count " << c << " at degree " << d << " is negative";
        return ConditionWitness{prefix + "(a)", msg.str()};
      }
  }

  // (b) Equal totals.
  const long long m = betti.generator_count();
  const long long n = betti.relation_count();
  if (m != n) {
    std::ostringstream msg;
    msg << "generator total " << m << " differs from relation total " << n;
    return ConditionWitness{prefix + "(b)", msg.str()};
  }

  // (c) Ladder inclusion: every cell on or above the diagonal (weak), or
  // additionally on the subdiagonal (strict), must have degree >= 1. The
  // degrees grow along each row, so the first violation in a row sits at
  // its leftmost required cell.
  StairSeq x = stair_sequence(betti.generators());
  StairSeq y = stair_sequence(betti.relations());
  for (long long alpha = 1; alpha <= m; ++alpha) {
    long long beta = critical ? std::max<long long>(1, alpha - 1) : alpha;
    if (y.at(beta) - x.at(alpha) < 1) {
      std::ostringstream msg;
      msg << "ladder omits cell (" << alpha << ", " << beta << "): generator "
          << alpha << " has degree " << x.at(alpha) << " but relation " << beta
          << " has degree " << y.at(beta);
      return ConditionWitness{prefix + "(c)", msg.str()};
    }
  }

  // (d) The two-generator kind excludes the all-linear square pairs of size
  // at least two.
  if (critical && params.is_cubic() && excluded_ladder(betti)) {
    std::ostringstream msg;
    msg << "every entry of the " << m << " x " << n
        << " degree matrix is linear, which the two-generator kind excludes";
    return ConditionWitness{"(2)(d)", msg.str()};
  }

  return std::nullopt;
}

}  // namespace curvemod
