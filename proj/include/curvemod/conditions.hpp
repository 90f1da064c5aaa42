#pragma once
// Deciders for the Cohen-Macaulay and critical Cohen-Macaulay conditions on
// a Betti pair over either algebra kind, in three provably equivalent forms.
//
// All three forms answer the same question; they differ in which primitive
// the inequalities are phrased against (the characteristic polynomial, the
// raw count maps, or the staircase ladder). Equivalence across forms is
// covered by the property tests.

#include <optional>
#include <string>

#include "curvemod/algebra.hpp"
#include "curvemod/betti.hpp"

namespace curvemod {

enum class CheckForm {
  Q,       // inequalities on the characteristic polynomial's partial sums
  AB,      // inequalities on the raw generator/relation counts
  Ladder,  // membership test against the staircase ladder
};

// True iff the pair is the Betti data of a module that is Cohen-Macaulay of
// dimension two over the given algebra. The empty pair is rejected (false),
// not an error: total predicates compose better in enumeration loops.
bool check_cm(const AlgebraParams& params, const BettiPair& betti,
              CheckForm form = CheckForm::Q);

// True iff additionally every proper quotient drops dimension (criticality).
// Implies check_cm.
bool check_critical(const AlgebraParams& params, const BettiPair& betti,
                    CheckForm form = CheckForm::Q);

// One failed clause, for diagnostics. `label` names the clause in the
// ladder form's lettering: "(1)(a)".."(1)(c)" are the Cohen-Macaulay
// clauses (non-negativity, equal totals, upper-triangle ladder inclusion),
// "(2)(a)".."(2)(d)" the critical ones ((a)-(c) as before but with the
// subdiagonal included, (d) the cubic all-linear exclusion). A bare "(1)" /
// "(2)" marks the empty pair, which fails the nonzero-module hypothesis
// rather than any lettered clause. `message` spells out the offending
// indices and values.
struct ConditionWitness {
  std::string label;
  std::string message;
};

// First violated clause in label order, or nullopt when the pair passes.
// With `critical` false only the "(1)" clauses are checked.
std::optional<ConditionWitness> first_violation(const AlgebraParams& params,
                                                const BettiPair& betti,
                                                bool critical);

}  // namespace curvemod
