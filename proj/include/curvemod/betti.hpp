#pragma once
// Graded Betti data of a length-one free resolution, and the combinatorial
// gadgets built from it: staircase sequences, degree matrices and ladders.
//
// Indexing convention: StairSeq, DegreeMatrix and Ladder are 1-based, which
// is the convention the underlying identities are stated in; the JSON wire
// format uses plain 0-based arrays.

#include <cstdint>
#include <map>
#include <vector>

#include "curvemod/errors.hpp"

namespace curvemod {

// The two multiplicity maps (degree -> count) of a resolution
// 0 -> F1 -> F0 -> M -> 0: `generators` counts the shifted free summands of
// F0 (the a_i), `relations` those of F1 (the b_i).
class BettiPair {
 public:
  using DegreeMap = std::map<long long, long long>;

  BettiPair() = default;  // the empty pair
  // Validates: counts must be non-negative (zero counts are stripped), and
  // the two maps may only be empty together. Throws InvalidBettiData.
  BettiPair(DegreeMap generators, DegreeMap relations);

  const DegreeMap& generators() const { return generators_; }
  const DegreeMap& relations() const { return relations_; }

  long long generator_count() const;  // m = sum of generator counts
  long long relation_count() const;   // n = sum of relation counts

  bool empty() const { return generators_.empty() && relations_.empty(); }
  // Smallest / largest degree appearing in either map; throws EmptySequence
  // on the empty pair.
  long long min_degree() const;
  long long max_degree() const;

  friend bool operator==(const BettiPair&, const BettiPair&) = default;
  friend auto operator<=>(const BettiPair&, const BettiPair&) = default;

 private:
  DegreeMap generators_;
  DegreeMap relations_;
};

// The non-decreasing sequence listing each degree i with multiplicity c_i.
struct StairSeq {
  std::vector<long long> entries;

  long long size() const { return static_cast<long long>(entries.size()); }
  // 1-based access.
  long long at(long long index) const { return entries.at(static_cast<std::size_t>(index - 1)); }
};

// Throws EmptySequence when the map carries no positive count.
StairSeq stair_sequence(const BettiPair::DegreeMap& counts);

// The m x n grid S[alpha][beta] = S(b)_beta - S(a)_alpha. Rows are indexed by
// the generator staircase, columns by the relation staircase, both 1-based.
struct DegreeMatrix {
  long long rows = 0;
  long long cols = 0;
  std::vector<long long> entries;  // row-major

  long long at(long long row, long long col) const {
    return entries.at(static_cast<std::size_t>((row - 1) * cols + (col - 1)));
  }
};

// Throws EmptySequence when either side of the pair is empty. The result
// always satisfies the two degree-matrix identities (weakly decreasing down
// each column, weakly increasing along each row, and rank-one differences);
// both are asserted after construction.
DegreeMatrix degree_matrix(const BettiPair& betti);

// Membership grid of the region where presentation-matrix entries can be
// nonzero: (alpha, beta) is a member iff S(a)_alpha < S(b)_beta. Satisfies
// the ladder axiom: a non-member stays a non-member moving down or left.
struct Ladder {
  long long rows = 0;
  long long cols = 0;
  std::vector<std::uint8_t> member;  // row-major

  bool contains(long long row, long long col) const {
    return member.at(static_cast<std::size_t>((row - 1) * cols + (col - 1))) != 0;
  }
};

// Throws EmptySequence when either side of the pair is empty.
Ladder ladder_of(const BettiPair& betti);

// Per-row twist exponents (S(a)_1, ..., S(a)_m) applied to a presentation
// matrix when restricting it to the point model. Throws EmptySequence when
// there are no generators.
std::vector<long long> twist_exponents(const BettiPair& betti);

}  // namespace curvemod
