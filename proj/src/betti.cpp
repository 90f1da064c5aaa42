// Betti pairs and the staircase gadgets built from them.
#include "curvemod/betti.hpp"

#include <algorithm>
#include <cassert>

namespace curvemod {

namespace {

BettiPair::DegreeMap stripped(BettiPair::DegreeMap map, const char* side) {
  for (auto it = map.begin(); it != map.end();) {
    if (it->second < 0)
      fail(ErrorCode::InvalidBettiData,
           std::string("negative ") + side + " count at degree " +
               std::to_string(it->first));
    if (it->second == 0)
      it = map.erase(it);
    else
      ++it;
  }
  return map;
}

long long total_of(const BettiPair::DegreeMap& map) {
  long long total = 0;
  for (const auto& [deg, count] : map) total += count;
  return total;
}

}  // namespace

BettiPair::BettiPair(DegreeMap generators, DegreeMap relations)
    : generators_(stripped(std::move(generators), "generator")),
      relations_(stripped(std::move(relations), "relation")) {
  if (generators_.empty() != relations_.empty())
    fail(ErrorCode::InvalidBettiData,
         "exactly one side of the resolution is empty");
}

long long BettiPair::generator_count() const { return total_of(generators_); }
long long BettiPair::relation_count() const { return total_of(relations_); }

long long BettiPair::min_degree() const {
  if (empty())
    fail(ErrorCode::EmptySequence, "the empty pair has no degrees");
  long long lo = generators_.begin()->first;
  return std::min(lo, relations_.begin()->first);
}

long long BettiPair::max_degree() const {
  if (empty())
    fail(ErrorCode::EmptySequence, "the empty pair has no degrees");
  long long hi = generators_.rbegin()->first;
  return std::max(hi, relations_.rbegin()->first);
}

StairSeq stair_sequence(const BettiPair::DegreeMap& counts) {
  StairSeq seq;
  for (const auto& [deg, count] : counts)
    for (long long i = 0; i < count; ++i) seq.entries.push_back(deg);
  if (seq.entries.empty())
    fail(ErrorCode::EmptySequence,
         "a staircase sequence needs at least one positive count");
  return seq;
}

DegreeMatrix degree_matrix(const BettiPair& betti) {
  StairSeq rows = stair_sequence(betti.generators());
  StairSeq cols = stair_sequence(betti.relations());
  DegreeMatrix dm;
  dm.rows = rows.size();
  dm.cols = cols.size();
  dm.entries.resize(static_cast<std::size_t>(dm.rows * dm.cols));
  for (long long r = 1; r <= dm.rows; ++r)
    for (long long c = 1; c <= dm.cols; ++c)
      dm.entries[static_cast<std::size_t>((r - 1) * dm.cols + (c - 1))] =
          cols.at(c) - rows.at(r);
#ifndef NDEBUG
  for (long long r = 1; r <= dm.rows; ++r)
    for (long long c = 1; c < dm.cols; ++c)
      assert(dm.at(r, c) <= dm.at(r, c + 1));
  for (long long r = 1; r < dm.rows; ++r)
    for (long long c = 1; c <= dm.cols; ++c)
      assert(dm.at(r + 1, c) <= dm.at(r, c));
#endif
  return dm;
}

Ladder ladder_of(const BettiPair& betti) {
  DegreeMatrix dm = degree_matrix(betti);
  Ladder ladder;
  ladder.rows = dm.rows;
  ladder.cols = dm.cols;
  ladder.member.resize(dm.entries.size());
  for (std::size_t i = 0; i < dm.entries.size(); ++i)
    ladder.member[i] = dm.entries[i] >= 1 ? 1 : 0;
  return ladder;
}

std::vector<long long> twist_exponents(const BettiPair& betti) {
  return stair_sequence(betti.generators()).entries;
}

}  // namespace curvemod
