#pragma once

#include <span>
#include <vector>

#include "wnsynth/lexicon.hpp"

namespace wnsynth {

struct SelectionOutcome {
  OffsetPos id;
  SelectionCase selection;
  std::vector<RankedCandidate> accepted;
  std::vector<RankedCandidate> rejected;
};

/// One entry per distinct word, with
///   rank = (occur / numCandidates) * (numDstWordnets / numWordnets)
/// where occur counts tokens of the word and numDstWordnets counts the
/// distinct source wordnets that produced it. Sorted by rank descending,
/// then word ascending.
std::vector<RankedCandidate> compute_ranks(const CandidateSet& cs);

/// Three-way acceptance rule over distinct words:
///  - Case 1: some word has rank 1; accept the rank-1 words.
///  - Case 2: the maximum rank is held by a strict subset of the distinct
///    words, or there is only one distinct word; accept the maximum holders.
///  - Case 3: two or more distinct words all tie at the maximum; accept none.
/// `ranked` must be non-empty and ordered as compute_ranks returns it.
SelectionOutcome select_candidates(const OffsetPos& id, std::span<const RankedCandidate> ranked);

inline SelectionOutcome rank_and_select(const CandidateSet& cs) {
  auto ranked = compute_ranks(cs);
  return select_candidates(cs.id(), ranked);
}

}  // namespace wnsynth
