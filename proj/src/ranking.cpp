#include "wnsynth/ranking.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace wnsynth {

std::vector<RankedCandidate> compute_ranks(const CandidateSet& cs) {
  struct Tally {
    std::size_t occur = 0;
    std::set<std::string> sources;
  };
  std::map<std::string, Tally> tallies;
  for (const auto& c : cs.candidates()) {
    auto& t = tallies[c.word];
    ++t.occur;
    t.sources.insert(c.source_wordnet);
  }

  const auto num_candidates = static_cast<std::int64_t>(cs.num_candidates());
  const auto num_wordnets = static_cast<std::int64_t>(cs.num_wordnets());
  std::vector<RankedCandidate> out;
  out.reserve(tallies.size());
  for (auto& [word, t] : tallies) {
    auto occur = static_cast<std::int64_t>(t.occur);
    auto dst = static_cast<std::int64_t>(t.sources.size());
    out.push_back({word, t.occur, t.sources.size(),
                   Rational(occur, num_candidates) * Rational(dst, num_wordnets)});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.word < b.word;
  });
  return out;
}

SelectionOutcome select_candidates(const OffsetPos& id, std::span<const RankedCandidate> ranked) {
  if (ranked.empty()) throw std::invalid_argument(id.str() + ": no ranked candidates");

  const Rational one(1, 1);
  const Rational top = std::max_element(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
                         return a.rank < b.rank;
                       })->rank;
  auto holders = static_cast<std::size_t>(
      std::count_if(ranked.begin(), ranked.end(), [&](const auto& r) { return r.rank == top; }));

  SelectionOutcome out{id, SelectionCase::Case3, {}, {}};
  if (top == one)
    out.selection = SelectionCase::Case1;
  else if (holders < ranked.size() || ranked.size() == 1)
    out.selection = SelectionCase::Case2;

  for (const auto& r : ranked) {
    bool accept = out.selection != SelectionCase::Case3 && r.rank == top;
    (accept ? out.accepted : out.rejected).push_back(r);
  }
  return out;
}

}  // namespace wnsynth
