#include "wnsynth/lexicon.hpp"

#include <stdexcept>
#include <unordered_set>

#include "wnsynth/normalize.hpp"

namespace wnsynth {

std::string_view to_string(Approach a) noexcept {
  switch (a) {
    case Approach::DR: return "DR";
    case Approach::IW: return "IW";
    case Approach::IWND: return "IWND";
  }
  return "?";
}

std::optional<Approach> approach_from_string(std::string_view s) noexcept {
  if (s == "DR") return Approach::DR;
  if (s == "IW") return Approach::IW;
  if (s == "IWND") return Approach::IWND;
  return std::nullopt;
}

std::string_view to_string(SelectionCase c) noexcept {
  switch (c) {
    case SelectionCase::Case1: return "case1";
    case SelectionCase::Case2: return "case2";
    case SelectionCase::Case3: return "case3";
  }
  return "?";
}

std::optional<SelectionCase> selection_case_from_string(std::string_view s) noexcept {
  if (s == "case1") return SelectionCase::Case1;
  if (s == "case2") return SelectionCase::Case2;
  if (s == "case3") return SelectionCase::Case3;
  return std::nullopt;
}

Candidate make_candidate(std::string word, std::string source_wordnet, std::string source_word,
                         std::optional<std::string> pivot_word, Approach approach) {
  if (word.empty()) throw std::invalid_argument("candidate word is empty");
  if (normalize_lemma(word) != word)
    throw std::invalid_argument("candidate word is not normalized: '" + word + "'");
  if (pivot_word.has_value() != (approach == Approach::IWND))
    throw std::invalid_argument("pivot word must be present exactly for IWND candidates");
  return Candidate{std::move(word), std::move(source_wordnet), std::move(source_word),
                   std::move(pivot_word), approach};
}

CandidateSet::CandidateSet(OffsetPos id, std::string target_lang, std::vector<Candidate> candidates,
                           std::size_t num_wordnets)
    : id_(id),
      target_lang_(std::move(target_lang)),
      candidates_(std::move(candidates)),
      num_wordnets_(num_wordnets) {
  if (num_wordnets_ == 0) throw std::invalid_argument("numWordnets must be positive");
  std::unordered_set<std::string> sources;
  for (const auto& c : candidates_) sources.insert(c.source_wordnet);
  if (sources.size() > num_wordnets_)
    throw std::invalid_argument(id_.str() + ": " + std::to_string(sources.size()) +
                                " source wordnets exceed numWordnets " +
                                std::to_string(num_wordnets_));
}

}  // namespace wnsynth
