#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wnsynth/offset_pos.hpp"
#include "wnsynth/rational.hpp"

namespace wnsynth {

/// Candidate-generation approach: direct translation of PWN, intermediate
/// wordnets, or intermediate wordnets pivoted through English and a dictionary.
enum class Approach { DR, IW, IWND };

std::string_view to_string(Approach a) noexcept;
std::optional<Approach> approach_from_string(std::string_view s) noexcept;

/// One target-language translation token with its provenance.
struct Candidate {
  std::string word;
  std::string source_wordnet;
  std::string source_word;
  std::optional<std::string> pivot_word;  // set iff approach == IWND
  Approach approach = Approach::IW;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Throws std::invalid_argument if the word is empty or not in normalized
/// form, or the pivot word disagrees with the approach.
Candidate make_candidate(std::string word, std::string source_wordnet, std::string source_word,
                         std::optional<std::string> pivot_word, Approach approach);

/// All translation tokens proposed for one synset. The candidate list is a
/// multiset: repeated words are meaningful and counted.
class CandidateSet {
public:
  /// Throws std::invalid_argument when `num_wordnets` is zero or smaller than
  /// the number of distinct source wordnets among the candidates.
  CandidateSet(OffsetPos id, std::string target_lang, std::vector<Candidate> candidates,
               std::size_t num_wordnets);

  const OffsetPos& id() const noexcept { return id_; }
  const std::string& target_lang() const noexcept { return target_lang_; }
  const std::vector<Candidate>& candidates() const noexcept { return candidates_; }
  std::size_t num_wordnets() const noexcept { return num_wordnets_; }
  /// Token count, with multiplicity.
  std::size_t num_candidates() const noexcept { return candidates_.size(); }

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;

private:
  OffsetPos id_;
  std::string target_lang_;
  std::vector<Candidate> candidates_;
  std::size_t num_wordnets_;
};

struct RankedCandidate {
  std::string word;
  std::size_t occur = 0;
  std::size_t num_dst_wordnets = 0;
  Rational rank;

  std::string rank_display() const { return rank.to_fixed(2); }

  friend bool operator==(const RankedCandidate&, const RankedCandidate&) = default;
};

enum class SelectionCase { Case1 = 1, Case2 = 2, Case3 = 3 };

std::string_view to_string(SelectionCase c) noexcept;
std::optional<SelectionCase> selection_case_from_string(std::string_view s) noexcept;

/// Why a word was accepted: which run produced it and its rank there.
struct ProvenanceRecord {
  std::string run_tag;
  SelectionCase selection = SelectionCase::Case1;
  RankedCandidate candidate;

  friend bool operator==(const ProvenanceRecord&, const ProvenanceRecord&) = default;
  friend std::strong_ordering operator<=>(const ProvenanceRecord& a, const ProvenanceRecord& b) {
    if (auto c = a.run_tag <=> b.run_tag; c != 0) return c;
    if (auto c = a.candidate.word <=> b.candidate.word; c != 0) return c;
    if (auto c = a.selection <=> b.selection; c != 0) return c;
    if (auto c = a.candidate.occur <=> b.candidate.occur; c != 0) return c;
    if (auto c = a.candidate.num_dst_wordnets <=> b.candidate.num_dst_wordnets; c != 0) return c;
    return a.candidate.rank <=> b.candidate.rank;
  }
};

struct GeneratedEntry {
  std::vector<std::string> words;  // sorted, unique, non-empty
  std::vector<ProvenanceRecord> provenance;

  friend bool operator==(const GeneratedEntry&, const GeneratedEntry&) = default;
};

struct GeneratedWordnet {
  std::string target_lang;
  std::set<std::string> run_tags;
  std::map<OffsetPos, GeneratedEntry> entries;

  std::size_t synset_count() const noexcept { return entries.size(); }

  friend bool operator==(const GeneratedWordnet&, const GeneratedWordnet&) = default;
};

}  // namespace wnsynth
