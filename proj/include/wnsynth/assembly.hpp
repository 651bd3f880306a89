#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wnsynth/lexicon.hpp"
#include "wnsynth/ranking.hpp"
#include "wnsynth/wn_data.hpp"

namespace wnsynth {

/// Ranks and selects every candidate set, keeping synsets with at least one
/// accepted word. Outcomes (including Case 3 rejections) are appended to
/// `outcomes` when given.
GeneratedWordnet assemble_wordnet(const std::map<OffsetPos, CandidateSet>& sets,
                                  std::string target_lang, const std::string& run_tag,
                                  std::vector<SelectionOutcome>* outcomes = nullptr);

/// Union of keys and words; provenance records are pooled. Associative,
/// commutative and idempotent. Throws IntegrityError on mixed target languages.
GeneratedWordnet merge_wordnets(std::span<const GeneratedWordnet> parts);

struct CoverageReport {
  std::string target_lang;
  std::set<std::string> run_tags;
  std::size_t synset_count = 0;
  std::size_t pwn_total = kPwn30SynsetCount;
  Rational percent;  // synset_count * 100 / pwn_total

  std::string percent_display() const { return percent.to_fixed(2); }
  std::string to_text() const;
  std::string to_json_line() const;
};

/// Throws std::invalid_argument when pwn_total is zero.
CoverageReport coverage_report(const GeneratedWordnet& gw, std::size_t pwn_total = kPwn30SynsetCount);

struct EvalItem {
  OffsetPos id;
  std::vector<std::string> words;
  std::optional<int> score;
};

struct EvalSample {
  std::uint64_t seed = 0;
  std::size_t requested = 0;
  std::vector<EvalItem> items;  // OffsetPos order
};

/// Uniform sample of min(n, synset_count) synsets without replacement,
/// reproducible for a fixed seed. Throws std::invalid_argument when n is 0.
EvalSample sample_eval_set(const GeneratedWordnet& gw, std::size_t n, std::uint64_t seed);

/// Tab-separated rating sheet: "offset-pos<TAB>word; word<TAB>score".
/// Score cells are left blank for raters to fill in.
void write_rating_sheet(std::ostream& out, const EvalSample& sample, const std::string& target_lang,
                        std::span<const std::string> header_lines = {});

struct Rating {
  OffsetPos id;
  int score = 0;
};

/// Reads a filled-in rating sheet; blank score cells are skipped. Throws
/// ParseError on malformed rows and ValidationError on scores outside 1..5.
std::vector<Rating> read_rating_sheet(std::istream& in);

struct SynsetScore {
  std::size_t count = 0;
  std::int64_t total = 0;
  Rational mean;
};

struct ScoreSummary {
  std::map<OffsetPos, SynsetScore> per_synset;
  /// Mean of the per-synset means; empty when nothing was rated.
  std::optional<Rational> overall;
  std::size_t rating_count = 0;

  std::string overall_display() const { return overall ? overall->to_fixed(2) : "no data"; }
};

/// Throws ValidationError if any score is outside 1..5.
ScoreSummary aggregate_scores(std::span<const Rating> ratings);

struct ExportOptions {
  /// Adds "<id><TAB>wnsynth:provenance<TAB>..." rows, which OMW readers skip.
  bool provenance = false;
  std::optional<std::uint64_t> seed;
  /// Extra header comments, written as "# <line>".
  std::vector<std::string> header_lines;
};

/// OMW-compatible tab export, sorted by OffsetPos then word. Throws
/// ValidationError when gw has no entries.
std::string export_tab(const GeneratedWordnet& gw, const std::string& wn_name,
                       const ExportOptions& options = {});

struct ExportedWordnet {
  std::string name;
  GeneratedWordnet wordnet;
  std::vector<std::string> header_lines;
};

/// Reads an export_tab file, including provenance rows when present.
ExportedWordnet read_export(std::istream& in);
ExportedWordnet load_export(const std::filesystem::path& path);

}  // namespace wnsynth
