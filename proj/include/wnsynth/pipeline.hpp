#pragma once

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "wnsynth/lexicon.hpp"
#include "wnsynth/translation.hpp"
#include "wnsynth/wn_data.hpp"

namespace wnsynth {

using WordnetRefs = std::vector<const WordnetTable*>;

struct PipelineConfig {
  Approach approach = Approach::IW;
  std::string target_lang;
  std::string pivot_lang = "eng";
  const ProviderRegistry* providers = nullptr;
  std::size_t workers = 1;
  /// Extra attempts after a ProviderError before the synset is quarantined.
  int retries = 2;
  std::chrono::milliseconds retry_backoff{0};
};

enum class SynsetStatus { Generated, Empty, Error };

std::string_view to_string(SynsetStatus s) noexcept;

struct RunRecord {
  OffsetPos id;
  SynsetStatus status;
  std::size_t tokens = 0;
  std::string detail;
};

/// Per-synset audit trail of one generation run.
struct RunReport {
  std::vector<RunRecord> records;

  std::size_t count(SynsetStatus status) const;
  /// One JSON object per line, records in OffsetPos order.
  void write_jsonl(std::ostream& out, const std::string& run_tag) const;
};

struct GenerationResult {
  std::map<OffsetPos, CandidateSet> sets;
  RunReport report;
};

/// Translates every PWN synset straight into the target language.
GenerationResult generate_dr(const WordnetTable& pwn, const PipelineConfig& cfg);

/// Pools translations from every intermediate wordnet that has the synset.
/// numWordnets is the number of wordnets configured, whether or not each
/// contains a given synset.
GenerationResult generate_iw(const WordnetRefs& wordnets, const PipelineConfig& cfg);

/// Like generate_iw, but every word goes through the pivot language first;
/// pivot-language wordnets skip the first stage.
GenerationResult generate_iwnd(const WordnetRefs& wordnets, const PipelineConfig& cfg);

/// Dispatches on cfg.approach. DR uses wordnets[0], which must be the only table.
GenerationResult generate(const WordnetRefs& wordnets, const PipelineConfig& cfg);

}  // namespace wnsynth
