#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "wnsynth/assembly.hpp"
#include "wnsynth/config.hpp"
#include "wnsynth/pipeline.hpp"

namespace wnsynth {

struct RunOutput {
  std::string tag;
  GeneratedWordnet wordnet;
  RunReport report;
  std::vector<SelectionOutcome> outcomes;
};

struct BuildOutput {
  RunManifest manifest;
  std::vector<RunOutput> runs;
  GeneratedWordnet merged;
  std::size_t pwn_total = kPwn30SynsetCount;

  std::string export_text;       // <name>.tab
  std::string coverage_text;     // coverage.txt
  std::string coverage_jsonl;    // coverage.jsonl
  std::string run_report_jsonl;  // run_report.jsonl

  /// Translation requests that reached a provider rather than the cache.
  std::size_t provider_calls = 0;
};

/// Loads every resource, runs generate -> rank -> select for each configured
/// run, merges the results, and renders all artifacts in memory.
BuildOutput run_build(const RunConfig& cfg);

/// Writes the rendered artifacts into cfg.output_dir.
void write_build_outputs(const BuildOutput& out, const RunConfig& cfg);

}  // namespace wnsynth
