#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wnsynth/lexicon.hpp"
#include "wnsynth/translation.hpp"

namespace wnsynth {

struct WordnetSource {
  std::string name;
  std::string lang;
  std::string format;  // "wndb" or "omw"
  std::vector<std::filesystem::path> paths;
  std::optional<std::size_t> expected_synsets;
};

struct DictionarySource {
  std::string name;
  std::string src;
  std::string dst;
  std::filesystem::path path;
};

struct ProviderSpec {
  std::string name;
  std::string type;  // "mock", "dictionary" or "http"
  std::filesystem::path path;                // mock table
  bool identity = false;                     // mock
  std::string dictionary;                    // dictionary source name
  std::vector<LangPair> pairs;               // mock (extra) / http
  std::string base_url;                      // http
  std::string endpoint_path = "/translate";  // http
  std::string api_key_env;                   // http
  double qps = 0.0;                          // http
  int max_in_flight = 4;                     // http
  int timeout_seconds = 10;                  // http
};

struct ProviderAssignment {
  LangPair pair;
  std::string provider;
};

struct RunSpec {
  Approach approach = Approach::IW;
  std::vector<std::string> wordnets;
  std::string tag;  // defaults to "<approach>:<wn>+<wn>..."
};

/// Declarative build description; see README for the schema. Relative paths
/// are resolved against the directory holding the config file.
struct RunConfig {
  std::filesystem::path config_path;
  std::string name;
  std::string target_lang;
  std::string pivot_lang = "eng";
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  int retries = 2;
  std::optional<std::size_t> pwn_total;
  std::filesystem::path output_dir;
  std::optional<std::filesystem::path> cache;
  bool provenance = true;
  std::vector<WordnetSource> wordnets;
  std::vector<DictionarySource> dictionaries;
  std::vector<ProviderSpec> providers;
  std::vector<ProviderAssignment> assignments;
  std::vector<RunSpec> runs;
};

/// Values given on the command line take precedence over the file.
struct ConfigOverrides {
  std::optional<Approach> approach;  // keep only runs of this approach
  std::optional<std::string> target_lang;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::optional<std::filesystem::path> output_dir;
};

/// Throws ConfigError on unreadable files, bad JSON or schema violations.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir);
void apply_overrides(RunConfig& cfg, const ConfigOverrides& overrides);

/// Everything that determines a build's outputs; embedded in each artifact.
struct RunManifest {
  std::string config_path;
  std::vector<std::pair<std::string, std::vector<std::string>>> resources;
  std::vector<std::string> runs;
  std::string target_lang;
  std::uint64_t seed = 0;
  std::size_t workers = 1;

  /// Compact single-line JSON with a fixed key order.
  std::string to_json() const;
};

RunManifest make_manifest(const RunConfig& cfg);

}  // namespace wnsynth
