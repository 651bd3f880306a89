#include "wnsynth/config.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "wnsynth/error.hpp"

namespace wnsynth {

using nlohmann::json;

namespace {

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : (base / path).lexically_normal();
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

std::string require_string(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_string() || j.at(key).get<std::string>().empty())
    throw ConfigError(where + ": \"" + key + "\" must be a non-empty string");
  return j.at(key).get<std::string>();
}

LangPair parse_pair(const json& j, const std::string& where) {
  if (j.is_array() && j.size() == 2) return {j[0].get<std::string>(), j[1].get<std::string>()};
  if (j.is_object()) return {require_string(j, "src", where), require_string(j, "dst", where)};
  throw ConfigError(where + ": language pair must be [src, dst] or {src, dst}");
}

std::string default_tag(const RunSpec& run) {
  std::string tag(to_string(run.approach));
  tag += ':';
  for (std::size_t i = 0; i < run.wordnets.size(); ++i) tag += (i ? "+" : "") + run.wordnets[i];
  return tag;
}

void validate(const RunConfig& cfg) {
  if (cfg.target_lang.empty()) throw ConfigError("\"target\" is required");
  if (cfg.runs.empty()) throw ConfigError("at least one entry in \"runs\" is required");
  std::set<std::string> wordnets, dictionaries, providers, tags;
  for (const auto& w : cfg.wordnets) {
    if (!wordnets.insert(w.name).second) throw ConfigError("duplicate wordnet " + w.name);
    if (w.format != "wndb" && w.format != "omw")
      throw ConfigError("wordnet " + w.name + ": format must be \"wndb\" or \"omw\"");
    if (w.paths.empty()) throw ConfigError("wordnet " + w.name + ": no paths");
  }
  for (const auto& d : cfg.dictionaries)
    if (!dictionaries.insert(d.name).second) throw ConfigError("duplicate dictionary " + d.name);
  for (const auto& p : cfg.providers) {
    if (!providers.insert(p.name).second) throw ConfigError("duplicate provider " + p.name);
    if (p.type == "dictionary" && !dictionaries.count(p.dictionary))
      throw ConfigError("provider " + p.name + ": unknown dictionary '" + p.dictionary + "'");
    if (p.type != "mock" && p.type != "dictionary" && p.type != "http")
      throw ConfigError("provider " + p.name + ": unknown type '" + p.type + "'");
  }
  for (const auto& a : cfg.assignments)
    if (!providers.count(a.provider))
      throw ConfigError("assignment " + a.pair.str() + ": unknown provider '" + a.provider + "'");
  for (const auto& r : cfg.runs) {
    if (r.wordnets.empty()) throw ConfigError("run " + r.tag + ": no wordnets");
    for (const auto& w : r.wordnets)
      if (!wordnets.count(w)) throw ConfigError("run " + r.tag + ": unknown wordnet '" + w + "'");
    if (r.approach == Approach::DR && r.wordnets.size() != 1)
      throw ConfigError("run " + r.tag + ": DR takes exactly the PWN table");
    if (!tags.insert(r.tag).second) throw ConfigError("duplicate run tag " + r.tag);
  }
}

}  // namespace

RunConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }

  RunConfig cfg;
  try {
    cfg.name = get_or<std::string>(j, "name", "wordnet");
    cfg.target_lang = get_or<std::string>(j, "target", "");
    cfg.pivot_lang = get_or<std::string>(j, "pivot", "eng");
    cfg.seed = get_or<std::uint64_t>(j, "seed", 0);
    cfg.workers = get_or<std::size_t>(j, "workers", 1);
    cfg.retries = get_or<int>(j, "retries", 2);
    if (j.contains("pwn_total")) cfg.pwn_total = j.at("pwn_total").get<std::size_t>();
    cfg.output_dir = resolve(base_dir, get_or<std::string>(j, "output_dir", "out"));
    if (j.contains("cache")) cfg.cache = resolve(base_dir, j.at("cache").get<std::string>());
    cfg.provenance = get_or<bool>(j, "provenance", true);

    for (const auto& w : j.value("wordnets", json::array())) {
      WordnetSource src;
      src.name = require_string(w, "name", "wordnet");
      src.lang = require_string(w, "lang", "wordnet " + src.name);
      src.format = require_string(w, "format", "wordnet " + src.name);
      if (w.contains("path")) src.paths.push_back(resolve(base_dir, w.at("path").get<std::string>()));
      for (const auto& p : w.value("paths", json::array()))
        src.paths.push_back(resolve(base_dir, p.get<std::string>()));
      if (w.contains("expected_synsets")) src.expected_synsets = w.at("expected_synsets").get<std::size_t>();
      cfg.wordnets.push_back(std::move(src));
    }
    for (const auto& d : j.value("dictionaries", json::array())) {
      DictionarySource src;
      src.name = require_string(d, "name", "dictionary");
      src.src = require_string(d, "src", "dictionary " + src.name);
      src.dst = require_string(d, "dst", "dictionary " + src.name);
      src.path = resolve(base_dir, require_string(d, "path", "dictionary " + src.name));
      cfg.dictionaries.push_back(std::move(src));
    }
    for (const auto& p : j.value("providers", json::array())) {
      ProviderSpec spec;
      spec.name = require_string(p, "name", "provider");
      spec.type = require_string(p, "type", "provider " + spec.name);
      if (p.contains("path")) spec.path = resolve(base_dir, p.at("path").get<std::string>());
      spec.identity = get_or<bool>(p, "identity", false);
      spec.dictionary = get_or<std::string>(p, "dictionary", "");
      for (const auto& pair : p.value("pairs", json::array()))
        spec.pairs.push_back(parse_pair(pair, "provider " + spec.name));
      spec.base_url = get_or<std::string>(p, "base_url", "");
      spec.endpoint_path = get_or<std::string>(p, "endpoint_path", "/translate");
      spec.api_key_env = get_or<std::string>(p, "api_key_env", "");
      spec.qps = get_or<double>(p, "qps", 0.0);
      spec.max_in_flight = get_or<int>(p, "max_in_flight", 4);
      spec.timeout_seconds = get_or<int>(p, "timeout_seconds", 10);
      if (spec.type == "mock" && spec.path.empty() && !spec.identity)
        throw ConfigError("provider " + spec.name + ": mock needs \"path\" or \"identity\"");
      if (spec.type == "http" && spec.base_url.empty())
        throw ConfigError("provider " + spec.name + ": http needs \"base_url\"");
      cfg.providers.push_back(std::move(spec));
    }
    for (const auto& a : j.value("assignments", json::array())) {
      ProviderAssignment assignment{parse_pair(a, "assignment"), require_string(a, "provider", "assignment")};
      cfg.assignments.push_back(std::move(assignment));
    }
    for (const auto& r : j.value("runs", json::array())) {
      RunSpec run;
      auto approach = approach_from_string(require_string(r, "approach", "run"));
      if (!approach) throw ConfigError("run: approach must be DR, IW or IWND");
      run.approach = *approach;
      run.wordnets = r.value("wordnets", std::vector<std::string>{});
      if (run.wordnets.empty() && run.approach == Approach::DR) run.wordnets = {"PWN"};
      run.tag = get_or<std::string>(r, "tag", "");
      if (run.tag.empty()) run.tag = default_tag(run);
      cfg.runs.push_back(std::move(run));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config schema: ") + e.what());
  }
  validate(cfg);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  auto absolute = std::filesystem::absolute(path).lexically_normal();
  auto cfg = parse_config(buf.str(), absolute.parent_path());
  cfg.config_path = absolute;
  return cfg;
}

void apply_overrides(RunConfig& cfg, const ConfigOverrides& o) {
  if (o.target_lang) cfg.target_lang = *o.target_lang;
  if (o.seed) cfg.seed = *o.seed;
  if (o.workers) cfg.workers = *o.workers;
  if (o.output_dir) cfg.output_dir = *o.output_dir;
  if (o.approach) {
    std::erase_if(cfg.runs, [&](const RunSpec& r) { return r.approach != *o.approach; });
    if (cfg.runs.empty())
      throw ConfigError("no configured run uses approach " + std::string(to_string(*o.approach)));
  }
}

std::string RunManifest::to_json() const {
  nlohmann::ordered_json j;
  j["config"] = config_path;
  nlohmann::ordered_json res = nlohmann::ordered_json::object();
  for (const auto& [name, paths] : resources) res[name] = paths;
  j["resources"] = std::move(res);
  j["runs"] = runs;
  j["target"] = target_lang;
  j["seed"] = seed;
  j["workers"] = workers;
  return j.dump();
}

RunManifest make_manifest(const RunConfig& cfg) {
  RunManifest m;
  m.config_path = cfg.config_path.string();
  for (const auto& w : cfg.wordnets) {
    std::vector<std::string> paths;
    for (const auto& p : w.paths) paths.push_back(p.string());
    m.resources.emplace_back(w.name, std::move(paths));
  }
  for (const auto& d : cfg.dictionaries) m.resources.emplace_back(d.name, std::vector{d.path.string()});
  for (const auto& p : cfg.providers)
    if (!p.path.empty()) m.resources.emplace_back(p.name, std::vector{p.path.string()});
  for (const auto& r : cfg.runs) m.runs.push_back(r.tag);
  m.target_lang = cfg.target_lang;
  m.seed = cfg.seed;
  m.workers = cfg.workers;
  return m;
}

}  // namespace wnsynth
