#include "wnsynth/build.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "wnsynth/error.hpp"
#include "wnsynth/http_provider.hpp"

namespace wnsynth {

namespace {

WordnetTable load_wordnet(const WordnetSource& src) {
  WordnetTable table(src.name, src.lang);
  for (const auto& path : src.paths) {
    if (src.format == "wndb") {
      auto pos = wndb_pos_from_filename(path.filename().string());
      if (!pos) throw ConfigError(src.name + ": cannot infer part of speech from " + path.string());
      table.merge(load_wndb(path, *pos, src.name, src.lang));
    } else {
      table.merge(load_omw_tab(path, src.name, src.lang));
    }
  }
  if (src.expected_synsets) table.check_declared_count(*src.expected_synsets);
  return table;
}

struct Providers {
  ProviderRegistry registry;
  std::vector<std::shared_ptr<CachedProvider>> cached;
  std::vector<std::shared_ptr<MockTranslationProvider>> mocks;
  std::vector<std::shared_ptr<DictionaryProvider>> dictionaries;
  std::shared_ptr<TranslationCache> cache;

  std::size_t backing_calls() const {
    std::size_t n = 0;
    if (cache) {
      for (const auto& c : cached) n += c->backing_calls();
      return n;
    }
    for (const auto& m : mocks) n += m->calls();
    for (const auto& d : dictionaries) n += d->calls();
    return n;
  }
};

std::unique_ptr<Providers> make_providers(const RunConfig& cfg) {
  auto out = std::make_unique<Providers>();
  if (cfg.cache) out->cache = std::make_shared<TranslationCache>(*cfg.cache);

  std::map<std::string, std::shared_ptr<const BilingualDictionary>> dictionaries;
  for (const auto& d : cfg.dictionaries)
    dictionaries[d.name] =
        std::make_shared<BilingualDictionary>(load_dictionary_tsv(d.path, d.src, d.dst));

  std::map<std::string, std::shared_ptr<TranslationProvider>> by_name;
  for (const auto& spec : cfg.providers) {
    std::shared_ptr<TranslationProvider> provider;
    if (spec.type == "mock") {
      auto mock = spec.path.empty() ? std::make_shared<MockTranslationProvider>(spec.name)
                                    : MockTranslationProvider::load(spec.path, spec.name);
      mock->set_identity(spec.identity);
      for (const auto& pair : spec.pairs) mock->declare_pair(pair);
      out->mocks.push_back(mock);
      provider = mock;
    } else if (spec.type == "dictionary") {
      auto dict = std::make_shared<DictionaryProvider>(spec.name, dictionaries.at(spec.dictionary));
      out->dictionaries.push_back(dict);
      provider = dict;
    } else {
      HttpProviderOptions options;
      options.base_url = spec.base_url;
      options.path = spec.endpoint_path;
      if (!spec.api_key_env.empty())
        if (const char* key = std::getenv(spec.api_key_env.c_str())) options.api_key = key;
      options.qps = spec.qps;
      options.max_in_flight = spec.max_in_flight;
      options.timeout_seconds = spec.timeout_seconds;
      options.pairs.insert(spec.pairs.begin(), spec.pairs.end());
      provider = std::make_shared<HttpTranslationProvider>(spec.name, std::move(options));
    }
    if (out->cache) {
      auto wrapped = cached(provider, out->cache);
      out->cached.push_back(wrapped);
      provider = wrapped;
    }
    by_name[spec.name] = provider;
  }
  for (const auto& a : cfg.assignments) out->registry.assign(a.pair, by_name.at(a.provider));
  return out;
}

}  // namespace

BuildOutput run_build(const RunConfig& cfg) {
  BuildOutput out;
  out.manifest = make_manifest(cfg);

  std::map<std::string, WordnetTable> tables;
  for (const auto& src : cfg.wordnets) tables.emplace(src.name, load_wordnet(src));

  out.pwn_total = kPwn30SynsetCount;
  if (cfg.pwn_total) {
    out.pwn_total = *cfg.pwn_total;
  } else {
    for (const auto& src : cfg.wordnets)
      if (src.format == "wndb" && src.lang == "eng") out.pwn_total = tables.at(src.name).size();
  }
  if (out.pwn_total == 0) throw ConfigError("PWN synset total must be positive");

  auto providers = make_providers(cfg);
  std::vector<GeneratedWordnet> parts;
  for (const auto& run : cfg.runs) {
    WordnetRefs refs;
    for (const auto& name : run.wordnets) refs.push_back(&tables.at(name));
    PipelineConfig pc;
    pc.approach = run.approach;
    pc.target_lang = cfg.target_lang;
    pc.pivot_lang = cfg.pivot_lang;
    pc.providers = &providers->registry;
    pc.workers = cfg.workers;
    pc.retries = cfg.retries;

    auto generated = generate(refs, pc);
    RunOutput ro;
    ro.tag = run.tag;
    ro.wordnet = assemble_wordnet(generated.sets, cfg.target_lang, run.tag, &ro.outcomes);
    ro.report = std::move(generated.report);
    parts.push_back(ro.wordnet);
    out.runs.push_back(std::move(ro));
  }
  out.merged = merge_wordnets(parts);
  out.provider_calls = providers->backing_calls();
  if (providers->cache) providers->cache->compact();

  const auto manifest_json = out.manifest.to_json();

  ExportOptions options;
  options.provenance = cfg.provenance;
  options.seed = cfg.seed;
  options.header_lines.push_back("manifest\t" + manifest_json);
  out.export_text = export_tab(out.merged, cfg.name, options);

  std::ostringstream text, jsonl, report;
  text << "# manifest\t" << manifest_json << '\n';
  jsonl << nlohmann::ordered_json{{"manifest", nlohmann::json::parse(manifest_json)}}.dump() << '\n';
  report << nlohmann::ordered_json{{"manifest", nlohmann::json::parse(manifest_json)}}.dump() << '\n';
  for (const auto& run : out.runs) {
    auto cov = coverage_report(run.wordnet, out.pwn_total);
    text << '\n' << cov.to_text();
    jsonl << cov.to_json_line() << '\n';
    run.report.write_jsonl(report, run.tag);
  }
  auto merged = coverage_report(out.merged, out.pwn_total);
  text << "\n[merged]\n" << merged.to_text();
  jsonl << merged.to_json_line() << '\n';

  out.coverage_text = text.str();
  out.coverage_jsonl = jsonl.str();
  out.run_report_jsonl = report.str();
  return out;
}

void write_build_outputs(const BuildOutput& out, const RunConfig& cfg) {
  std::error_code ec;
  std::filesystem::create_directories(cfg.output_dir, ec);
  if (ec) throw Error("cannot create " + cfg.output_dir.string() + ": " + ec.message());
  auto write = [&](const std::string& file, const std::string& content) {
    auto path = cfg.output_dir / file;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << content;
    if (!f) throw Error("cannot write " + path.string());
  };
  write(cfg.name + ".tab", out.export_text);
  write("coverage.txt", out.coverage_text);
  write("coverage.jsonl", out.coverage_jsonl);
  write("run_report.jsonl", out.run_report_jsonl);
}

}  // namespace wnsynth
