#include "wnsynth/translation.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "wnsynth/error.hpp"
#include "wnsynth/normalize.hpp"

namespace wnsynth {

std::vector<std::string> TranslationProvider::translate(const std::string& word,
                                                        const std::string& src_lang,
                                                        const std::string& dst_lang) {
  LangPair pair{src_lang, dst_lang};
  if (!supports(pair)) throw CapabilityError(name() + " does not translate " + pair.str());
  return do_translate(word, pair);
}

std::vector<std::string> split_alternatives(std::string_view text) {
  static constexpr std::array<std::string_view, 7> separators = {
      ",", ";", "\xD8\x8C" /* ، */, "\xD8\x9B" /* ؛ */, "\xE3\x80\x81" /* 、 */,
      "\xEF\xBC\x8C" /* ， */, "\xEF\xBC\x9B" /* ； */};
  std::vector<std::string> out;
  std::size_t start = 0;
  std::size_t i = 0;
  auto flush = [&](std::size_t end) {
    auto lemma = normalize_lemma(text.substr(start, end - start));
    if (!lemma.empty()) out.push_back(std::move(lemma));
  };
  while (i < text.size()) {
    auto rest = text.substr(i);
    auto sep = std::find_if(separators.begin(), separators.end(),
                            [&](std::string_view s) { return rest.starts_with(s); });
    if (sep == separators.end()) {
      ++i;
      continue;
    }
    flush(i);
    i += sep->size();
    start = i;
  }
  flush(text.size());
  return out;
}

std::shared_ptr<MockTranslationProvider> MockTranslationProvider::load(
    const std::filesystem::path& path, std::string name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open mock translation table " + path.string());
  auto provider = std::make_shared<MockTranslationProvider>(std::move(name));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_fields(line, '\t');
    if (fields.size() < 3) throw ParseError("mock table row needs src, dst and word", line_no);
    std::vector<std::string> translations(fields.begin() + 3, fields.end());
    provider->add(std::string(fields[0]), std::string(fields[1]), std::string(fields[2]),
                  std::move(translations));
  }
  return provider;
}

void MockTranslationProvider::add(const std::string& src, const std::string& dst,
                                  const std::string& word, std::vector<std::string> translations) {
  pairs_.insert({src, dst});
  auto& slot = table_[{src, dst, normalize_lemma(word)}];
  for (auto& t : translations) slot.push_back(std::move(t));
}

bool MockTranslationProvider::supports(const LangPair& pair) const {
  return (identity_ && pair.src == pair.dst) || pairs_.count(pair) != 0;
}

std::vector<std::string> MockTranslationProvider::do_translate(const std::string& word,
                                                               const LangPair& pair) {
  ++calls_;
  auto key = normalize_lemma(word);
  if (identity_ && pair.src == pair.dst) {
    if (key.empty()) return {};
    return {key};
  }
  auto it = table_.find({pair.src, pair.dst, key});
  if (it == table_.end()) return {};
  std::vector<std::string> out;
  for (const auto& raw : it->second) {
    auto parts = split_alternatives(raw);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return out;
}

bool DictionaryProvider::supports(const LangPair& pair) const {
  return pair.src == dictionary_->src_lang() && pair.dst == dictionary_->dst_lang();
}

std::vector<std::string> DictionaryProvider::do_translate(const std::string& word, const LangPair&) {
  ++calls_;
  return dictionary_->lookup(normalize_lemma(word));
}

TranslationCache::TranslationCache(std::filesystem::path path) : path_(std::move(path)) {
  if (std::filesystem::exists(path_)) {
    std::ifstream in(path_, std::ios::binary);
    if (!in) throw CacheError("cannot read cache " + path_.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      auto fields = split_fields(line, '\t');
      if (fields.size() < 4)
        throw CacheError(path_.string() + ":" + std::to_string(line_no) + ": malformed record");
      CacheKey key{std::string(fields[0]), std::string(fields[1]), std::string(fields[2]),
                   std::string(fields[3])};
      records_.try_emplace(std::move(key), fields.begin() + 4, fields.end());
    }
  }
  log_.open(path_, std::ios::binary | std::ios::app);
  if (!log_) throw CacheError("cannot open cache for append: " + path_.string());
}

std::optional<std::vector<std::string>> TranslationCache::lookup(const CacheKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = records_.find(key);
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

namespace {

void write_record(std::ostream& out, const CacheKey& key, const std::vector<std::string>& translations) {
  out << key.provider << '\t' << key.src << '\t' << key.dst << '\t' << key.word;
  for (const auto& t : translations) out << '\t' << t;
  out << '\n';
}

}  // namespace

void TranslationCache::store(const CacheKey& key, const std::vector<std::string>& translations) {
  std::unique_lock lock(mutex_);
  if (!records_.try_emplace(key, translations).second) return;
  if (path_.empty()) return;
  write_record(log_, key, translations);
  log_.flush();
  if (!log_) throw CacheError("write failed: " + path_.string());
}

std::size_t TranslationCache::size() const {
  std::shared_lock lock(mutex_);
  return records_.size();
}

void TranslationCache::write_sorted(std::ostream& out) const {
  std::shared_lock lock(mutex_);
  for (const auto& [key, translations] : records_) write_record(out, key, translations);
}

void TranslationCache::compact() {
  if (path_.empty()) return;
  std::unique_lock lock(mutex_);
  auto tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    for (const auto& [key, translations] : records_) write_record(out, key, translations);
    if (!out) throw CacheError("write failed: " + tmp.string());
  }
  log_.close();
  std::error_code ec;
  std::filesystem::rename(tmp, path_, ec);
  if (ec) throw CacheError("cannot replace " + path_.string() + ": " + ec.message());
  log_.open(path_, std::ios::binary | std::ios::app);
  if (!log_) throw CacheError("cannot reopen cache " + path_.string());
}

std::vector<std::string> CachedProvider::do_translate(const std::string& word, const LangPair& pair) {
  CacheKey key{inner_->name(), pair.src, pair.dst, normalize_lemma(word)};
  if (auto hit = cache_->lookup(key)) return *hit;
  ++backing_calls_;
  auto result = inner_->translate(word, pair.src, pair.dst);
  cache_->store(key, result);
  return result;
}

std::shared_ptr<CachedProvider> cached(std::shared_ptr<TranslationProvider> provider,
                                       std::shared_ptr<TranslationCache> cache) {
  return std::make_shared<CachedProvider>(std::move(provider), std::move(cache));
}

std::vector<PivotedTranslation> pivot_translate(const std::string& word, const std::string& src_lang,
                                                const std::string& dst_lang,
                                                const std::string& pivot_lang,
                                                TranslationProvider& first,
                                                TranslationProvider& second) {
  std::vector<PivotedTranslation> out;
  for (const auto& pivot : first.translate(word, src_lang, pivot_lang))
    for (auto& target : second.translate(pivot, pivot_lang, dst_lang))
      out.push_back({std::move(target), pivot});
  return out;
}

void ProviderRegistry::assign(const LangPair& pair, std::shared_ptr<TranslationProvider> provider) {
  if (!provider->supports(pair))
    throw CapabilityError(provider->name() + " cannot serve " + pair.str());
  providers_[pair] = std::move(provider);
}

TranslationProvider* ProviderRegistry::find(const LangPair& pair) const {
  auto it = providers_.find(pair);
  return it == providers_.end() ? nullptr : it->second.get();
}

TranslationProvider& ProviderRegistry::require(const LangPair& pair) const {
  auto* p = find(pair);
  if (!p) throw CapabilityError("no provider assigned for " + pair.str());
  return *p;
}

}  // namespace wnsynth
