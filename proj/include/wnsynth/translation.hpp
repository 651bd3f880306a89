#pragma once

#include <atomic>
#include <compare>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "wnsynth/wn_data.hpp"

namespace wnsynth {

struct LangPair {
  std::string src;
  std::string dst;

  std::string str() const { return src + "->" + dst; }
  friend auto operator<=>(const LangPair&, const LangPair&) = default;
};

/// Word-level translation contract. Results are normalized lemmas; an empty
/// result means "no translation". Implementations must tolerate concurrent
/// calls.
class TranslationProvider {
public:
  virtual ~TranslationProvider() = default;

  virtual const std::string& name() const noexcept = 0;
  virtual bool supports(const LangPair& pair) const = 0;

  /// Throws CapabilityError for an unsupported pair and ProviderError on
  /// transport failure.
  std::vector<std::string> translate(const std::string& word, const std::string& src_lang,
                                     const std::string& dst_lang);

protected:
  virtual std::vector<std::string> do_translate(const std::string& word, const LangPair& pair) = 0;
};

/// Splits machine-translation output listing alternatives ("a, b; c") into
/// separate normalized lemmas. ASCII, Arabic, ideographic and full-width
/// commas and semicolons all separate.
std::vector<std::string> split_alternatives(std::string_view text);

/// Offline stand-in for machine translation, driven by a lookup table.
/// Table values pass through split_alternatives like live MT output.
class MockTranslationProvider final : public TranslationProvider {
public:
  explicit MockTranslationProvider(std::string name) : name_(std::move(name)) {}

  /// Reads "src<TAB>dst<TAB>word<TAB>translation[<TAB>translation...]" lines;
  /// '#' lines are comments. Every pair seen is declared supported.
  static std::shared_ptr<MockTranslationProvider> load(const std::filesystem::path& path,
                                                       std::string name);

  void add(const std::string& src, const std::string& dst, const std::string& word,
           std::vector<std::string> translations);
  void declare_pair(LangPair pair) { pairs_.insert(std::move(pair)); }
  /// When set, any same-language request returns the word itself.
  void set_identity(bool on) noexcept { identity_ = on; }

  const std::string& name() const noexcept override { return name_; }
  bool supports(const LangPair& pair) const override;
  std::size_t calls() const noexcept { return calls_.load(); }

protected:
  std::vector<std::string> do_translate(const std::string& word, const LangPair& pair) override;

private:
  std::string name_;
  std::set<LangPair> pairs_;
  std::map<std::tuple<std::string, std::string, std::string>, std::vector<std::string>> table_;
  bool identity_ = false;
  std::atomic<std::size_t> calls_{0};
};

/// Exact-headword lookup in one bilingual dictionary. No stemming.
class DictionaryProvider final : public TranslationProvider {
public:
  DictionaryProvider(std::string name, std::shared_ptr<const BilingualDictionary> dictionary)
      : name_(std::move(name)), dictionary_(std::move(dictionary)) {}

  const std::string& name() const noexcept override { return name_; }
  bool supports(const LangPair& pair) const override;
  std::size_t calls() const noexcept { return calls_.load(); }

protected:
  std::vector<std::string> do_translate(const std::string& word, const LangPair& pair) override;

private:
  std::string name_;
  std::shared_ptr<const BilingualDictionary> dictionary_;
  std::atomic<std::size_t> calls_{0};
};

struct CacheKey {
  std::string provider;
  std::string src;
  std::string dst;
  std::string word;

  friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

/// Persistent, append-only translation memo. One record per line:
///   provider<TAB>src<TAB>dst<TAB>word[<TAB>translation...]
/// Reads may run concurrently; writes are serialized.
class TranslationCache {
public:
  /// In-memory only.
  TranslationCache() = default;
  /// Loads `path` if it exists and appends new records to it. Throws
  /// CacheError when the file is unreadable, malformed or not writable.
  explicit TranslationCache(std::filesystem::path path);

  std::optional<std::vector<std::string>> lookup(const CacheKey& key) const;
  /// No-op when the key is already cached.
  void store(const CacheKey& key, const std::vector<std::string>& translations);

  std::size_t size() const;
  /// Rewrites the backing file with records sorted by key.
  void compact();
  void write_sorted(std::ostream& out) const;

private:
  std::filesystem::path path_;
  std::ofstream log_;
  mutable std::shared_mutex mutex_;
  std::map<CacheKey, std::vector<std::string>> records_;
};

/// Memoizing wrapper; otherwise behaves exactly like the wrapped provider.
class CachedProvider final : public TranslationProvider {
public:
  CachedProvider(std::shared_ptr<TranslationProvider> inner, std::shared_ptr<TranslationCache> cache)
      : inner_(std::move(inner)), cache_(std::move(cache)) {}

  const std::string& name() const noexcept override { return inner_->name(); }
  bool supports(const LangPair& pair) const override { return inner_->supports(pair); }
  /// Lookups that reached the wrapped provider.
  std::size_t backing_calls() const noexcept { return backing_calls_.load(); }

protected:
  std::vector<std::string> do_translate(const std::string& word, const LangPair& pair) override;

private:
  std::shared_ptr<TranslationProvider> inner_;
  std::shared_ptr<TranslationCache> cache_;
  std::atomic<std::size_t> backing_calls_{0};
};

std::shared_ptr<CachedProvider> cached(std::shared_ptr<TranslationProvider> provider,
                                       std::shared_ptr<TranslationCache> cache);

struct PivotedTranslation {
  std::string word;
  std::string pivot_word;

  friend bool operator==(const PivotedTranslation&, const PivotedTranslation&) = default;
};

/// Two-stage translation src -> pivot -> dst. Every second-stage output is
/// tagged with the pivot word it came from; order and duplicates are kept.
std::vector<PivotedTranslation> pivot_translate(const std::string& word, const std::string& src_lang,
                                                const std::string& dst_lang,
                                                const std::string& pivot_lang,
                                                TranslationProvider& first,
                                                TranslationProvider& second);

/// Maps each language pair to the provider that serves it.
class ProviderRegistry {
public:
  /// Throws CapabilityError if the provider does not support the pair.
  void assign(const LangPair& pair, std::shared_ptr<TranslationProvider> provider);
  TranslationProvider* find(const LangPair& pair) const;
  /// Throws CapabilityError when no provider is assigned.
  TranslationProvider& require(const LangPair& pair) const;

private:
  std::map<LangPair, std::shared_ptr<TranslationProvider>> providers_;
};

}  // namespace wnsynth
