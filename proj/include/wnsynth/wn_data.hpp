#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "wnsynth/offset_pos.hpp"

namespace wnsynth {

/// Synsets in PWN 3.0 (117,659 across the four data files).
inline constexpr std::size_t kPwn30SynsetCount = 117659;

struct Synset {
  OffsetPos id;
  std::string lang;
  std::vector<std::string> words;
  std::string source;

  friend bool operator==(const Synset&, const Synset&) = default;
};

/// Builds a synset from raw lemmas: normalizes each, drops empties and
/// repeats (first occurrence wins). The result may have no words; callers
/// decide whether that is an error.
Synset make_synset(OffsetPos id, std::string lang, std::string source,
                   const std::vector<std::string>& raw_words);

/// Non-fatal findings collected while parsing.
struct ParseLog {
  std::vector<std::string> warnings;
  std::size_t skipped_lines = 0;
};

class WordnetTable {
public:
  using Entries = std::map<OffsetPos, Synset>;

  WordnetTable() = default;
  WordnetTable(std::string name, std::string lang) : name_(std::move(name)), lang_(std::move(lang)) {}

  const std::string& name() const noexcept { return name_; }
  const std::string& lang() const noexcept { return lang_; }

  /// Throws IntegrityError if the id is already present or the synset's
  /// language differs from the table's.
  void insert(Synset synset);
  /// Folds in another fragment of the same wordnet (e.g. data.verb after data.noun).
  void merge(WordnetTable fragment);

  const Synset* find(const OffsetPos& id) const;
  bool contains(const OffsetPos& id) const { return entries_.count(id) != 0; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const Entries& entries() const noexcept { return entries_; }

  /// Throws IntegrityError if size() differs from `expected`.
  void check_declared_count(std::size_t expected) const;

  friend bool operator==(const WordnetTable&, const WordnetTable&) = default;

private:
  std::string name_;
  std::string lang_;
  Entries entries_;
};

class BilingualDictionary {
public:
  BilingualDictionary() = default;
  BilingualDictionary(std::string src_lang, std::string dst_lang)
      : src_lang_(std::move(src_lang)), dst_lang_(std::move(dst_lang)) {}

  const std::string& src_lang() const noexcept { return src_lang_; }
  const std::string& dst_lang() const noexcept { return dst_lang_; }

  /// Adds a normalized pair; returns false for an exact repeat.
  bool add(const std::string& headword, const std::string& translation);
  /// Translations in first-seen order; empty when the headword is absent.
  const std::vector<std::string>& lookup(const std::string& headword) const;

  std::size_t entry_count() const noexcept { return entry_count_; }
  std::size_t headword_count() const noexcept { return entries_.size(); }
  const std::map<std::string, std::vector<std::string>>& entries() const noexcept { return entries_; }

  friend bool operator==(const BilingualDictionary&, const BilingualDictionary&) = default;

private:
  std::string src_lang_;
  std::string dst_lang_;
  std::map<std::string, std::vector<std::string>> entries_;
  std::size_t entry_count_ = 0;
};

/// Parses one PWN 3.0 WNDB data file (`data.noun`, `data.verb`, ...).
/// `file_pos` names the file; in `data.adj` both `a` and `s` synsets are accepted.
WordnetTable parse_wndb(std::istream& in, Pos file_pos, std::string name = "PWN",
                        std::string lang = "eng");

/// Parses an Open Multilingual Wordnet tab file, keeping only lemma rows.
WordnetTable parse_omw_tab(std::istream& in, std::string name, std::string expected_lang,
                           ParseLog* log = nullptr);

/// Parses a "headword<TAB>translation[<TAB>translation...]" dictionary.
BilingualDictionary parse_dictionary_tsv(std::istream& in, std::string src_lang,
                                         std::string dst_lang, ParseLog* log = nullptr);

// File-path conveniences; throw ParseError when the file cannot be opened.
WordnetTable load_wndb(const std::filesystem::path& path, Pos file_pos, std::string name = "PWN",
                       std::string lang = "eng");
WordnetTable load_omw_tab(const std::filesystem::path& path, std::string name,
                          std::string expected_lang, ParseLog* log = nullptr);
BilingualDictionary load_dictionary_tsv(const std::filesystem::path& path, std::string src_lang,
                                        std::string dst_lang, ParseLog* log = nullptr);

/// Infers the part of speech from a WNDB file name such as "data.noun".
std::optional<Pos> wndb_pos_from_filename(std::string_view filename);

/// Splits on a single-character delimiter, keeping empty fields.
std::vector<std::string_view> split_fields(std::string_view line, char delimiter);

}  // namespace wnsynth
