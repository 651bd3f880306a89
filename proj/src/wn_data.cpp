#include "wnsynth/wn_data.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <unordered_set>

#include "wnsynth/error.hpp"
#include "wnsynth/normalize.hpp"

namespace wnsynth {

namespace {

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string strip_adjective_marker(std::string_view lemma) {
  for (std::string_view marker : {"(ip)", "(a)", "(p)"}) {
    if (lemma.size() > marker.size() && lemma.ends_with(marker)) {
      lemma.remove_suffix(marker.size());
      break;
    }
  }
  std::string out(lemma);
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

bool is_lemma_relation(std::string_view relation, std::string_view lang) {
  if (relation == "lemma") return true;
  auto colon = relation.rfind(':');
  if (colon == std::string_view::npos || relation.substr(colon + 1) != "lemma") return false;
  // "fin:lemma" in a multi-language file: only the expected language counts.
  return lang.empty() || relation.substr(0, colon) == lang;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

}  // namespace

std::vector<std::string_view> split_fields(std::string_view line, char delimiter) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = line.find(delimiter, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

Synset make_synset(OffsetPos id, std::string lang, std::string source,
                   const std::vector<std::string>& raw_words) {
  Synset s{id, std::move(lang), {}, std::move(source)};
  std::unordered_set<std::string> seen;
  for (const auto& raw : raw_words) {
    auto w = normalize_lemma(raw);
    if (w.empty() || !seen.insert(w).second) continue;
    s.words.push_back(std::move(w));
  }
  return s;
}

void WordnetTable::insert(Synset synset) {
  if (synset.lang != lang_)
    throw IntegrityError("synset " + synset.id.str() + " has language '" + synset.lang +
                         "' but table " + name_ + " is '" + lang_ + "'");
  auto id = synset.id;
  if (!entries_.emplace(id, std::move(synset)).second)
    throw IntegrityError("duplicate synset " + id.str() + " in " + name_);
}

void WordnetTable::merge(WordnetTable fragment) {
  for (auto& [id, synset] : fragment.entries_) insert(std::move(synset));
}

const Synset* WordnetTable::find(const OffsetPos& id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

void WordnetTable::check_declared_count(std::size_t expected) const {
  if (size() != expected)
    throw IntegrityError(name_ + ": loaded " + std::to_string(size()) + " synsets, declared " +
                         std::to_string(expected));
}

bool BilingualDictionary::add(const std::string& headword, const std::string& translation) {
  auto& list = entries_[headword];
  if (std::find(list.begin(), list.end(), translation) != list.end()) return false;
  list.push_back(translation);
  ++entry_count_;
  return true;
}

const std::vector<std::string>& BilingualDictionary::lookup(const std::string& headword) const {
  static const std::vector<std::string> none;
  auto it = entries_.find(headword);
  return it == entries_.end() ? none : it->second;
}

WordnetTable parse_wndb(std::istream& in, Pos file_pos, std::string name, std::string lang) {
  WordnetTable table(std::move(name), lang);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty() || line.starts_with("  ")) continue;

    std::string_view body(line);
    if (auto bar = body.find(" | "); bar != std::string_view::npos) body = body.substr(0, bar);
    auto fields = split_spaces(body);
    if (fields.size() < 4) throw ParseError("too few fields in WNDB record", line_no);

    auto offset = fields[0];
    if (offset.size() != 8 || !std::all_of(offset.begin(), offset.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("non-numeric offset '" + std::string(offset) + "'", line_no);

    auto ss_type = fields[2].size() == 1 ? pos_from_char(fields[2][0]) : std::nullopt;
    if (!ss_type) throw ParseError("bad synset type '" + std::string(fields[2]) + "'", line_no);
    bool pos_ok = *ss_type == file_pos ||
                  (file_pos == Pos::Adjective && *ss_type == Pos::Satellite);
    if (!pos_ok) throw ParseError("synset type does not match data file", line_no);

    unsigned word_count = 0;
    auto wc = fields[3];
    auto [ptr, ec] = std::from_chars(wc.data(), wc.data() + wc.size(), word_count, 16);
    if (ec != std::errc() || ptr != wc.data() + wc.size() || word_count == 0)
      throw ParseError("bad word count '" + std::string(wc) + "'", line_no);
    // words are (lemma, lex_id) pairs, followed by at least the pointer count
    if (fields.size() < 4 + 2 * std::size_t{word_count} + 1)
      throw ParseError("field count does not match word count", line_no);

    std::vector<std::string> words;
    words.reserve(word_count);
    for (unsigned i = 0; i < word_count; ++i) words.push_back(strip_adjective_marker(fields[4 + 2 * i]));

    auto synset = make_synset(OffsetPos::from_parts(offset, *ss_type), lang, table.name(), words);
    if (synset.words.empty()) throw ParseError("synset has no usable lemmas", line_no);
    try {
      table.insert(std::move(synset));
    } catch (const IntegrityError& e) {
      throw IntegrityError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return table;
}

WordnetTable parse_omw_tab(std::istream& in, std::string name, std::string expected_lang,
                           ParseLog* log) {
  std::map<OffsetPos, std::vector<std::string>> lemmas;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      // OMW header: "# <wordnet name>\t<lang>\t<url>\t<license>"
      if (line_no == 1) {
        auto header = split_fields(line, '\t');
        if (header.size() >= 2 && !expected_lang.empty() && header[1].size() == 3 &&
            header[1] != expected_lang)
          throw ParseError("file declares language '" + std::string(header[1]) + "', expected '" +
                               expected_lang + "'",
                           line_no);
      }
      continue;
    }
    if (!is_valid_utf8(line)) throw EncodingError("invalid UTF-8", line_no);

    auto fields = split_fields(line, '\t');
    auto id = OffsetPos::parse(fields[0]);
    if (!id) throw ParseError("malformed offset-pos '" + std::string(fields[0]) + "'", line_no);
    if (fields.size() < 2 || !is_lemma_relation(fields[1], expected_lang)) continue;
    if (fields.size() < 3) throw ParseError("lemma row without a value", line_no);
    lemmas[*id].emplace_back(fields[2]);
  }

  WordnetTable table(std::move(name), expected_lang);
  for (auto& [id, words] : lemmas) {
    auto synset = make_synset(id, expected_lang, table.name(), words);
    if (synset.words.empty()) {
      if (log) log->warnings.push_back(id.str() + ": only empty lemmas");
      continue;
    }
    table.insert(std::move(synset));
  }
  if (table.empty() && log) log->warnings.push_back(table.name() + ": no lemma rows");
  return table;
}

BilingualDictionary parse_dictionary_tsv(std::istream& in, std::string src_lang,
                                         std::string dst_lang, ParseLog* log) {
  BilingualDictionary dict(std::move(src_lang), std::move(dst_lang));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (!is_valid_utf8(line)) throw EncodingError("invalid UTF-8", line_no);
    if (line.empty()) continue;
    if (line.find('\t') == std::string::npos) {
      if (log) {
        ++log->skipped_lines;
        log->warnings.push_back("line " + std::to_string(line_no) + ": no tab separator");
      }
      continue;
    }
    auto fields = split_fields(line, '\t');
    auto headword = normalize_lemma(fields[0]);
    if (headword.empty()) {
      if (log) {
        ++log->skipped_lines;
        log->warnings.push_back("line " + std::to_string(line_no) + ": empty headword");
      }
      continue;
    }
    for (std::size_t i = 1; i < fields.size(); ++i) {
      auto translation = normalize_lemma(fields[i]);
      if (!translation.empty()) dict.add(headword, translation);
    }
  }
  return dict;
}

WordnetTable load_wndb(const std::filesystem::path& path, Pos file_pos, std::string name,
                       std::string lang) {
  auto in = open_or_throw(path);
  return parse_wndb(in, file_pos, std::move(name), std::move(lang));
}

WordnetTable load_omw_tab(const std::filesystem::path& path, std::string name,
                          std::string expected_lang, ParseLog* log) {
  auto in = open_or_throw(path);
  return parse_omw_tab(in, std::move(name), std::move(expected_lang), log);
}

BilingualDictionary load_dictionary_tsv(const std::filesystem::path& path, std::string src_lang,
                                        std::string dst_lang, ParseLog* log) {
  auto in = open_or_throw(path);
  return parse_dictionary_tsv(in, std::move(src_lang), std::move(dst_lang), log);
}

std::optional<Pos> wndb_pos_from_filename(std::string_view filename) {
  if (filename.ends_with("noun")) return Pos::Noun;
  if (filename.ends_with("verb")) return Pos::Verb;
  if (filename.ends_with("adj")) return Pos::Adjective;
  if (filename.ends_with("adv")) return Pos::Adverb;
  return std::nullopt;
}

}  // namespace wnsynth
