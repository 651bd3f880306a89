#include "wnsynth/assembly.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wnsynth/error.hpp"
#include "wnsynth/normalize.hpp"

namespace wnsynth {

namespace {

std::string join(const std::set<std::string>& items, std::string_view sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    std::uint64_t r = rng();
    if (r < limit) return r % n;
  }
}

void canonicalize(GeneratedEntry& entry) {
  std::sort(entry.words.begin(), entry.words.end());
  entry.words.erase(std::unique(entry.words.begin(), entry.words.end()), entry.words.end());
  std::sort(entry.provenance.begin(), entry.provenance.end());
  entry.provenance.erase(std::unique(entry.provenance.begin(), entry.provenance.end()),
                         entry.provenance.end());
}

}  // namespace

GeneratedWordnet assemble_wordnet(const std::map<OffsetPos, CandidateSet>& sets,
                                  std::string target_lang, const std::string& run_tag,
                                  std::vector<SelectionOutcome>* outcomes) {
  GeneratedWordnet gw;
  gw.target_lang = std::move(target_lang);
  gw.run_tags.insert(run_tag);
  for (const auto& [id, cs] : sets) {
    auto outcome = rank_and_select(cs);
    if (!outcome.accepted.empty()) {
      GeneratedEntry entry;
      for (const auto& r : outcome.accepted) {
        entry.words.push_back(r.word);
        entry.provenance.push_back({run_tag, outcome.selection, r});
      }
      canonicalize(entry);
      gw.entries.emplace(id, std::move(entry));
    }
    if (outcomes) outcomes->push_back(std::move(outcome));
  }
  return gw;
}

GeneratedWordnet merge_wordnets(std::span<const GeneratedWordnet> parts) {
  GeneratedWordnet merged;
  for (const auto& part : parts) {
    if (merged.target_lang.empty())
      merged.target_lang = part.target_lang;
    else if (part.target_lang != merged.target_lang)
      throw IntegrityError("cannot merge wordnets for '" + merged.target_lang + "' and '" +
                           part.target_lang + "'");
    merged.run_tags.insert(part.run_tags.begin(), part.run_tags.end());
    for (const auto& [id, entry] : part.entries) {
      auto& dst = merged.entries[id];
      dst.words.insert(dst.words.end(), entry.words.begin(), entry.words.end());
      dst.provenance.insert(dst.provenance.end(), entry.provenance.begin(), entry.provenance.end());
    }
  }
  for (auto& [id, entry] : merged.entries) canonicalize(entry);
  return merged;
}

std::string CoverageReport::to_text() const {
  std::ostringstream out;
  out << "language: " << target_lang << '\n'
      << "runs: " << join(run_tags, ",") << '\n'
      << "synsets: " << synset_count << '\n'
      << "pwn synsets: " << pwn_total << '\n'
      << "coverage: " << percent_display() << "%\n";
  return out.str();
}

std::string CoverageReport::to_json_line() const {
  nlohmann::ordered_json j;
  j["lang"] = target_lang;
  j["runs"] = std::vector<std::string>(run_tags.begin(), run_tags.end());
  j["synsets"] = synset_count;
  j["pwn_total"] = pwn_total;
  j["coverage_percent"] = percent_display();
  return j.dump();
}

CoverageReport coverage_report(const GeneratedWordnet& gw, std::size_t pwn_total) {
  if (pwn_total == 0) throw std::invalid_argument("PWN synset total must be positive");
  CoverageReport r;
  r.target_lang = gw.target_lang;
  r.run_tags = gw.run_tags;
  r.synset_count = gw.synset_count();
  r.pwn_total = pwn_total;
  r.percent = Rational(static_cast<std::int64_t>(r.synset_count) * 100,
                       static_cast<std::int64_t>(pwn_total));
  return r;
}

EvalSample sample_eval_set(const GeneratedWordnet& gw, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample size must be at least 1");
  std::vector<OffsetPos> ids;
  ids.reserve(gw.entries.size());
  for (const auto& [id, entry] : gw.entries) ids.push_back(id);

  const std::size_t k = std::min(n, ids.size());
  std::mt19937_64 rng(seed);
  // partial Fisher-Yates: the first k slots end up a uniform k-subset
  for (std::size_t i = 0; i < k; ++i) {
    auto j = i + static_cast<std::size_t>(bounded(rng, ids.size() - i));
    std::swap(ids[i], ids[j]);
  }
  ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(k), ids.end());
  std::sort(ids.begin(), ids.end());

  EvalSample sample{seed, n, {}};
  for (const auto& id : ids) sample.items.push_back({id, gw.entries.at(id).words, std::nullopt});
  return sample;
}

void write_rating_sheet(std::ostream& out, const EvalSample& sample, const std::string& target_lang,
                        std::span<const std::string> header_lines) {
  out << "# rating sheet\t" << target_lang << "\tseed=" << sample.seed
      << "\trequested=" << sample.requested << "\tsize=" << sample.items.size() << '\n';
  out << "# scores: 5 excellent, 4 good, 3 average, 2 fair, 1 bad\n";
  for (const auto& line : header_lines) out << "# " << line << '\n';
  for (const auto& item : sample.items) {
    out << item.id.str() << '\t';
    for (std::size_t i = 0; i < item.words.size(); ++i) out << (i ? "; " : "") << item.words[i];
    out << '\t';
    if (item.score) out << *item.score;
    out << '\n';
  }
}

std::vector<Rating> read_rating_sheet(std::istream& in) {
  std::vector<Rating> ratings;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_fields(line, '\t');
    if (fields.size() != 3) throw ParseError("rating row needs 3 fields", line_no);
    auto id = OffsetPos::parse(fields[0]);
    if (!id) throw ParseError("malformed offset-pos '" + std::string(fields[0]) + "'", line_no);
    if (fields[2].empty()) continue;
    auto score = parse_int(fields[2]);
    if (!score) throw ParseError("score is not an integer", line_no);
    if (*score < 1 || *score > 5)
      throw ValidationError("line " + std::to_string(line_no) + ": score " + std::to_string(*score) +
                            " outside 1..5");
    ratings.push_back({*id, static_cast<int>(*score)});
  }
  return ratings;
}

ScoreSummary aggregate_scores(std::span<const Rating> ratings) {
  ScoreSummary summary;
  for (const auto& r : ratings) {
    if (r.score < 1 || r.score > 5)
      throw ValidationError(r.id.str() + ": score " + std::to_string(r.score) + " outside 1..5");
    auto& s = summary.per_synset[r.id];
    ++s.count;
    s.total += r.score;
  }
  summary.rating_count = ratings.size();
  if (summary.per_synset.empty()) return summary;

  // overall = (sum of per-synset means) / synset count, kept exact
  Rational sum(0, 1);
  for (auto& [id, s] : summary.per_synset) {
    s.mean = Rational(s.total, static_cast<std::int64_t>(s.count));
    sum = sum + s.mean;
  }
  summary.overall = sum * Rational(1, static_cast<std::int64_t>(summary.per_synset.size()));
  return summary;
}

std::string export_tab(const GeneratedWordnet& gw, const std::string& wn_name,
                       const ExportOptions& options) {
  if (gw.entries.empty()) throw ValidationError("nothing to export: wordnet has no synsets");
  std::ostringstream out;
  out << "# " << wn_name << '\t' << gw.target_lang << "\truns=" << join(gw.run_tags, ",");
  if (options.seed) out << "\tseed=" << *options.seed;
  out << '\n';
  for (const auto& line : options.header_lines) out << "# " << line << '\n';

  for (const auto& [id, entry] : gw.entries) {
    const auto key = id.str();
    for (const auto& word : entry.words) out << key << "\tlemma\t" << word << '\n';
    if (!options.provenance) continue;
    for (const auto& p : entry.provenance) {
      const auto& c = p.candidate;
      out << key << "\twnsynth:provenance\t" << c.word << '\t' << p.run_tag << '\t'
          << to_string(p.selection) << '\t' << c.occur << '\t' << c.num_dst_wordnets << '\t'
          << c.rank.num() << '/' << c.rank.den() << '\n';
    }
  }
  return out.str();
}

ExportedWordnet read_export(std::istream& in) {
  ExportedWordnet ex;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string_view body(line);
      body.remove_prefix(body.starts_with("# ") ? 2 : 1);
      if (!have_header) {
        auto fields = split_fields(body, '\t');
        if (fields.size() < 2) throw ParseError("export header needs name and language", line_no);
        ex.name = fields[0];
        ex.wordnet.target_lang = fields[1];
        for (std::size_t i = 2; i < fields.size(); ++i) {
          if (!fields[i].starts_with("runs=")) continue;
          for (auto tag : split_fields(fields[i].substr(5), ','))
            if (!tag.empty()) ex.wordnet.run_tags.emplace(tag);
        }
        have_header = true;
      } else {
        ex.header_lines.emplace_back(body);
      }
      continue;
    }
    if (!have_header) throw ParseError("missing export header", line_no);
    if (!is_valid_utf8(line)) throw EncodingError("invalid UTF-8", line_no);

    auto fields = split_fields(line, '\t');
    auto id = OffsetPos::parse(fields[0]);
    if (!id) throw ParseError("malformed offset-pos '" + std::string(fields[0]) + "'", line_no);
    if (fields.size() < 3) throw ParseError("row needs at least 3 fields", line_no);
    if (fields[1] == "lemma") {
      if (fields[2].empty()) throw ParseError("empty lemma", line_no);
      ex.wordnet.entries[*id].words.emplace_back(fields[2]);
    } else if (fields[1] == "wnsynth:provenance") {
      if (fields.size() != 8) throw ParseError("provenance row needs 8 fields", line_no);
      auto selection = selection_case_from_string(fields[4]);
      auto occur = parse_int(fields[5]);
      auto dst = parse_int(fields[6]);
      auto rank = split_fields(fields[7], '/');
      std::optional<std::int64_t> num, den;
      if (rank.size() == 2) {
        num = parse_int(rank[0]);
        den = parse_int(rank[1]);
      }
      if (!selection || !occur || !dst || !num || !den || *occur < 1 || *dst < 1 || *den < 1 || *num < 0)
        throw ParseError("malformed provenance row", line_no);
      RankedCandidate c{std::string(fields[2]), static_cast<std::size_t>(*occur),
                        static_cast<std::size_t>(*dst), Rational(*num, *den)};
      ex.wordnet.entries[*id].provenance.push_back({std::string(fields[3]), *selection, std::move(c)});
    }
  }
  if (!have_header) throw ParseError("missing export header");
  for (auto it = ex.wordnet.entries.begin(); it != ex.wordnet.entries.end();) {
    if (it->second.words.empty()) throw ParseError(it->first.str() + ": provenance without lemma");
    canonicalize(it->second);
    ++it;
  }
  return ex;
}

ExportedWordnet load_export(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_export(in);
}

}  // namespace wnsynth
