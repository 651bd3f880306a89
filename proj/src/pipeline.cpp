#include "wnsynth/pipeline.hpp"

#include <atomic>
#include <exception>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <set>
#include <thread>

#include "wnsynth/error.hpp"
#include "wnsynth/normalize.hpp"

namespace wnsynth {

std::string_view to_string(SynsetStatus s) noexcept {
  switch (s) {
    case SynsetStatus::Generated: return "generated";
    case SynsetStatus::Empty: return "empty";
    case SynsetStatus::Error: return "error";
  }
  return "?";
}

std::size_t RunReport::count(SynsetStatus status) const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.status == status;
  return n;
}

void RunReport::write_jsonl(std::ostream& out, const std::string& run_tag) const {
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["run"] = run_tag;
    j["id"] = r.id.str();
    j["status"] = to_string(r.status);
    j["tokens"] = r.tokens;
    if (!r.detail.empty()) j["detail"] = r.detail;
    out << j.dump() << '\n';
  }
}

namespace {

struct SynsetWork {
  std::optional<CandidateSet> set;
  RunRecord record;
};

class Generator {
public:
  Generator(const WordnetRefs& wordnets, const PipelineConfig& cfg, Approach approach)
      : wordnets_(wordnets), cfg_(cfg), approach_(approach) {
    validate();
  }

  GenerationResult run() {
    std::set<OffsetPos> ids;
    for (const auto* wn : wordnets_)
      for (const auto& [id, synset] : wn->entries()) ids.insert(id);
    std::vector<OffsetPos> order(ids.begin(), ids.end());
    std::vector<std::optional<SynsetWork>> results(order.size());

    std::size_t workers = std::max<std::size_t>(1, std::min(cfg_.workers, order.size()));
    if (workers == 1) {
      for (std::size_t i = 0; i < order.size(); ++i) results[i] = process(order[i]);
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
          pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < order.size();) {
              try {
                results[i] = process(order[i]);
              } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = order.size();
              }
            }
          });
        }
      }
      if (failure) std::rethrow_exception(failure);
    }

    GenerationResult out;
    for (auto& r : results) {
      if (r->set) out.sets.emplace(r->record.id, std::move(*r->set));
      out.report.records.push_back(std::move(r->record));
    }
    return out;
  }

private:
  void validate() const {
    if (!cfg_.providers) throw ConfigError("pipeline has no provider registry");
    if (cfg_.target_lang.empty()) throw ConfigError("pipeline has no target language");
    if (wordnets_.empty()) throw ConfigError("pipeline needs at least one wordnet");
    std::set<std::string> names;
    for (const auto* wn : wordnets_) {
      if (!names.insert(wn->name()).second)
        throw ConfigError("wordnet '" + wn->name() + "' configured twice");
      for (const auto& pair : required_pairs(*wn)) cfg_.providers->require(pair);
    }
  }

  std::vector<LangPair> required_pairs(const WordnetTable& wn) const {
    if (approach_ != Approach::IWND) return {{wn.lang(), cfg_.target_lang}};
    std::vector<LangPair> pairs{{cfg_.pivot_lang, cfg_.target_lang}};
    if (wn.lang() != cfg_.pivot_lang) pairs.push_back({wn.lang(), cfg_.pivot_lang});
    return pairs;
  }

  template <class F>
  auto with_retries(F&& call) const {
    for (int attempt = 0;; ++attempt) {
      try {
        return call();
      } catch (const ProviderError&) {
        if (attempt >= cfg_.retries) throw;
        if (cfg_.retry_backoff.count() > 0)
          std::this_thread::sleep_for(cfg_.retry_backoff * (attempt + 1));
      }
    }
  }

  void translate_word(const WordnetTable& wn, const std::string& word,
                      std::vector<Candidate>& out) const {
    const auto& target = cfg_.target_lang;
    if (approach_ != Approach::IWND) {
      auto& provider = cfg_.providers->require({wn.lang(), target});
      auto translations = with_retries([&] { return provider.translate(word, wn.lang(), target); });
      for (auto& t : translations) {
        auto lemma = normalize_lemma(t);
        if (!lemma.empty()) out.push_back(Candidate{std::move(lemma), wn.name(), word, std::nullopt, approach_});
      }
      return;
    }

    auto& second = cfg_.providers->require({cfg_.pivot_lang, target});
    std::vector<PivotedTranslation> pivoted;
    if (wn.lang() == cfg_.pivot_lang) {
      for (auto& t : with_retries([&] { return second.translate(word, cfg_.pivot_lang, target); }))
        pivoted.push_back({std::move(t), word});
    } else {
      auto& first = cfg_.providers->require({wn.lang(), cfg_.pivot_lang});
      pivoted = with_retries([&] {
        return pivot_translate(word, wn.lang(), target, cfg_.pivot_lang, first, second);
      });
    }
    for (auto& p : pivoted) {
      auto lemma = normalize_lemma(p.word);
      if (!lemma.empty())
        out.push_back(Candidate{std::move(lemma), wn.name(), word, std::move(p.pivot_word), approach_});
    }
  }

  SynsetWork process(const OffsetPos& id) const {
    SynsetWork work{std::nullopt, RunRecord{id, SynsetStatus::Empty, 0, {}}};
    std::vector<Candidate> candidates;
    try {
      for (const auto* wn : wordnets_) {
        const auto* synset = wn->find(id);
        if (!synset) continue;
        for (const auto& word : synset->words) translate_word(*wn, word, candidates);
      }
    } catch (const ProviderError& e) {
      work.record.status = SynsetStatus::Error;
      work.record.detail = e.what();
      return work;
    }
    work.record.tokens = candidates.size();
    if (candidates.empty()) return work;
    work.record.status = SynsetStatus::Generated;
    work.set.emplace(id, cfg_.target_lang, std::move(candidates), wordnets_.size());
    return work;
  }

  const WordnetRefs& wordnets_;
  const PipelineConfig& cfg_;
  Approach approach_;
};

void expect_approach(const PipelineConfig& cfg, Approach a) {
  if (cfg.approach != a)
    throw ConfigError("pipeline configured for " + std::string(to_string(cfg.approach)) +
                      ", called as " + std::string(to_string(a)));
}

}  // namespace

GenerationResult generate_dr(const WordnetTable& pwn, const PipelineConfig& cfg) {
  expect_approach(cfg, Approach::DR);
  if (pwn.lang() != "eng") throw ConfigError("DR translates the English PWN; got '" + pwn.lang() + "'");
  WordnetRefs refs{&pwn};
  return Generator(refs, cfg, Approach::DR).run();
}

GenerationResult generate_iw(const WordnetRefs& wordnets, const PipelineConfig& cfg) {
  expect_approach(cfg, Approach::IW);
  return Generator(wordnets, cfg, Approach::IW).run();
}

GenerationResult generate_iwnd(const WordnetRefs& wordnets, const PipelineConfig& cfg) {
  expect_approach(cfg, Approach::IWND);
  return Generator(wordnets, cfg, Approach::IWND).run();
}

GenerationResult generate(const WordnetRefs& wordnets, const PipelineConfig& cfg) {
  switch (cfg.approach) {
    case Approach::DR:
      if (wordnets.size() != 1) throw ConfigError("DR takes exactly the PWN table");
      return generate_dr(*wordnets.front(), cfg);
    case Approach::IW: return generate_iw(wordnets, cfg);
    case Approach::IWND: return generate_iwnd(wordnets, cfg);
  }
  throw ConfigError("unknown approach");
}

}  // namespace wnsynth
