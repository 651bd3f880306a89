#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "support/mini_suite.hpp"
#include "wnsynth/error.hpp"
#include "wnsynth/pipeline.hpp"
#include "wnsynth/ranking.hpp"

using namespace wnsynth;

namespace {

OffsetPos id(const char* s) { return *OffsetPos::parse(s); }

std::map<std::string, std::size_t> tally(const CandidateSet& cs) {
  std::map<std::string, std::size_t> out;
  for (const auto& c : cs.candidates()) ++out[c.word];
  return out;
}

// Throws ProviderError for the first `failures` calls per word listed in
// `flaky`, then defers to the wrapped provider.
class FlakyProvider final : public TranslationProvider {
public:
  FlakyProvider(std::shared_ptr<TranslationProvider> inner, std::map<std::string, int> flaky)
      : inner_(std::move(inner)), remaining_(std::move(flaky)) {}
  const std::string& name() const noexcept override { return inner_->name(); }
  bool supports(const LangPair& p) const override { return inner_->supports(p); }

protected:
  std::vector<std::string> do_translate(const std::string& word, const LangPair& p) override {
    {
      std::lock_guard lock(mutex_);
      auto it = remaining_.find(word);
      if (it != remaining_.end() && it->second != 0) {
        if (it->second > 0) --it->second;
        throw ProviderError("simulated outage for " + word);
      }
    }
    return inner_->translate(word, p.src, p.dst);
  }

private:
  std::shared_ptr<TranslationProvider> inner_;
  std::mutex mutex_;
  std::map<std::string, int> remaining_;  // -1 = always fail
};

class PipelineTest : public ::testing::Test {
protected:
  mini::Suite suite;
};

}  // namespace

TEST_F(PipelineTest, DirectTranslationOfPwn) {
  auto reg = suite.vie_registry();
  PipelineConfig cfg{Approach::DR, "vie", "eng", &reg};
  auto result = generate_dr(suite.pwn, cfg);
  EXPECT_EQ(result.report.records.size(), 20u);
  const auto& cs = result.sets.at(id("00010435-v"));
  EXPECT_EQ(cs.num_wordnets(), 1u);
  EXPECT_EQ(cs.num_candidates(), 3u);
  for (const auto& c : cs.candidates()) {
    EXPECT_EQ(c.approach, Approach::DR);
    EXPECT_EQ(c.source_wordnet, "PWN");
    EXPECT_FALSE(c.pivot_word);
  }
  auto out = rank_and_select(cs);
  EXPECT_EQ(out.selection, SelectionCase::Case3);
  EXPECT_EQ(rank_and_select(result.sets.at(id("00952615-n"))).selection, SelectionCase::Case1);
}

TEST_F(PipelineTest, DirectRequiresEnglishSource) {
  auto reg = suite.vie_registry();
  PipelineConfig cfg{Approach::DR, "vie", "eng", &reg};
  EXPECT_THROW(generate_dr(suite.fwn, cfg), ConfigError);
  EXPECT_THROW(generate({&suite.pwn, &suite.fwn}, cfg), ConfigError);
}

TEST_F(PipelineTest, DirectMatchesSingleWordnetIwApartFromLabel) {
  auto reg = suite.vie_registry();
  auto dr = generate_dr(suite.pwn, PipelineConfig{Approach::DR, "vie", "eng", &reg});
  auto iw = generate_iw({&suite.pwn}, PipelineConfig{Approach::IW, "vie", "eng", &reg});
  ASSERT_EQ(dr.sets.size(), iw.sets.size());
  for (const auto& [key, cs] : dr.sets) {
    const auto& other = iw.sets.at(key);
    ASSERT_EQ(cs.num_wordnets(), other.num_wordnets());
    ASSERT_EQ(cs.candidates().size(), other.candidates().size());
    for (std::size_t i = 0; i < cs.candidates().size(); ++i) {
      auto relabelled = other.candidates()[i];
      relabelled.approach = Approach::DR;
      EXPECT_EQ(cs.candidates()[i], relabelled);
    }
    EXPECT_EQ(compute_ranks(cs), compute_ranks(other));
  }
}

TEST_F(PipelineTest, IntermediateTwoWordnets) {
  auto reg = suite.vie_registry();
  auto result = generate_iw({&suite.pwn, &suite.fwn}, PipelineConfig{Approach::IW, "vie", "eng", &reg});
  const auto& send = result.sets.at(id("01437254-v"));
  EXPECT_EQ(send.num_wordnets(), 2u);
  EXPECT_EQ(send.num_candidates(), 4u);
  auto ranked = compute_ranks(send);
  EXPECT_EQ(ranked[0].word, "gửi");
  EXPECT_EQ(ranked[0].rank, Rational(3, 4));
  EXPECT_EQ(ranked[1].rank, Rational(1, 8));
  EXPECT_EQ(rank_and_select(send).selection, SelectionCase::Case2);

  auto object = rank_and_select(result.sets.at(id("00002684-n")));
  EXPECT_EQ(object.selection, SelectionCase::Case2);
  ASSERT_EQ(object.accepted.size(), 2u);
  EXPECT_EQ(object.accepted[0].rank, Rational(2, 5));
  EXPECT_EQ(object.rejected.at(0).rank, Rational(1, 10));
}

TEST_F(PipelineTest, IntermediateFourWordnets) {
  auto reg = suite.vie_registry();
  auto result = generate_iw({&suite.pwn, &suite.fwn, &suite.jwn, &suite.wwn},
                            PipelineConfig{Approach::IW, "vie", "eng", &reg});
  const auto& send = result.sets.at(id("01437254-v"));
  EXPECT_EQ(send.num_candidates(), 7u);
  EXPECT_EQ(send.num_wordnets(), 4u);
  auto ranked = compute_ranks(send);
  EXPECT_EQ(ranked[0].word, "gửi");
  EXPECT_EQ(ranked[0].occur, 5u);
  EXPECT_EQ(ranked[0].num_dst_wordnets, 4u);
  EXPECT_EQ(ranked[0].rank, Rational(5, 7));

  // present in three of the four wordnets; numWordnets stays 4
  const auto& breathe = result.sets.at(id("00006802-v"));
  EXPECT_EQ(breathe.num_wordnets(), 4u);

  auto electricity = rank_and_select(result.sets.at(id("00952615-n")));
  EXPECT_EQ(electricity.selection, SelectionCase::Case1);
  EXPECT_EQ(electricity.accepted.at(0).word, "điện");
}

TEST_F(PipelineTest, PivotThroughEnglishAndDictionary) {
  auto reg = suite.dis_registry();
  auto result = generate_iwnd({&suite.pwn, &suite.fwn, &suite.jwn, &suite.wwn},
                              PipelineConfig{Approach::IWND, "dis", "eng", &reg});
  EXPECT_EQ(result.report.records.size(), 20u);
  EXPECT_EQ(result.report.count(SynsetStatus::Error), 0u);

  const auto& dog = result.sets.at(id("02084071-n"));
  EXPECT_EQ(tally(dog), (std::map<std::string, std::size_t>{{"sisa", dog.num_candidates()}}));
  for (const auto& c : dog.candidates()) {
    ASSERT_TRUE(c.pivot_word);
    EXPECT_EQ(c.approach, Approach::IWND);
    if (c.source_wordnet == "PWN") {
      EXPECT_EQ(*c.pivot_word, c.source_word);
    }
  }
  EXPECT_EQ(rank_and_select(dog).selection, SelectionCase::Case1);

  auto cat = compute_ranks(result.sets.at(id("02121620-n")));
  ASSERT_EQ(cat.size(), 1u);
  EXPECT_EQ(cat[0].rank, Rational(3, 4));

  auto send = rank_and_select(result.sets.at(id("01437254-v")));
  EXPECT_EQ(send.selection, SelectionCase::Case3);
  EXPECT_EQ(result.sets.at(id("01437254-v")).num_candidates(), 10u);

  for (const char* missing : {"00001740-n", "00001930-n", "00002684-n", "00010435-v", "00001740-a", "00005107-s"}) {
    EXPECT_FALSE(result.sets.count(id(missing))) << missing;
  }
  EXPECT_EQ(result.report.count(SynsetStatus::Empty), 6u);
  EXPECT_EQ(result.report.count(SynsetStatus::Generated), 14u);
}

TEST_F(PipelineTest, MissingProviderFailsBeforeAnyCall) {
  ProviderRegistry reg;
  reg.assign({"eng", "vie"}, suite.mt_vie);
  EXPECT_THROW(generate_iw({&suite.pwn, &suite.fwn}, PipelineConfig{Approach::IW, "vie", "eng", &reg}),
               CapabilityError);
  EXPECT_EQ(suite.mt_vie->calls(), 0u);

  auto dis = suite.dis_registry();
  ProviderRegistry partial;
  partial.assign({"fin", "eng"}, suite.mt_eng);
  EXPECT_THROW(generate_iwnd({&suite.fwn}, PipelineConfig{Approach::IWND, "dis", "eng", &partial}),
               CapabilityError);
}

TEST_F(PipelineTest, DuplicateWordnetNameIsConfigError) {
  auto reg = suite.vie_registry();
  EXPECT_THROW(generate_iw({&suite.fwn, &suite.fwn}, PipelineConfig{Approach::IW, "vie", "eng", &reg}),
               ConfigError);
}

TEST_F(PipelineTest, TransientFailuresAreRetried) {
  auto flaky = std::make_shared<FlakyProvider>(suite.mt_vie, std::map<std::string, int>{{"send", 2}});
  ProviderRegistry reg;
  reg.assign({"eng", "vie"}, flaky);
  PipelineConfig cfg{Approach::IW, "vie", "eng", &reg};
  cfg.retries = 2;
  auto result = generate_iw({&suite.pwn}, cfg);
  EXPECT_EQ(result.report.count(SynsetStatus::Error), 0u);
  EXPECT_TRUE(result.sets.count(id("01437254-v")));
}

TEST_F(PipelineTest, PersistentFailureQuarantinesSynset) {
  auto flaky = std::make_shared<FlakyProvider>(suite.mt_vie, std::map<std::string, int>{{"send", -1}});
  ProviderRegistry reg;
  reg.assign({"eng", "vie"}, flaky);
  PipelineConfig cfg{Approach::IW, "vie", "eng", &reg};
  cfg.retries = 1;
  cfg.workers = 3;
  auto result = generate_iw({&suite.pwn}, cfg);
  EXPECT_EQ(result.report.count(SynsetStatus::Error), 1u);
  EXPECT_FALSE(result.sets.count(id("01437254-v")));
  EXPECT_EQ(result.sets.size(), 19u);
  auto rec = std::find_if(result.report.records.begin(), result.report.records.end(),
                          [](const RunRecord& r) { return r.status == SynsetStatus::Error; });
  EXPECT_EQ(rec->id, id("01437254-v"));
  EXPECT_NE(rec->detail.find("send"), std::string::npos);

  std::ostringstream jsonl;
  result.report.write_jsonl(jsonl, "IW:PWN");
  EXPECT_NE(jsonl.str().find("\"error\""), std::string::npos);
}

TEST_F(PipelineTest, WorkerCountDoesNotChangeOutput) {
  auto reg = suite.vie_registry();
  WordnetRefs all{&suite.pwn, &suite.fwn, &suite.jwn, &suite.wwn};
  PipelineConfig serial{Approach::IW, "vie", "eng", &reg};
  auto a = generate_iw(all, serial);
  std::ostringstream ra;
  a.report.write_jsonl(ra, "t");
  for (std::size_t workers : {2u, 4u, 16u}) {
    PipelineConfig parallel = serial;
    parallel.workers = workers;
    auto b = generate_iw(all, parallel);
    EXPECT_EQ(a.sets, b.sets);
    std::ostringstream rb;
    b.report.write_jsonl(rb, "t");
    EXPECT_EQ(ra.str(), rb.str());
  }
}
