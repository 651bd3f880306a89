#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <numeric>

#include "support/rank_oracle.hpp"
#include "wnsynth/ranking.hpp"

using namespace wnsynth;

namespace {

CandidateSet make_set(const char* id, std::vector<std::pair<std::string, std::string>> tokens,
                      std::size_t num_wordnets) {
  std::vector<Candidate> c;
  for (auto& [word, source] : tokens) c.push_back({word, source, "src", std::nullopt, Approach::IW});
  return CandidateSet(*OffsetPos::parse(id), "vie", std::move(c), num_wordnets);
}

const RankedCandidate& find(const std::vector<RankedCandidate>& ranked, const std::string& word) {
  auto it = std::find_if(ranked.begin(), ranked.end(), [&](const auto& r) { return r.word == word; });
  EXPECT_NE(it, ranked.end()) << word;
  return *it;
}

}  // namespace

// Four wordnets, every word translated to the same target word.
TEST(ComputeRanksTest, UnanimousWordRanksOne) {
  auto cs = make_set("00952615-n", {{"điện", "PWN"}, {"điện", "FWN"}, {"điện", "JWN"}, {"điện", "WWN"}}, 4);
  auto ranked = compute_ranks(cs);
  ASSERT_EQ(ranked.size(), 1u);
  EXPECT_EQ(ranked[0].rank, Rational(1, 1));
  EXPECT_EQ(ranked[0].occur, 4u);
  EXPECT_EQ(ranked[0].num_dst_wordnets, 4u);
  EXPECT_EQ(ranked[0].rank_display(), "1.00");
}

// Single-source run over {act, behave, do}.
TEST(ComputeRanksTest, ThreeDistinctSingleSourceTokens) {
  auto cs = make_set("00010435-v", {{"hành động", "PWN"}, {"hoạt động", "PWN"}, {"làm", "PWN"}}, 1);
  auto ranked = compute_ranks(cs);
  ASSERT_EQ(ranked.size(), 3u);
  for (const auto& r : ranked) {
    EXPECT_EQ(r.rank, Rational(1, 3));
    EXPECT_EQ(r.rank_display(), "0.33");
  }
  // ties break on word, bytewise
  EXPECT_EQ(ranked[0].word, "hoạt động");
  EXPECT_EQ(ranked[2].word, "làm");
}

TEST(ComputeRanksTest, HandComputedMixedSources) {
  // tokens [x, x, y]; x from two wordnets, y from one; numWordnets 4
  auto cs = make_set("00000001-n", {{"x", "PWN"}, {"x", "FWN"}, {"y", "PWN"}}, 4);
  auto ranked = compute_ranks(cs);
  EXPECT_EQ(find(ranked, "x").rank, Rational(1, 3));   // (2/3)(2/4)
  EXPECT_EQ(find(ranked, "y").rank, Rational(1, 12));  // (1/3)(1/4)
  EXPECT_EQ(ranked.front().word, "x");
}

TEST(ComputeRanksTest, RepeatsFromOneSourceCountInOccurOnly) {
  auto cs = make_set("00000001-n", {{"x", "PWN"}, {"x", "PWN"}, {"y", "FWN"}}, 2);
  auto ranked = compute_ranks(cs);
  EXPECT_EQ(find(ranked, "x").occur, 2u);
  EXPECT_EQ(find(ranked, "x").num_dst_wordnets, 1u);
  EXPECT_EQ(find(ranked, "x").rank, Rational(1, 3));  // (2/3)(1/2)
}

TEST(SelectCandidatesTest, Case1AcceptsRankOneWord) {
  auto id = *OffsetPos::parse("00952615-n");
  std::vector<RankedCandidate> ranked{{"điện", 4, 4, Rational(1, 1)}, {"x", 1, 1, Rational(1, 3)}};
  auto out = select_candidates(id, ranked);
  EXPECT_EQ(out.selection, SelectionCase::Case1);
  ASSERT_EQ(out.accepted.size(), 1u);
  EXPECT_EQ(out.accepted[0].word, "điện");
  EXPECT_EQ(out.rejected.size(), 1u);
}

// Three wordnets, six tokens; "gửi" appears four times across all three.
TEST(SelectCandidatesTest, Case2AcceptsTopWord) {
  auto cs = make_set("01437254-v",
                     {{"gửi", "PWN"}, {"chỉ đạo", "PWN"}, {"gửi", "FWN"}, {"gửi", "FWN"},
                      {"gửi", "WWN"}, {"gửi hàng", "WWN"}},
                     3);
  auto ranked = compute_ranks(cs);
  EXPECT_EQ(ranked[0].word, "gửi");
  EXPECT_EQ(ranked[0].rank, Rational(2, 3));
  EXPECT_EQ(ranked[0].rank_display(), "0.67");
  auto out = select_candidates(cs.id(), ranked);
  EXPECT_EQ(out.selection, SelectionCase::Case2);
  ASSERT_EQ(out.accepted.size(), 1u);
  EXPECT_EQ(out.accepted[0].word, "gửi");
}

TEST(SelectCandidatesTest, Case3RejectsAllTied) {
  auto cs = make_set("00010435-v", {{"hành động", "PWN"}, {"hoạt động", "PWN"}, {"làm", "PWN"}}, 1);
  auto out = rank_and_select(cs);
  EXPECT_EQ(out.selection, SelectionCase::Case3);
  EXPECT_TRUE(out.accepted.empty());
  EXPECT_EQ(out.rejected.size(), 3u);
}

TEST(SelectCandidatesTest, SingleDistinctWordBelowOneIsCase2) {
  auto cs = make_set("02121620-n", {{"meng", "PWN"}, {"meng", "FWN"}, {"meng", "JWN"}}, 4);
  auto out = rank_and_select(cs);
  EXPECT_EQ(out.selection, SelectionCase::Case2);
  ASSERT_EQ(out.accepted.size(), 1u);
  EXPECT_EQ(out.accepted[0].rank, Rational(3, 4));
}

TEST(SelectCandidatesTest, Case2WithSeveralTopWords) {
  auto cs = make_set("00002684-n",
                     {{"vật", "PWN"}, {"đồ vật", "PWN"}, {"vật thể", "PWN"}, {"đồ vật", "FWN"}, {"vật thể", "FWN"}},
                     2);
  auto out = rank_and_select(cs);
  EXPECT_EQ(out.selection, SelectionCase::Case2);
  ASSERT_EQ(out.accepted.size(), 2u);
  EXPECT_EQ(out.accepted[0].rank, Rational(2, 5));
  EXPECT_EQ(out.rejected[0].word, "vật");
  EXPECT_EQ(out.rejected[0].rank, Rational(1, 10));
}

// Exhaustive comparison with the brute-force oracle over every multiset of
// up to 6 tokens drawn from 3 words x 3 sources, numWordnets 1..4.
TEST(RankingPropertyTest, MatchesOracleExhaustively) {
  const std::vector<std::string> words{"a", "b", "c"};
  const std::vector<std::string> sources{"S1", "S2", "S3"};
  std::size_t checked = 0;
  std::vector<int> combo;
  std::function<void(int, int)> visit = [&](int start, int remaining) {
    if (!combo.empty()) {
      std::vector<oracle::Token> tokens;
      std::vector<Candidate> candidates;
      std::set<std::string> used_sources;
      for (int k : combo) {
        tokens.push_back({words[k / 3], sources[k % 3]});
        candidates.push_back({words[k / 3], sources[k % 3], "w", std::nullopt, Approach::IW});
        used_sources.insert(sources[k % 3]);
      }
      for (std::size_t nw = 1; nw <= 4; ++nw) {
        if (nw < used_sources.size()) continue;
        CandidateSet cs(*OffsetPos::parse("00000001-n"), "x", candidates, nw);
        auto ranked = compute_ranks(cs);
        auto expected = oracle::ranks(tokens, static_cast<long long>(nw));
        ASSERT_EQ(ranked.size(), expected.size());
        std::size_t occur_sum = 0;
        for (const auto& r : ranked) {
          const auto& e = expected.at(r.word);
          ASSERT_EQ(r.occur, static_cast<std::size_t>(e.occur));
          ASSERT_EQ(r.num_dst_wordnets, static_cast<std::size_t>(e.dst));
          ASSERT_EQ(r.rank, Rational(e.num, e.den));
          ASSERT_GT(r.rank, Rational(0, 1));
          ASSERT_LE(r.rank, Rational(1, 1));
          ASSERT_EQ(r.rank == Rational(1, 1), r.occur == cs.num_candidates() && r.num_dst_wordnets == nw);
          occur_sum += r.occur;
        }
        ASSERT_EQ(occur_sum, cs.num_candidates());
        auto out = select_candidates(cs.id(), ranked);
        auto want = oracle::select(expected);
        ASSERT_EQ(static_cast<int>(out.selection), want.case_number);
        std::set<std::string> got;
        for (const auto& r : out.accepted) got.insert(r.word);
        ASSERT_EQ(got, want.accepted);
        ASSERT_EQ(out.accepted.size() + out.rejected.size(), ranked.size());
        ++checked;
      }
    }
    if (remaining == 0) return;
    for (int k = start; k < 9; ++k) {
      combo.push_back(k);
      visit(k, remaining - 1);
      combo.pop_back();
    }
  };
  visit(0, 6);
  EXPECT_GT(checked, 10000u);
}

// Ranks are unchanged when every token is duplicated, since each word keeps
// its occur/numCandidates ratio and its source set.
TEST(RankingPropertyTest, InvariantUnderUniformDuplication) {
  auto base = make_set("00000001-n", {{"x", "PWN"}, {"x", "FWN"}, {"y", "PWN"}, {"z", "JWN"}}, 4);
  for (int k = 2; k <= 4; ++k) {
    std::vector<Candidate> dup;
    for (int i = 0; i < k; ++i)
      dup.insert(dup.end(), base.candidates().begin(), base.candidates().end());
    CandidateSet scaled(base.id(), "vie", dup, 4);
    auto a = compute_ranks(base);
    auto b = compute_ranks(scaled);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].word, b[i].word);
      EXPECT_EQ(a[i].rank, b[i].rank);
    }
  }
}
