// Copyright 2026 The Tribridge Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tribridge/scoring.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace tribridge {
namespace {

Contract make(Seat declarer, const char* bid, Doubling d = Doubling::kNone) {
  const Call c = parse_call(bid);
  return {declarer, c.as_bid().level, c.as_bid().denom, d};
}

const HonorsInfo kNoHonors{};

TEST(ScoringTest, PreviousSchemeMadeContract) {
  const Settlement s = score_deal(make(0, "2H"), 9, kNoHonors, Scheme::kPrevious);
  EXPECT_TRUE(s.made);
  EXPECT_DOUBLE_EQ(s.per_seat[0], 12);  // 3 odd tricks at 4
  EXPECT_DOUBLE_EQ(s.per_seat[1], 0);
  EXPECT_DOUBLE_EQ(s.per_seat[2], 0);
}

TEST(ScoringTest, HalfPointValues) {
  // 1D making 7: one odd trick at 3.5
  EXPECT_DOUBLE_EQ(score_deal(make(1, "1D"), 7, kNoHonors, Scheme::kPrevious).per_seat[1], 3.5);
}

TEST(ScoringTest, FailedContractPaysEachDefender) {
  const Settlement s = score_deal(make(0, "3C"), 7, kNoHonors, Scheme::kPrevious);
  EXPECT_FALSE(s.made);
  EXPECT_DOUBLE_EQ(s.per_seat[0], 0);
  EXPECT_DOUBLE_EQ(s.per_seat[1], 50);
  EXPECT_DOUBLE_EQ(s.per_seat[2], 50);
}

TEST(ScoringTest, DoubledOvertrickAndInsult) {
  // 3 odd at 4.5 doubled = 27, one overtrick 25, insult 25
  const Settlement s = score_deal(make(2, "2S", Doubling::kDoubled), 9, kNoHonors, Scheme::kPrevious);
  EXPECT_DOUBLE_EQ(s.per_seat[2], 77);
  EXPECT_DOUBLE_EQ(s.breakdown.trick_points, 27);
  EXPECT_DOUBLE_EQ(s.breakdown.overtrick_points, 25);
  EXPECT_DOUBLE_EQ(s.breakdown.insult, 25);
}

TEST(ScoringTest, RedoubledUndertrick) {
  const Settlement s =
      score_deal(make(1, "1C", Doubling::kRedoubled), 6, kNoHonors, Scheme::kPrevious);
  EXPECT_DOUBLE_EQ(s.per_seat[0], 100);
  EXPECT_DOUBLE_EQ(s.per_seat[2], 100);
  EXPECT_DOUBLE_EQ(s.per_seat[1], 0);
}

TEST(ScoringTest, NewSchemeAddsHalfValueOvertricks) {
  // 3 odd at 8 = 24, one overtrick at 4
  EXPECT_DOUBLE_EQ(score_deal(make(0, "2H"), 9, kNoHonors, Scheme::kNew).per_seat[0], 28);
}

TEST(ScoringTest, RejectsImpossibleTrickCounts) {
  EXPECT_THROW(score_deal(make(0, "1C"), 14, kNoHonors, Scheme::kNew), DomainError);
  EXPECT_THROW(score_deal(make(0, "1C"), -1, kNoHonors, Scheme::kNew), DomainError);
}

TEST(ScoringTest, SchemeNames) {
  EXPECT_EQ(parse_scheme("prev"), Scheme::kPrevious);
  EXPECT_EQ(parse_scheme("NEW"), Scheme::kNew);
  EXPECT_THROW(parse_scheme("old"), ParseError);
}

HonorsInfo honors(const char* declarer, const char* dummy, Denomination d) {
  return honors_from_hands(parse_hand(declarer), parse_hand(dummy), d);
}

TEST(HonorsTest, FourTrumpHonorsInOneHand) {
  EXPECT_EQ(honors_points(honors("AH KH QH JH", "", Denomination::kHearts), Denomination::kHearts),
            80);
}

TEST(HonorsTest, AllFiveTrumpHonorsInOneHand) {
  EXPECT_EQ(
      honors_points(honors("AH KH QH JH TH", "", Denomination::kHearts), Denomination::kHearts),
      100);
  EXPECT_EQ(
      honors_points(honors("", "AS KS QS JS TS", Denomination::kSpades), Denomination::kSpades),
      100);
}

TEST(HonorsTest, ThreeHonorsSplitBetweenHands) {
  EXPECT_EQ(honors_points(honors("AH KH", "QH", Denomination::kHearts), Denomination::kHearts),
            30);
}

TEST(HonorsTest, FourAcesAtNoTrump) {
  EXPECT_EQ(
      honors_points(honors("AC AD AH AS", "", Denomination::kNoTrump), Denomination::kNoTrump),
      100);
}

TEST(HonorsTest, PhantomHonorsAloneScoreTen) {
  EXPECT_EQ(honors_points(honors("", "JD", Denomination::kDiamonds), Denomination::kDiamonds), 10);
  EXPECT_EQ(honors_points(honors("AD KD", "", Denomination::kDiamonds), Denomination::kDiamonds),
            0);
  // off-trump honors do not count
  EXPECT_EQ(honors_points(honors("AS KS QS", "", Denomination::kDiamonds), Denomination::kDiamonds),
            0);
}

TEST(HonorsTest, HonorsPaidOnlyToDeclarer) {
  const HonorsInfo h = honors("AH KH QH JH", "", Denomination::kHearts);
  const Settlement made = score_deal(make(1, "1H"), 7, h, Scheme::kPrevious);
  EXPECT_DOUBLE_EQ(made.per_seat[1], 4 + 80);
  const Settlement down = score_deal(make(1, "4H"), 8, h, Scheme::kPrevious);
  EXPECT_DOUBLE_EQ(down.per_seat[1], 80);
  EXPECT_DOUBLE_EQ(down.per_seat[0], 50);
}

TEST(SlamTest, Bonuses) {
  EXPECT_DOUBLE_EQ(score_deal(make(0, "4S"), 11, kNoHonors, Scheme::kPrevious).breakdown.slam_bonus,
                   0);
  EXPECT_DOUBLE_EQ(score_deal(make(0, "4S"), 13, kNoHonors, Scheme::kPrevious).breakdown.slam_bonus,
                   100);
  EXPECT_DOUBLE_EQ(
      score_deal(make(0, "6S", Doubling::kDoubled), 12, kNoHonors, Scheme::kPrevious)
          .breakdown.slam_bonus,
      100);
  // no bonus on a failed contract
  EXPECT_DOUBLE_EQ(score_deal(make(0, "7S"), 12, kNoHonors, Scheme::kPrevious).breakdown.slam_bonus,
                   0);
}

// Independent restatement of the rules used as an oracle for random cases.
double oracle_declarer(const Contract& c, int tricks, Scheme s) {
  static const double kFull[] = {6, 7, 8, 9, 10};
  const double full = kFull[static_cast<int>(c.denom)];
  const double value = s == Scheme::kPrevious ? full / 2 : full;
  const int m = c.doubling == Doubling::kNone ? 1 : c.doubling == Doubling::kDoubled ? 2 : 4;
  const int odd = tricks - 6;
  const int over = odd - c.level;
  double pts = odd * value * m;
  if (m > 1) pts += 25.0 * (m / 2) * (over + 1);
  if (s == Scheme::kNew) pts += full / 2 * over;
  if (tricks == 12) pts += 50 * m;
  if (tricks == 13) pts += 100 * m;
  return pts;
}

TEST(ScoringPropertyTest, RandomSettlements) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20000; ++i) {
    const Contract c{static_cast<Seat>(rng() % 3), static_cast<int>(rng() % 7) + 1,
                     static_cast<Denomination>(rng() % 5), static_cast<Doubling>(rng() % 3)};
    const int tricks = static_cast<int>(rng() % 14);
    const Scheme scheme = rng() % 2 ? Scheme::kNew : Scheme::kPrevious;
    const Settlement s = score_deal(c, tricks, kNoHonors, scheme);
    const int m = multiplier(c.doubling);
    ASSERT_EQ(s.made, tricks >= c.level + 6);
    for (double p : s.per_seat) {
      ASSERT_GE(p, 0);
      ASSERT_EQ(std::fmod(p * 2, 1.0), 0.0);
    }
    if (s.made) {
      ASSERT_DOUBLE_EQ(s.per_seat[c.declarer], oracle_declarer(c, tricks, scheme));
      for (Seat d = 0; d < 3; ++d)
        if (d != c.declarer) ASSERT_EQ(s.per_seat[d], 0);
    } else {
      ASSERT_EQ(s.per_seat[c.declarer], 0);
      for (Seat d = 0; d < 3; ++d)
        if (d != c.declarer) ASSERT_DOUBLE_EQ(s.per_seat[d], 25.0 * (c.level + 6 - tricks) * m);
    }
  }
}

TEST(ScoringTest, SettlementJson) {
  const nlohmann::json j = score_deal(make(0, "2S", Doubling::kDoubled), 9, kNoHonors, Scheme::kNew);
  EXPECT_EQ(j["scheme"], "new");
  EXPECT_EQ(j["perSeatDelta"].size(), 3U);
  EXPECT_TRUE(j["breakdown"].contains("insult"));
}

}  // namespace
}  // namespace tribridge
