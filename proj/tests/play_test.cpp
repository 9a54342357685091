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

#include "tribridge/play.hpp"

#include <gtest/gtest.h>

#include "tribridge/harness.hpp"
#include "tribridge/policies.hpp"

namespace tribridge {
namespace {

Card C(const char* text) { return parse_card(text); }

std::vector<TrickPlay> trick(std::initializer_list<const char*> cards) {
  std::vector<TrickPlay> t;
  Seat s = 0;
  for (const char* c : cards) t.push_back({s++, C(c)});
  return t;
}

const Contract kNoTrump{0, 1, Denomination::kNoTrump, Doubling::kNone};
const Contract kHearts{0, 2, Denomination::kHearts, Doubling::kNone};

TEST(TrickWinnerTest, HighestOfLedSuitAtNoTrump) {
  EXPECT_EQ(trick_winner(trick({"5D", "KD", "2D", "9D"}), std::nullopt), 1);
}

TEST(TrickWinnerTest, AnyTrumpBeatsPlainSuits) {
  EXPECT_EQ(trick_winner(trick({"AS", "2H", "KS", "QS"}), Suit::kHearts), 1);
}

TEST(TrickWinnerTest, DiscardOfAnotherSuitNeverWins) {
  EXPECT_EQ(trick_winner(trick({"TC", "AS", "JC", "3C"}), Suit::kHearts), 2);
}

TEST(TrickWinnerTest, HigherTrumpOverruffs) {
  EXPECT_EQ(trick_winner(trick({"AS", "2H", "5H", "KS"}), Suit::kHearts), 2);
}

TEST(TrickWinnerTest, IncompleteTrickIsAnError) {
  EXPECT_THROW(trick_winner(trick({"AS", "2H"}), std::nullopt), StateError);
}

TEST(SeatingTest, OpeningLeaderIsFirstDefenderClockwise) {
  EXPECT_EQ(opening_leader(0), 1);
  EXPECT_EQ(opening_leader(1), 2);
  EXPECT_EQ(opening_leader(2), 0);  // seat 3 is the phantom partner
}

TEST(PlayStateTest, LeaderMayPlayAnyCard) {
  const Deal d = deal_random(11);
  const PlayState s(d, kNoTrump);
  EXPECT_EQ(s.to_act(), 1);
  EXPECT_EQ(s.legal_plays(1).size(), 13);
  EXPECT_EQ(s.legal_plays(1), d.hands[1]);
}

Deal small_deal() {
  Deal d;
  d.hands[0] = parse_hand("3H 9C 2D");
  d.hands[1] = parse_hand("4H KH AS");
  d.hands[2] = parse_hand("5C 6C 7C");
  d.hands[3] = parse_hand("8D 9D TD");
  return d;
}

TEST(PlayStateTest, MustFollowSuit) {
  PlayState s(small_deal(), kNoTrump, 0);
  s.play(0, C("3H"));
  EXPECT_EQ(s.legal_plays(1), parse_hand("4H KH"));
  try {
    s.play(1, C("AS"));
    FAIL();
  } catch (const IllegalAction& e) {
    EXPECT_EQ(e.rule(), "must-follow-suit");
  }
}

TEST(PlayStateTest, VoidHandMayPlayAnything) {
  PlayState s(small_deal(), kNoTrump, 0);
  s.play(0, C("3H"));
  s.play(1, C("KH"));
  EXPECT_EQ(s.legal_plays(2), parse_hand("5C 6C 7C"));
}

TEST(PlayStateTest, OutOfTurnAndForeignCardsRejected) {
  PlayState s(small_deal(), kNoTrump, 0);
  EXPECT_THROW(s.legal_plays(2), StateError);
  try {
    s.play(2, C("5C"));
    FAIL();
  } catch (const IllegalAction& e) {
    EXPECT_EQ(e.rule(), "out-of-turn");
  }
  try {
    s.play(0, C("AS"));
    FAIL();
  } catch (const IllegalAction& e) {
    EXPECT_EQ(e.rule(), "card-not-held");
  }
}

TEST(PlayStateTest, WinnerLeadsNextTrickAndDummyIsRevealedAfterLead) {
  PlayState s(small_deal(), kNoTrump, 0);
  EXPECT_FALSE(s.dummy_revealed());
  EXPECT_TRUE(view_for(s, 0).dummy.has_value());  // the declarer always sees it
  s.play(0, C("3H"));
  EXPECT_TRUE(s.dummy_revealed());
  s.play(1, C("KH"));
  s.play(2, C("5C"));
  s.play(3, C("8D"));
  EXPECT_EQ(s.tricks_won(1), 1);
  EXPECT_EQ(s.to_act(), 1);
  EXPECT_EQ(s.last_trick().size(), 4U);
}

TEST(PlayViewTest, DefendersSeeDummyOnlyAfterOpeningLead) {
  const Deal d = deal_random(3);
  const Contract c{0, 1, Denomination::kNoTrump, Doubling::kNone};
  PlayState s(d, c);
  ASSERT_EQ(s.to_act(), 1);
  EXPECT_FALSE(view_for(s, 1).dummy.has_value());
  const Card lead = *s.legal_plays(1).begin();
  s.play(1, lead);
  EXPECT_TRUE(view_for(s, 2).dummy.has_value());
  EXPECT_EQ(*view_for(s, 2).dummy, d.hands[kDummySeat]);
  EXPECT_FALSE(view_for(s, 2).declarer_hand.has_value());
}

TEST(PlayViewTest, DeclarerSeesBothHandsWhenPlayingDummy) {
  const Deal d = deal_random(3);
  const Contract c{2, 1, Denomination::kNoTrump, Doubling::kNone};
  PlayState s(d, c);
  ASSERT_EQ(s.to_act(), 0);
  s.play(0, *s.legal_plays(0).begin());
  s.play(1, *s.legal_plays(1).begin());
  s.play(2, *s.legal_plays(2).begin());
  ASSERT_EQ(s.to_act(), kDummySeat);
  EXPECT_EQ(s.controller(kDummySeat), 2);
  const PlayView v = view_for(s, kDummySeat);
  EXPECT_EQ(v.hand, s.hand(kDummySeat));
  ASSERT_TRUE(v.declarer_hand.has_value());
  EXPECT_EQ(*v.declarer_hand, s.hand(2));
}

class BadPolicy final : public PlayPolicy {
 public:
  Card choose(const PlayView& v) override {
    // a card of another suit than the lead whenever possible
    if (!v.leading()) {
      for (Card c : v.hand) {
        if (c.suit() != v.lead_suit()) return c;
      }
    }
    return *v.hand.begin();
  }
  std::string name() const override { return "bad"; }
};

TEST(PlayDealTest, IllegalPolicyCardIsAHardError) {
  BadPolicy bad;
  GeneralStrategy good;
  std::array<PlayPolicy*, 3> policies{&good, &bad, &good};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    try {
      play_deal(deal_random(seed), kNoTrump, policies);
    } catch (const IllegalAction& e) {
      EXPECT_EQ(e.rule(), "policy-illegal-card");
      EXPECT_NE(std::string(e.what()).find("seat 1"), std::string::npos);
      EXPECT_NE(std::string(e.what()).find("trick"), std::string::npos);
      return;
    }
  }
  FAIL() << "bad policy never caught";
}

TEST(PlayDealTest, RejectsMalformedDeal) {
  GeneralStrategy g;
  EXPECT_THROW(play_deal(small_deal(), kNoTrump, {&g, &g, &g}), DomainError);
}

TEST(PlayDealTest, ExampleDealTeamSplits) {
  const Deal d = example1_deal();
  const Contract c = example1_contract();
  for (auto [name, teams] : {std::pair{"hcf", std::array{6, 7}}, std::pair{"lcf", std::array{6, 7}},
                             std::pair{"general", std::array{7, 6}}}) {
    PolicyTriple p = PolicyTriple::uniform(name);
    const TrickOutcome out = play_deal(d, c, p.ptrs);
    EXPECT_EQ(out.per_seat[0] + out.per_seat[2], teams[0]) << name;
    EXPECT_EQ(out.per_seat[1] + out.per_seat[3], teams[1]) << name;
  }
}

// Conservation, legality on replay and determinism over fuzzed deals,
// contracts and policy mixes.
TEST(PlayDealTest, FuzzedDealsConserveTricksAndReplayLegally) {
  const std::array<std::string, 6> names = {"hcf", "lcf", "general", "defeat:0", "defeat:1",
                                            "defeat:2"};
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10000; ++i) {
    const Deal d = deal_random(derive_seed(1, i));
    const Contract c{static_cast<Seat>(rng() % 3), static_cast<int>(rng() % 7) + 1,
                     static_cast<Denomination>(rng() % 5), Doubling::kNone};
    PolicyTriple p = PolicyTriple::from(
        {names[rng() % names.size()], names[rng() % names.size()], names[rng() % names.size()]});
    const TrickOutcome out = play_deal(d, c, p.ptrs);

    int total = 0;
    for (int t : out.per_seat) total += t;
    ASSERT_EQ(total, 13);
    ASSERT_EQ(out.declarer_tricks, out.per_seat[c.declarer] + out.per_seat[kDummySeat]);

    PlayState replay(d, c);
    Hand seen;
    for (const PlayRecord& r : out.log) {
      ASSERT_EQ(r.trick, replay.trick_number());
      ASSERT_TRUE(replay.legal_plays(r.seat).contains(r.card));
      seen.add(r.card);
      replay.play(r.seat, r.card);
    }
    ASSERT_EQ(seen, Hand::full_deck());
    ASSERT_EQ(replay.tricks_by_seat(), out.per_seat);

    const TrickOutcome again = play_deal(d, c, p.ptrs);
    ASSERT_EQ(again.log, out.log);
  }
}

TEST(PlayDealTest, PlayLogJson) {
  PolicyTriple p = PolicyTriple::uniform("general");
  const TrickOutcome out = play_deal(deal_random(8), kHearts, p.ptrs);
  const nlohmann::json j = out;
  ASSERT_EQ(j["playLog"].size(), 52U);
  EXPECT_EQ(j["playLog"][0]["trick"], 1);
  EXPECT_EQ(j["playLog"][51]["trick"], 13);
  EXPECT_EQ(j["playLog"][0]["seat"], opening_leader(0));
}

}  // namespace
}  // namespace tribridge
