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

#include "tribridge/auction.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace tribridge {
namespace {

AuctionState run(std::initializer_list<const char*> calls, Seat opener = 0) {
  AuctionState s(opener);
  for (const char* c : calls) s = s.apply(s.to_act(), parse_call(c));
  return s;
}

bool has(const std::vector<Call>& calls, const Call& c) {
  return std::find(calls.begin(), calls.end(), c) != calls.end();
}

TEST(CallTest, TextForms) {
  EXPECT_EQ(parse_call("1C").to_string(), "1C");
  EXPECT_EQ(parse_call("7nt").to_string(), "7NT");
  EXPECT_EQ(parse_call("pass"), Call::pass());
  EXPECT_EQ(parse_call("X"), Call::dbl());
  EXPECT_EQ(parse_call("XX"), Call::redouble());
  EXPECT_THROW(parse_call("8C"), ParseError);
  EXPECT_THROW(parse_call("0NT"), ParseError);
  EXPECT_THROW(parse_call("1Z"), ParseError);
  EXPECT_THROW(Call::bid(8, Denomination::kClubs), DomainError);
}

TEST(CallTest, BidOrderIsLevelThenDenomination) {
  EXPECT_LT((Bid{1, Denomination::kSpades}), (Bid{1, Denomination::kNoTrump}));
  EXPECT_LT((Bid{1, Denomination::kNoTrump}), (Bid{2, Denomination::kClubs}));
  EXPECT_LT((Bid{2, Denomination::kHearts}), (Bid{2, Denomination::kSpades}));
}

TEST(AuctionTest, OpenerHasExactlyThirtyFiveBids) {
  const AuctionState s;
  const auto calls = s.legal_calls(0);
  EXPECT_EQ(calls.size(), 35U);
  EXPECT_FALSE(has(calls, Call::pass()));
  EXPECT_TRUE(std::all_of(calls.begin(), calls.end(), [](const Call& c) { return c.is_bid(); }));
}

TEST(AuctionTest, OpenerCannotPass) {
  const AuctionState s;
  try {
    s.apply(0, Call::pass());
    FAIL() << "opening pass accepted";
  } catch (const IllegalAction& e) {
    EXPECT_EQ(e.rule(), "opener-must-bid");
  }
}

// Oracle: enumerate the (level, denomination) grid and keep bids above 1H.
TEST(AuctionTest, SecondSeatAfterOneHeart) {
  const AuctionState s = run({"1H"});
  const auto calls = s.legal_calls(1);
  std::vector<Call> expected{Call::pass()};
  for (int level = 1; level <= 7; ++level) {
    for (int d = 0; d < 5; ++d) {
      if (level > 1 || d > to_int(Denomination::kHearts)) {
        expected.push_back(Call::bid(level, static_cast<Denomination>(d)));
      }
    }
  }
  expected.push_back(Call::dbl());
  EXPECT_EQ(calls.size(), expected.size());
  for (const auto& c : expected) EXPECT_TRUE(has(calls, c)) << c.to_string();
  EXPECT_EQ(expected.size(), 1U + 32U + 1U);  // 1S, 1NT and 30 bids at levels 2-7
  EXPECT_FALSE(has(calls, Call::redouble()));
}

TEST(AuctionTest, HighBidderMayRedoubleAfterDouble) {
  const AuctionState s = run({"2S", "PASS", "X"});
  EXPECT_EQ(s.to_act(), 0);
  const auto calls = s.legal_calls(0);
  EXPECT_TRUE(has(calls, Call::redouble()));
  EXPECT_FALSE(has(calls, Call::dbl()));
}

TEST(AuctionTest, BidsMustClimb) {
  const AuctionState s = run({"1C", "2H", "2S"});
  ASSERT_TRUE(s.high_bid());
  EXPECT_EQ(s.high_bid()->to_string(), "2S");

  const AuctionState nt = run({"1NT"});
  try {
    nt.apply(1, parse_call("1S"));
    FAIL();
  } catch (const IllegalAction& e) {
    EXPECT_EQ(e.rule(), "bid-not-higher");
  }
}

TEST(AuctionTest, BidPassPassCompletes) {
  const AuctionState s = run({"1C", "PASS", "PASS"});
  EXPECT_TRUE(s.complete());
  EXPECT_EQ(s.contract(), (Contract{0, 1, Denomination::kClubs, Doubling::kNone}));
  EXPECT_THROW(s.legal_calls(s.opener()), StateError);
}

TEST(AuctionTest, DoubledContract) {
  const AuctionState s = run({"1H", "2H", "X", "PASS", "PASS"});
  EXPECT_TRUE(s.complete());
  EXPECT_EQ(s.contract(), (Contract{1, 2, Denomination::kHearts, Doubling::kDoubled}));
}

TEST(AuctionTest, IncompleteAuctionHasNoContract) {
  EXPECT_THROW(run({"1H", "PASS"}).contract(), StateError);
}

TEST(AuctionTest, DoublingRights) {
  const AuctionState s = run({"1H"});
  // seat 1 doubles the opponent's bid
  const AuctionState d = s.apply(1, Call::dbl());
  // seat 2 cannot double again, nor redouble (not the high bidder)
  try {
    d.apply(2, Call::dbl());
    FAIL();
  } catch (const IllegalAction& e) {
    EXPECT_EQ(e.rule(), "double-not-allowed");
  }
  try {
    d.apply(2, Call::redouble());
    FAIL();
  } catch (const IllegalAction& e) {
    EXPECT_EQ(e.rule(), "redouble-not-allowed");
  }
  // either opponent of the high bidder may double
  const AuctionState s2 = run({"1H", "PASS"});
  EXPECT_EQ(s2.to_act(), 2);
  EXPECT_TRUE(s2.is_legal(2, Call::dbl()));
  // after a double only the high bidder may redouble
  const AuctionState s4 = run({"1H", "X", "PASS"});
  EXPECT_EQ(s4.to_act(), 0);
  EXPECT_TRUE(s4.is_legal(0, Call::redouble()));
  EXPECT_FALSE(s4.is_legal(0, Call::dbl()));
}

TEST(AuctionTest, DoubleResetsPassCount) {
  const AuctionState s = run({"1H", "PASS", "X"});
  EXPECT_EQ(s.consecutive_passes(), 0);
  EXPECT_FALSE(s.complete());
  EXPECT_EQ(s.doubling(), Doubling::kDoubled);
}

TEST(AuctionTest, OutOfTurnRejected) {
  const AuctionState s;
  try {
    s.apply(1, parse_call("1C"));
    FAIL();
  } catch (const IllegalAction& e) {
    EXPECT_EQ(e.rule(), "out-of-turn");
  }
  EXPECT_THROW(s.legal_calls(2), StateError);
}

TEST(AuctionTest, OpenerRotates) {
  const AuctionState s(2);
  EXPECT_EQ(s.to_act(), 2);
  const AuctionState t = s.apply(2, parse_call("1D"));
  EXPECT_EQ(t.to_act(), 0);
}

// Random playouts: every accepted call is in legal_calls, every generated
// call outside it is rejected, bids climb, and the auction terminates.
TEST(AuctionTest, FuzzedAuctionsStayLegal) {
  std::mt19937_64 rng(2024);
  std::vector<Call> universe{Call::pass(), Call::dbl(), Call::redouble()};
  for (int level = 1; level <= 7; ++level)
    for (int d = 0; d < 5; ++d) universe.push_back(Call::bid(level, static_cast<Denomination>(d)));

  for (int game = 0; game < 100000; ++game) {
    AuctionState s(static_cast<Seat>(game % 3));
    std::optional<Bid> last;
    int steps = 0;
    while (!s.complete()) {
      const Seat seat = s.to_act();
      const auto legal = s.legal_calls(seat);
      ASSERT_FALSE(legal.empty());
      if (s.history().empty()) ASSERT_FALSE(has(legal, Call::pass()));
      // an illegal probe must be rejected
      const Call probe = universe[rng() % universe.size()];
      ASSERT_EQ(s.is_legal(seat, probe), has(legal, probe)) << probe.to_string();
      // bias toward passes so auctions end quickly
      const Call pick = (rng() % 3 != 0 && has(legal, Call::pass()))
                            ? Call::pass()
                            : legal[rng() % legal.size()];
      s = s.apply(seat, pick);
      if (pick.is_bid()) {
        if (last) ASSERT_GT(pick.as_bid(), *last);
        last = pick.as_bid();
      }
      ASSERT_LT(++steps, 35 * 4 + 3);
    }
    ASSERT_TRUE(s.history().front().call.is_bid());
    const Contract c = s.contract();
    ASSERT_EQ(c.level, last->level);
  }
}

}  // namespace
}  // namespace tribridge
