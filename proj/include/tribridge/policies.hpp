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

// Card-play and bidding policies.
//
// Play policies scan the hand a bounded number of times per decision, so each
// choice is linear in the number of cards held. "Highest" and "lowest" compare
// rank first; equal ranks in different suits order C < D < H < S with the
// trump suit above every plain suit.

#ifndef TRIBRIDGE_POLICIES_HPP_
#define TRIBRIDGE_POLICIES_HPP_

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "tribridge/analytics.hpp"
#include "tribridge/auction.hpp"
#include "tribridge/card.hpp"
#include "tribridge/errors.hpp"
#include "tribridge/play.hpp"

namespace tribridge {

namespace detail {

constexpr int order_key(Card c, std::optional<Suit> trump) {
  const int suit_key = (trump && c.suit() == *trump) ? kNumSuits : to_int(c.suit());
  return to_int(c.rank()) * 8 + suit_key;
}

inline void inspect(std::uint64_t* counter) {
  if (counter) ++*counter;
}

template <typename Better>
Card extreme(Hand cards, std::optional<Suit> trump, std::uint64_t* counter, Better better) {
  auto it = cards.begin();
  if (it == cards.end()) throw StateError("no card to choose from");
  Card best = *it;
  inspect(counter);
  for (++it; it != cards.end(); ++it) {
    inspect(counter);
    if (better(order_key(*it, trump), order_key(best, trump))) best = *it;
  }
  return best;
}

template <typename Pred>
Hand filter(Hand cards, std::uint64_t* counter, Pred keep) {
  Hand out;
  for (Card c : cards) {
    inspect(counter);
    if (keep(c)) out.add(c);
  }
  return out;
}

}  // namespace detail

inline Card highest_card(Hand cards, std::optional<Suit> trump, std::uint64_t* counter = nullptr) {
  return detail::extreme(cards, trump, counter, [](int a, int b) { return a > b; });
}

inline Card lowest_card(Hand cards, std::optional<Suit> trump, std::uint64_t* counter = nullptr) {
  return detail::extreme(cards, trump, counter, [](int a, int b) { return a < b; });
}

inline Hand cards_of_suit(Hand cards, Suit suit, std::uint64_t* counter = nullptr) {
  return detail::filter(cards, counter, [suit](Card c) { return c.suit() == suit; });
}

// High Card First: lead the highest card, follow with the highest of the led
// suit, and throw the lowest card when void (never ruffs on purpose).
inline Card hcf_choose(const PlayView& v) {
  if (v.leading()) return highest_card(v.hand, v.trump, v.inspections);
  const Hand playable = cards_of_suit(v.hand, v.lead_suit(), v.inspections);
  if (!playable.empty()) return highest_card(playable, v.trump, v.inspections);
  return lowest_card(v.hand, v.trump, v.inspections);
}

// Low Card First: the mirror image of hcf_choose.
inline Card lcf_choose(const PlayView& v) {
  if (v.leading()) return lowest_card(v.hand, v.trump, v.inspections);
  const Hand matching = cards_of_suit(v.hand, v.lead_suit(), v.inspections);
  if (!matching.empty()) return lowest_card(matching, v.trump, v.inspections);
  return lowest_card(v.hand, v.trump, v.inspections);
}

// General strategy: lead high; when following, win as high as possible if
// a card of the led suit beats the current winner (a ruffed trick cannot be
// beaten by the led suit), otherwise play low.
inline Card general_choose(const PlayView& v) {
  if (v.leading()) return highest_card(v.hand, v.trump, v.inspections);
  const Hand matching = cards_of_suit(v.hand, v.lead_suit(), v.inspections);
  if (matching.empty()) return lowest_card(v.hand, v.trump, v.inspections);
  const Card winning = v.trick[winning_position(v.trick, v.trump)].card;
  const Hand beating = detail::filter(matching, v.inspections,
                                      [&](Card c) { return beats(c, winning, v.trump); });
  if (!beating.empty()) return highest_card(beating, v.trump, v.inspections);
  return lowest_card(matching, v.trump, v.inspections);
}

// Plays to help `beneficiary` when it declares: while the declaring side is
// winning the trick, dump the highest card of the led suit that does not
// overtake, or discard low (preferring plain suits) rather than ruff.
// Everything else, and every deal the beneficiary does not declare, is
// played with the general strategy.
inline Card defeat_seeking_choose(const PlayView& v, Seat beneficiary) {
  const Seat declarer = v.contract.declarer;
  if (declarer != beneficiary || on_declarer_side(v.seat, declarer) || v.leading()) {
    return general_choose(v);
  }
  const TrickPlay& winner = v.trick[winning_position(v.trick, v.trump)];
  if (!on_declarer_side(winner.seat, declarer)) return general_choose(v);

  const Hand matching = cards_of_suit(v.hand, v.lead_suit(), v.inspections);
  const Hand legal = matching.empty() ? v.hand : matching;
  const Hand passive = detail::filter(legal, v.inspections,
                                      [&](Card c) { return !beats(c, winner.card, v.trump); });
  if (!matching.empty()) {
    return passive.empty() ? lowest_card(matching, v.trump, v.inspections)
                           : highest_card(passive, v.trump, v.inspections);
  }
  if (passive.empty()) return lowest_card(v.hand, v.trump, v.inspections);
  Hand plain = passive;
  if (v.trump) {
    plain = detail::filter(passive, v.inspections, [&](Card c) { return c.suit() != *v.trump; });
  }
  return lowest_card(plain.empty() ? passive : plain, v.trump, v.inspections);
}

class HighCardFirst final : public PlayPolicy {
 public:
  Card choose(const PlayView& v) override { return hcf_choose(v); }
  std::string name() const override { return "hcf"; }
};

class LowCardFirst final : public PlayPolicy {
 public:
  Card choose(const PlayView& v) override { return lcf_choose(v); }
  std::string name() const override { return "lcf"; }
};

class GeneralStrategy final : public PlayPolicy {
 public:
  Card choose(const PlayView& v) override { return general_choose(v); }
  std::string name() const override { return "general"; }
};

class DefeatSeeking final : public PlayPolicy {
 public:
  explicit DefeatSeeking(Seat beneficiary) : beneficiary_(beneficiary) {
    if (beneficiary < 0 || beneficiary >= kNumPlayers) {
      throw DomainError("defeat-seeking beneficiary must be seat 0-2");
    }
  }
  Card choose(const PlayView& v) override { return defeat_seeking_choose(v, beneficiary_); }
  std::string name() const override { return "defeat:" + std::to_string(beneficiary_); }
  Seat beneficiary() const { return beneficiary_; }

 private:
  Seat beneficiary_;
};

// "hcf", "lcf", "general", "defeat:<seat>".
inline std::unique_ptr<PlayPolicy> make_play_policy(std::string_view spec) {
  if (spec == "hcf") return std::make_unique<HighCardFirst>();
  if (spec == "lcf") return std::make_unique<LowCardFirst>();
  if (spec == "general") return std::make_unique<GeneralStrategy>();
  if (spec.starts_with("defeat:") && spec.size() == 8 && spec[7] >= '0' && spec[7] <= '2') {
    return std::make_unique<DefeatSeeking>(spec[7] - '0');
  }
  throw ParseError("unknown play policy '" + std::string(spec) + "'");
}

inline bool is_play_policy(std::string_view spec) {
  try {
    make_play_policy(spec);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// Bidding

class BidPolicy {
 public:
  virtual ~BidPolicy() = default;
  virtual Call choose(const AuctionState& state, Hand own, Seat seat) = 0;
  virtual std::string name() const = 0;
};

inline constexpr Thresholds kDefaultThresholds = {20, 25, 30};

// Number of no-trump levels (0-3) a point total reaches.
inline int nt_level_for(double points, const Thresholds& t) {
  int level = 0;
  for (int k = 0; k < 3; ++k) {
    if (points >= t[k]) level = k + 1;
  }
  return level;
}

namespace detail {

inline Call nt_call_or_pass(int level, const AuctionState& state) {
  const Seat seat = state.to_act();
  if (level > 0) {
    Call bid = Call::bid(level, Denomination::kNoTrump);
    if (state.is_legal(seat, bid)) return bid;
  }
  // The opener may not pass; a hand too weak to open takes the cheapest bid.
  if (state.history().empty()) return Call::bid(1, Denomination::kClubs);
  return Call::pass();
}

}  // namespace detail

inline Call point_count_call(Hand hand, const Thresholds& t, const AuctionState& state,
                             const PointScale& scale = PointScale::standard()) {
  check_thresholds(t);
  return detail::nt_call_or_pass(nt_level_for(hand_points(hand, scale), t), state);
}

class PointCountBidder final : public BidPolicy {
 public:
  explicit PointCountBidder(Thresholds t = kDefaultThresholds) : thresholds_(t) {
    check_thresholds(t);
  }
  Call choose(const AuctionState& state, Hand own, Seat) override {
    return point_count_call(own, thresholds_, state);
  }
  std::string name() const override {
    return "points:" + std::to_string(thresholds_[0]) + "," + std::to_string(thresholds_[1]) +
           "," + std::to_string(thresholds_[2]);
  }
  const Thresholds& thresholds() const { return thresholds_; }

 private:
  Thresholds thresholds_;
};

enum class BidMode { kDefensive, kAttack, kBluff };

inline std::string bid_mode_name(BidMode m) {
  switch (m) {
    case BidMode::kDefensive: return "defensive";
    case BidMode::kAttack: return "attack";
    case BidMode::kBluff: return "bluff";
  }
  return "defensive";
}

// Trigger values for the heuristic bidders. These are tunable defaults.
struct HeuristicConfig {
  Thresholds thresholds = kDefaultThresholds;
  int long_suit = 6;            // a suit this long with an honor is bid as trump
  int bluff_length = 5;         // bluff when holding this many of the opponents' suit...
  int bluff_honors = 2;         // ...or this many honors in it
};

namespace detail {

inline int honors_in(Hand hand, Suit s) {
  int n = 0;
  for (int r = to_int(Rank::kTen); r <= to_int(Rank::kAce); ++r) {
    if (hand.contains(Card(static_cast<Rank>(r), s))) ++n;
  }
  return n;
}

// Longest suit; ties go to more honors, then the higher suit.
inline Suit longest_suit(Hand hand) {
  Suit best = Suit::kClubs;
  for (Suit s : kAllSuits) {
    const auto key = std::make_pair(hand.count(s), honors_in(hand, s));
    const auto best_key = std::make_pair(hand.count(best), honors_in(hand, best));
    if (key >= best_key) best = s;
  }
  return best;
}

inline std::optional<Call> cheapest_bid_in(Denomination d, const AuctionState& state) {
  for (int level = kMinLevel; level <= kMaxLevel; ++level) {
    Bid b{level, d};
    if (!state.high_bid() || b > *state.high_bid()) return Call::bid(b);
  }
  return std::nullopt;
}

}  // namespace detail

// Defensive: judge on our own 13 cards. A long suit with an honor is bid at
// the cheapest level; otherwise bid no-trump by point count.
// Attack: as defensive, but the point count includes the expected value of
// the unseen phantom hand.
// Bluff: when an opponent's suit bid stands and we hold length or honors in
// it, pass quietly and double once the auction is one pass from closing.
// Otherwise bid as defensive.
inline Call heuristic_call(Hand hand, const AuctionState& state, BidMode mode,
                           const HeuristicConfig& cfg = {}) {
  const Seat seat = state.to_act();
  if (mode == BidMode::kBluff && state.high_bid() && state.high_bidder() != seat) {
    if (const auto trump = trump_suit(state.high_bid()->denom)) {
      if (hand.count(*trump) >= cfg.bluff_length ||
          detail::honors_in(hand, *trump) >= cfg.bluff_honors) {
        if (state.consecutive_passes() == 1 && state.is_legal(seat, Call::dbl())) {
          return Call::dbl();
        }
        return Call::pass();
      }
    }
  }

  const Suit suit = detail::longest_suit(hand);
  if (hand.count(suit) >= cfg.long_suit && detail::honors_in(hand, suit) >= 1) {
    if (auto bid = detail::cheapest_bid_in(denomination_of(suit), state)) return *bid;
  }

  double points = hand_points(hand);
  if (mode == BidMode::kAttack) points += expected_dummy_points(hand);
  return detail::nt_call_or_pass(nt_level_for(points, cfg.thresholds), state);
}

class HeuristicBidder final : public BidPolicy {
 public:
  explicit HeuristicBidder(BidMode mode, HeuristicConfig cfg = {}) : mode_(mode), cfg_(cfg) {}
  Call choose(const AuctionState& state, Hand own, Seat) override {
    return heuristic_call(own, state, mode_, cfg_);
  }
  std::string name() const override { return bid_mode_name(mode_); }

 private:
  BidMode mode_;
  HeuristicConfig cfg_;
};

inline Thresholds parse_thresholds(std::string_view text) {
  Thresholds t{};
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    const auto end = k < 2 ? text.find(',', pos) : text.size();
    if (end == std::string_view::npos) throw ParseError("thresholds need three values: a,b,c");
    const std::string item(text.substr(pos, end - pos));
    try {
      std::size_t used = 0;
      t[k] = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("invalid threshold '" + item + "'");
    }
    pos = end + 1;
  }
  check_thresholds(t);
  return t;
}

// "points:<t1,t2,t3>", "defensive", "attack", "bluff".
inline std::unique_ptr<BidPolicy> make_bid_policy(std::string_view spec) {
  if (spec == "defensive") return std::make_unique<HeuristicBidder>(BidMode::kDefensive);
  if (spec == "attack") return std::make_unique<HeuristicBidder>(BidMode::kAttack);
  if (spec == "bluff") return std::make_unique<HeuristicBidder>(BidMode::kBluff);
  if (spec.starts_with("points:")) {
    return std::make_unique<PointCountBidder>(parse_thresholds(spec.substr(7)));
  }
  throw ParseError("unknown bid policy '" + std::string(spec) + "'");
}

inline bool is_bid_policy(std::string_view spec) {
  try {
    make_bid_policy(spec);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace tribridge

#endif  // TRIBRIDGE_POLICIES_HPP_
