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

// Trick play. Seating conventions:
//   - the phantom hand sits in seat 3 and partners the declarer;
//   - play rotates 0 -> 1 -> 2 -> 3 -> 0;
//   - the first defender clockwise from the declarer leads trick 1;
//   - the phantom hand is exposed once the opening lead is on the table, and
//     the declarer chooses its cards.

#ifndef TRIBRIDGE_PLAY_HPP_
#define TRIBRIDGE_PLAY_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "json.hpp"
#include "tribridge/auction.hpp"
#include "tribridge/card.hpp"
#include "tribridge/errors.hpp"

namespace tribridge {

inline constexpr int kNumTricks = 13;

struct TrickPlay {
  Seat seat = 0;
  Card card;
  friend bool operator==(const TrickPlay&, const TrickPlay&) = default;
};

struct PlayRecord {
  int trick = 0;  // 1-13
  Seat seat = 0;
  Card card;
  friend bool operator==(const PlayRecord&, const PlayRecord&) = default;
};

constexpr Seat next_seat(Seat s) { return (s + 1) % kNumHands; }

constexpr bool on_declarer_side(Seat s, Seat declarer) {
  return s == declarer || s == kDummySeat;
}

constexpr Seat opening_leader(Seat declarer) {
  Seat s = next_seat(declarer);
  while (on_declarer_side(s, declarer)) s = next_seat(s);
  return s;
}

// True when `challenger` takes over from `current`, the card now winning
// the trick (so `current` is either of the led suit or a trump).
constexpr bool beats(Card challenger, Card current, std::optional<Suit> trump) {
  if (challenger.suit() == current.suit()) return challenger.rank() > current.rank();
  return trump.has_value() && challenger.suit() == *trump;
}

// Position within a non-empty, possibly partial trick of the card winning it.
inline std::size_t winning_position(std::span<const TrickPlay> trick, std::optional<Suit> trump) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < trick.size(); ++i) {
    if (beats(trick[i].card, trick[best].card, trump)) best = i;
  }
  return best;
}

inline Seat trick_winner(std::span<const TrickPlay> trick, std::optional<Suit> trump) {
  if (trick.size() != static_cast<std::size_t>(kNumHands)) {
    throw StateError("trick has " + std::to_string(trick.size()) + " cards; need 4");
  }
  return trick[winning_position(trick, trump)].seat;
}

class PlayState {
 public:
  PlayState(const Deal& deal, const Contract& contract)
      : PlayState(deal, contract, opening_leader(contract.declarer)) {}

  PlayState(const Deal& deal, const Contract& contract, Seat leader)
      : contract_(contract), hands_(deal.hands), leader_(leader) {
    if (leader < 0 || leader >= kNumHands) throw DomainError("leader must be seat 0-3");
    if (contract.declarer < 0 || contract.declarer >= kNumPlayers) {
      throw DomainError("declarer must be seat 0-2");
    }
  }

  const Contract& contract() const { return contract_; }
  std::optional<Suit> trump() const { return contract_.trump(); }
  Seat declarer() const { return contract_.declarer; }
  Hand hand(Seat seat) const { return hands_.at(seat); }

  bool complete() const { return tricks_done_ == kNumTricks; }
  int tricks_completed() const { return tricks_done_; }
  int trick_number() const { return tricks_done_ + 1; }
  bool dummy_revealed() const { return log_size_ > 0; }
  Seat leader() const { return leader_; }

  Seat to_act() const {
    if (complete()) throw StateError("all 13 tricks have been played");
    return static_cast<Seat>((leader_ + trick_size_) % kNumHands);
  }

  // Who chooses the card for `seat`: the declarer also plays the phantom hand.
  Seat controller(Seat seat) const { return seat == kDummySeat ? contract_.declarer : seat; }

  std::span<const TrickPlay> current_trick() const { return {trick_.data(), trick_size_}; }
  std::span<const TrickPlay> last_trick() const {
    return {last_trick_.data(), tricks_done_ > 0 ? last_trick_.size() : 0};
  }
  std::span<const PlayRecord> log() const { return {log_.data(), log_size_}; }

  int tricks_won(Seat seat) const { return won_.at(seat); }
  const std::array<int, kNumHands>& tricks_by_seat() const { return won_; }
  int declarer_tricks() const { return won_[contract_.declarer] + won_[kDummySeat]; }
  int defender_tricks() const { return tricks_done_ - declarer_tricks(); }

  Hand legal_plays(Seat seat) const {
    if (seat != to_act()) {
      throw StateError("seat " + std::to_string(seat) + " is acting out of turn; seat " +
                       std::to_string(to_act()) + " is to play");
    }
    const Hand h = hands_[seat];
    if (trick_size_ == 0) return h;
    const Hand follow = h.in_suit(trick_[0].card.suit());
    return follow.empty() ? h : follow;
  }

  void play(Seat seat, Card card) {
    if (complete()) throw StateError("all 13 tricks have been played");
    if (seat != to_act()) {
      throw IllegalAction("out-of-turn", "seat " + std::to_string(to_act()) + " is to play");
    }
    const Hand h = hands_[seat];
    if (!h.contains(card)) {
      throw IllegalAction("card-not-held", card.to_string() + " is not in seat " +
                                               std::to_string(seat) + "'s hand");
    }
    if (trick_size_ > 0) {
      const Suit lead = trick_[0].card.suit();
      if (card.suit() != lead && h.count(lead) > 0) {
        throw IllegalAction("must-follow-suit",
                            std::string("seat holds ") + suit_char(lead) + " and must follow suit");
      }
    }
    hands_[seat].remove(card);
    trick_[trick_size_++] = {seat, card};
    log_[log_size_++] = {tricks_done_ + 1, seat, card};
    if (trick_size_ == kNumHands) {
      const Seat winner = trick_winner(current_trick(), trump());
      ++won_[winner];
      ++tricks_done_;
      last_trick_ = trick_;
      trick_size_ = 0;
      leader_ = winner;
    }
  }

 private:
  Contract contract_;
  std::array<Hand, kNumHands> hands_;
  std::array<TrickPlay, kNumHands> trick_{};
  std::array<TrickPlay, kNumHands> last_trick_{};
  std::size_t trick_size_ = 0;
  Seat leader_ = 0;
  std::array<int, kNumHands> won_{};
  int tricks_done_ = 0;
  std::array<PlayRecord, kDeckSize> log_{};
  std::size_t log_size_ = 0;
};

// What a policy may see when choosing a card for `seat`. The declarer, who
// also plays the phantom hand, always sees both hands of the partnership;
// defenders see the phantom hand only once it has been exposed.
struct PlayView {
  Seat seat = 0;
  Hand hand;
  std::span<const TrickPlay> trick;
  std::optional<Suit> trump;
  Contract contract;
  std::optional<Hand> dummy;
  std::optional<Hand> declarer_hand;
  int trick_number = 1;
  // When set, policies add one per card they examine.
  std::uint64_t* inspections = nullptr;

  bool leading() const { return trick.empty(); }
  Suit lead_suit() const { return trick.front().card.suit(); }
};

inline PlayView view_for(const PlayState& state, Seat seat, std::uint64_t* inspections = nullptr) {
  PlayView v;
  v.seat = seat;
  v.hand = state.hand(seat);
  v.trick = state.current_trick();
  v.trump = state.trump();
  v.contract = state.contract();
  v.trick_number = state.trick_number();
  v.inspections = inspections;
  const bool declarer_side = state.controller(seat) == state.declarer();
  if (declarer_side || state.dummy_revealed()) v.dummy = state.hand(kDummySeat);
  if (declarer_side) v.declarer_hand = state.hand(state.declarer());
  return v;
}

class PlayPolicy {
 public:
  virtual ~PlayPolicy() = default;
  virtual Card choose(const PlayView& view) = 0;
  virtual std::string name() const = 0;
};

struct TrickOutcome {
  std::array<int, kNumHands> per_seat{};
  int declarer_tricks = 0;
  Contract contract;
  std::array<PlayRecord, kDeckSize> log{};

  int defender_tricks() const { return kNumTricks - declarer_tricks; }
};

// Plays a whole deal. `policies[s]` chooses for seat s; the declarer's policy
// also plays seat 3. Throws IllegalAction if a policy returns an illegal card.
inline TrickOutcome play_deal(const Deal& deal, const Contract& contract,
                              const std::array<PlayPolicy*, kNumPlayers>& policies,
                              std::optional<Seat> leader = std::nullopt) {
  if (!deal.valid()) throw DomainError("deal must partition the deck into four 13-card hands");
  PlayState state = leader ? PlayState(deal, contract, *leader) : PlayState(deal, contract);
  while (!state.complete()) {
    const Seat seat = state.to_act();
    PlayPolicy* policy = policies[state.controller(seat)];
    const Card card = policy->choose(view_for(state, seat));
    if (!state.legal_plays(seat).contains(card)) {
      throw IllegalAction("policy-illegal-card",
                          policy->name() + " chose " + card.to_string() + " for seat " +
                              std::to_string(seat) + " at trick " +
                              std::to_string(state.trick_number()));
    }
    state.play(seat, card);
  }
  TrickOutcome out;
  out.per_seat = state.tricks_by_seat();
  out.declarer_tricks = state.declarer_tricks();
  out.contract = contract;
  std::copy(state.log().begin(), state.log().end(), out.log.begin());
  return out;
}

inline void to_json(nlohmann::json& j, const PlayRecord& r) {
  j = nlohmann::json{{"trick", r.trick}, {"seat", r.seat}, {"card", r.card.to_string()}};
}

inline void to_json(nlohmann::json& j, const TrickPlay& p) {
  j = nlohmann::json{{"seat", p.seat}, {"card", p.card.to_string()}};
}

inline void to_json(nlohmann::json& j, const TrickOutcome& o) {
  j = nlohmann::json{{"perSeatTricks", o.per_seat},
                     {"declarerTricks", o.declarer_tricks},
                     {"contract", o.contract},
                     {"playLog", o.log}};
}

}  // namespace tribridge

#endif  // TRIBRIDGE_PLAY_HPP_
