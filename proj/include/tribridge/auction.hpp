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

// Three-player auction: rotation 0 -> 1 -> 2 starting from the opener, a
// forced opening bid, and pass / double / redouble. The auction closes when
// two consecutive passes follow the last bid, double or redouble.

#ifndef TRIBRIDGE_AUCTION_HPP_
#define TRIBRIDGE_AUCTION_HPP_

#include <cctype>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tribridge/card.hpp"
#include "tribridge/errors.hpp"

namespace tribridge {

enum class Denomination : std::uint8_t { kClubs = 0, kDiamonds, kHearts, kSpades, kNoTrump };
inline constexpr int kNumDenominations = 5;

constexpr int to_int(Denomination d) { return static_cast<int>(d); }

constexpr std::optional<Suit> trump_suit(Denomination d) {
  if (d == Denomination::kNoTrump) return std::nullopt;
  return static_cast<Suit>(to_int(d));
}

constexpr Denomination denomination_of(Suit s) { return static_cast<Denomination>(to_int(s)); }

inline std::string denomination_text(Denomination d) {
  static constexpr std::string_view kNames[] = {"C", "D", "H", "S", "NT"};
  return std::string(kNames[to_int(d)]);
}

inline constexpr int kMinLevel = 1;
inline constexpr int kMaxLevel = 7;

struct Bid {
  int level = 1;
  Denomination denom = Denomination::kClubs;

  // (level, denomination) lexicographic order.
  friend constexpr auto operator<=>(const Bid&, const Bid&) = default;

  std::string to_string() const { return std::to_string(level) + denomination_text(denom); }
};

enum class Doubling : std::uint8_t { kNone = 0, kDoubled, kRedoubled };

constexpr int multiplier(Doubling d) {
  switch (d) {
    case Doubling::kNone: return 1;
    case Doubling::kDoubled: return 2;
    case Doubling::kRedoubled: return 4;
  }
  return 1;
}

inline std::string doubling_text(Doubling d) {
  switch (d) {
    case Doubling::kNone: return "none";
    case Doubling::kDoubled: return "doubled";
    case Doubling::kRedoubled: return "redoubled";
  }
  return "none";
}

class Call {
 public:
  enum class Kind : std::uint8_t { kBid, kPass, kDouble, kRedouble };

  static Call pass() { return Call(Kind::kPass, {}); }
  static Call dbl() { return Call(Kind::kDouble, {}); }
  static Call redouble() { return Call(Kind::kRedouble, {}); }
  static Call bid(int level, Denomination denom) {
    if (level < kMinLevel || level > kMaxLevel) {
      throw DomainError("bid level must be 1-7, got " + std::to_string(level));
    }
    return Call(Kind::kBid, Bid{level, denom});
  }
  static Call bid(Bid b) { return bid(b.level, b.denom); }

  Kind kind() const { return kind_; }
  bool is_bid() const { return kind_ == Kind::kBid; }
  const Bid& as_bid() const { return bid_; }

  // "1C".."7NT", "PASS", "X", "XX".
  std::string to_string() const {
    switch (kind_) {
      case Kind::kBid: return bid_.to_string();
      case Kind::kPass: return "PASS";
      case Kind::kDouble: return "X";
      case Kind::kRedouble: return "XX";
    }
    return "?";
  }

  friend bool operator==(const Call& a, const Call& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::kBid || a.bid_ == b.bid_);
  }

 private:
  Call(Kind kind, Bid bid) : kind_(kind), bid_(bid) {}

  Kind kind_;
  Bid bid_;
};

inline Call parse_call(std::string_view text) {
  std::string t;
  for (char ch : text) t.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  if (t == "PASS" || t == "P") return Call::pass();
  if (t == "X" || t == "DOUBLE") return Call::dbl();
  if (t == "XX" || t == "REDOUBLE") return Call::redouble();
  if (t.size() >= 2 && t[0] >= '1' && t[0] <= '7') {
    const std::string denom = t.substr(1);
    static constexpr std::string_view kDenoms[] = {"C", "D", "H", "S", "NT"};
    for (int d = 0; d < kNumDenominations; ++d) {
      if (denom == kDenoms[d]) return Call::bid(t[0] - '0', static_cast<Denomination>(d));
    }
  }
  throw ParseError("invalid call '" + std::string(text) + "'");
}

struct CallRecord {
  Seat seat;
  Call call;
};

struct Contract {
  Seat declarer = 0;
  int level = 1;
  Denomination denom = Denomination::kClubs;
  Doubling doubling = Doubling::kNone;

  std::optional<Suit> trump() const { return trump_suit(denom); }
  int target_tricks() const { return level + 6; }

  // "2H", "2HX", "1CXX"
  std::string to_string() const {
    std::string s = Bid{level, denom}.to_string();
    if (doubling == Doubling::kDoubled) s += "X";
    if (doubling == Doubling::kRedoubled) s += "XX";
    return s;
  }

  friend bool operator==(const Contract&, const Contract&) = default;
};

class AuctionState {
 public:
  explicit AuctionState(Seat opener = 0) : opener_(opener) {
    if (opener < 0 || opener >= kNumPlayers) throw DomainError("opener must be seat 0-2");
  }

  Seat opener() const { return opener_; }
  const std::vector<CallRecord>& history() const { return history_; }
  const std::optional<Bid>& high_bid() const { return high_bid_; }
  Seat high_bidder() const { return high_bidder_; }
  Doubling doubling() const { return doubling_; }
  int consecutive_passes() const { return passes_; }
  bool complete() const { return passes_ >= 2; }

  Seat to_act() const {
    return static_cast<Seat>((opener_ + static_cast<int>(history_.size())) % kNumPlayers);
  }

  std::vector<Call> legal_calls(Seat seat) const {
    require_open();
    require_turn(seat);
    std::vector<Call> calls;
    if (!history_.empty()) calls.push_back(Call::pass());
    for (int level = kMinLevel; level <= kMaxLevel; ++level) {
      for (int d = 0; d < kNumDenominations; ++d) {
        Bid b{level, static_cast<Denomination>(d)};
        if (!high_bid_ || b > *high_bid_) calls.push_back(Call::bid(b));
      }
    }
    if (high_bid_ && doubling_ == Doubling::kNone && seat != high_bidder_) {
      calls.push_back(Call::dbl());
    }
    if (high_bid_ && doubling_ == Doubling::kDoubled && seat == high_bidder_) {
      calls.push_back(Call::redouble());
    }
    return calls;
  }

  bool is_legal(Seat seat, const Call& call) const {
    try {
      check(seat, call);
      return true;
    } catch (const Error&) {
      return false;
    }
  }

  // Throws IllegalAction naming the rule, or StateError on a closed auction.
  void check(Seat seat, const Call& call) const {
    require_open();
    if (seat != to_act()) {
      throw IllegalAction("out-of-turn", "seat " + std::to_string(to_act()) + " is to call");
    }
    switch (call.kind()) {
      case Call::Kind::kPass:
        if (history_.empty()) {
          throw IllegalAction("opener-must-bid", "the opening call may not be a pass");
        }
        return;
      case Call::Kind::kBid:
        if (high_bid_ && !(call.as_bid() > *high_bid_)) {
          throw IllegalAction("bid-not-higher", call.to_string() + " does not exceed " +
                                                    high_bid_->to_string());
        }
        return;
      case Call::Kind::kDouble:
        if (!high_bid_ || doubling_ != Doubling::kNone) {
          throw IllegalAction("double-not-allowed", "no undoubled bid stands");
        }
        if (seat == high_bidder_) {
          throw IllegalAction("double-not-allowed", "cannot double your own bid");
        }
        return;
      case Call::Kind::kRedouble:
        if (!high_bid_ || doubling_ != Doubling::kDoubled) {
          throw IllegalAction("redouble-not-allowed", "no doubled bid stands");
        }
        if (seat != high_bidder_) {
          throw IllegalAction("redouble-not-allowed", "only the high bidder may redouble");
        }
        return;
    }
  }

  AuctionState apply(Seat seat, const Call& call) const {
    check(seat, call);
    AuctionState next = *this;
    next.history_.push_back({seat, call});
    switch (call.kind()) {
      case Call::Kind::kPass:
        ++next.passes_;
        break;
      case Call::Kind::kBid:
        next.high_bid_ = call.as_bid();
        next.high_bidder_ = seat;
        next.doubling_ = Doubling::kNone;
        next.passes_ = 0;
        break;
      case Call::Kind::kDouble:
        next.doubling_ = Doubling::kDoubled;
        next.passes_ = 0;
        break;
      case Call::Kind::kRedouble:
        next.doubling_ = Doubling::kRedoubled;
        next.passes_ = 0;
        break;
    }
    return next;
  }

  Contract contract() const {
    if (!complete()) throw StateError("auction is not complete");
    return Contract{high_bidder_, high_bid_->level, high_bid_->denom, doubling_};
  }

 private:
  void require_open() const {
    if (complete()) throw StateError("auction is complete");
  }
  void require_turn(Seat seat) const {
    if (seat != to_act()) {
      throw StateError("seat " + std::to_string(seat) + " is not to act; seat " +
                       std::to_string(to_act()) + " is");
    }
  }

  Seat opener_ = 0;
  std::vector<CallRecord> history_;
  std::optional<Bid> high_bid_;
  Seat high_bidder_ = 0;
  Doubling doubling_ = Doubling::kNone;
  int passes_ = 0;
};

inline void to_json(nlohmann::json& j, const Call& c) { j = c.to_string(); }

inline void to_json(nlohmann::json& j, const Contract& c) {
  j = nlohmann::json{{"declarer", c.declarer},
                     {"level", c.level},
                     {"denomination", denomination_text(c.denom)},
                     {"doubling", doubling_text(c.doubling)},
                     {"text", c.to_string()}};
}

inline void to_json(nlohmann::json& j, const AuctionState& a) {
  nlohmann::json history = nlohmann::json::array();
  for (const auto& rec : a.history()) {
    history.push_back({{"seat", rec.seat}, {"call", rec.call.to_string()}});
  }
  j = nlohmann::json{{"opener", a.opener()},
                     {"history", history},
                     {"doubling", doubling_text(a.doubling())},
                     {"complete", a.complete()}};
  if (a.high_bid()) {
    j["highBid"] = a.high_bid()->to_string();
    j["highBidder"] = a.high_bidder();
  }
  if (!a.complete()) j["toAct"] = a.to_act();
}

}  // namespace tribridge

#endif  // TRIBRIDGE_AUCTION_HPP_
