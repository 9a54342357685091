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

#ifndef TRIBRIDGE_CARD_HPP_
#define TRIBRIDGE_CARD_HPP_

#include <array>
#include <bit>
#include <cctype>
#include <compare>
#include <cstdint>
#include <iterator>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tribridge/errors.hpp"

namespace tribridge {

// Seats 0-2 are the three players; seat 3 is the phantom hand that partners
// whoever wins the auction.
using Seat = int;
inline constexpr int kNumHands = 4;
inline constexpr int kNumPlayers = 3;
inline constexpr Seat kDummySeat = 3;
inline constexpr int kHandSize = 13;
inline constexpr int kDeckSize = 52;

enum class Suit : std::uint8_t { kClubs = 0, kDiamonds, kHearts, kSpades };
inline constexpr int kNumSuits = 4;
inline constexpr std::array<Suit, 4> kAllSuits = {
    Suit::kClubs, Suit::kDiamonds, Suit::kHearts, Suit::kSpades};

enum class Rank : std::uint8_t {
  kTwo = 0, kThree, kFour, kFive, kSix, kSeven, kEight, kNine,
  kTen, kJack, kQueen, kKing, kAce
};
inline constexpr int kNumRanks = 13;

inline constexpr std::string_view kSuitChars = "CDHS";
inline constexpr std::string_view kRankChars = "23456789TJQKA";

constexpr int to_int(Suit s) { return static_cast<int>(s); }
constexpr int to_int(Rank r) { return static_cast<int>(r); }

inline char suit_char(Suit s) { return kSuitChars[to_int(s)]; }
inline char rank_char(Rank r) { return kRankChars[to_int(r)]; }

// A card is its index in the canonical deck order: suit-major (C, D, H, S),
// then rank ascending. Comparison follows that order.
class Card {
 public:
  constexpr Card() = default;
  constexpr Card(Rank rank, Suit suit)
      : index_(static_cast<std::uint8_t>(to_int(suit) * kNumRanks + to_int(rank))) {}

  static constexpr Card from_index(int index) {
    Card c;
    c.index_ = static_cast<std::uint8_t>(index);
    return c;
  }

  constexpr int index() const { return index_; }
  constexpr Suit suit() const { return static_cast<Suit>(index_ / kNumRanks); }
  constexpr Rank rank() const { return static_cast<Rank>(index_ % kNumRanks); }

  std::string to_string() const { return {rank_char(rank()), suit_char(suit())}; }

  friend constexpr auto operator<=>(Card, Card) = default;

 private:
  std::uint8_t index_ = 0;
};

inline Card parse_card(std::string_view text) {
  auto fail = [&] {
    return ParseError("invalid card '" + std::string(text) +
                      "': expected rank (2-9,T,J,Q,K,A) then suit (C,D,H,S)");
  };
  if (text.size() != 2) throw fail();
  const char r = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  const char s = static_cast<char>(std::toupper(static_cast<unsigned char>(text[1])));
  const auto ri = kRankChars.find(r);
  const auto si = kSuitChars.find(s);
  if (ri == std::string_view::npos || si == std::string_view::npos) throw fail();
  return Card(static_cast<Rank>(ri), static_cast<Suit>(si));
}

// A set of cards stored as a 52-bit mask. Iteration is in canonical order.
class Hand {
 public:
  static constexpr std::uint64_t kDeckMask = (std::uint64_t{1} << kDeckSize) - 1;

  constexpr Hand() = default;
  constexpr explicit Hand(std::uint64_t bits) : bits_(bits & kDeckMask) {}
  Hand(std::initializer_list<Card> cards) {
    for (Card c : cards) add(c);
  }

  static constexpr Hand full_deck() { return Hand(kDeckMask); }
  static constexpr Hand suit_mask(Suit s) {
    return Hand(((std::uint64_t{1} << kNumRanks) - 1) << (to_int(s) * kNumRanks));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Card c) const { return (bits_ >> c.index()) & 1U; }

  // Throws if the card is already present; hands never hold duplicates.
  void add(Card c) {
    if (contains(c)) throw DomainError("duplicate card " + c.to_string());
    bits_ |= bit(c);
  }
  void remove(Card c) {
    if (!contains(c)) throw DomainError("card not in hand: " + c.to_string());
    bits_ &= ~bit(c);
  }

  constexpr Hand in_suit(Suit s) const { return Hand(bits_ & suit_mask(s).bits_); }
  constexpr int count(Suit s) const { return in_suit(s).size(); }

  constexpr Hand operator|(Hand o) const { return Hand(bits_ | o.bits_); }
  constexpr Hand operator&(Hand o) const { return Hand(bits_ & o.bits_); }
  constexpr Hand operator-(Hand o) const { return Hand(bits_ & ~o.bits_); }
  constexpr bool disjoint(Hand o) const { return (bits_ & o.bits_) == 0; }
  friend constexpr bool operator==(Hand, Hand) = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Card;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Card;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Card operator*() const { return Card::from_index(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Card> cards() const { return {begin(), end()}; }

  // "[2C, 7D, AS]"
  std::string to_string() const {
    std::string out = "[";
    bool first = true;
    for (Card c : *this) {
      if (!first) out += ", ";
      out += c.to_string();
      first = false;
    }
    return out + "]";
  }

 private:
  static constexpr std::uint64_t bit(Card c) { return std::uint64_t{1} << c.index(); }
  std::uint64_t bits_ = 0;
};

// Accepts "[2H, 2S, 5D]", "2H 2S 5D" or "2H,2S,5D" (any case).
inline Hand parse_hand(std::string_view text) {
  Hand hand;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    Card c = parse_card(token);
    if (hand.contains(c)) throw ParseError("duplicate card '" + token + "'");
    hand.add(c);
    token.clear();
  };
  for (char ch : text) {
    if (ch == '[' || ch == ']' || ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return hand;
}

// Point-count weights per rank. The default scale is A=5 K=4 Q=3 J=2 T=1.
struct PointScale {
  std::array<int, kNumRanks> weight{};

  static constexpr PointScale standard() {
    PointScale s;
    s.weight[to_int(Rank::kTen)] = 1;
    s.weight[to_int(Rank::kJack)] = 2;
    s.weight[to_int(Rank::kQueen)] = 3;
    s.weight[to_int(Rank::kKing)] = 4;
    s.weight[to_int(Rank::kAce)] = 5;
    return s;
  }

  constexpr int of(Card c) const { return weight[to_int(c.rank())]; }

  constexpr int deck_total() const {
    int total = 0;
    for (int w : weight) total += w * kNumSuits;
    return total;
  }

  friend constexpr bool operator==(const PointScale&, const PointScale&) = default;
};

// Parses "A=5,K=4,Q=3,J=2,T=1"; unnamed ranks weigh 0.
inline PointScale parse_scale(std::string_view text) {
  PointScale scale;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    if (item.size() < 3 || item[1] != '=') {
      throw ParseError("invalid scale entry '" + std::string(item) + "'");
    }
    const char r = static_cast<char>(std::toupper(static_cast<unsigned char>(item[0])));
    const auto ri = kRankChars.find(r);
    if (ri == std::string_view::npos) {
      throw ParseError("invalid rank in scale entry '" + std::string(item) + "'");
    }
    try {
      std::size_t used = 0;
      int w = std::stoi(std::string(item.substr(2)), &used);
      if (used != item.size() - 2 || w < 0) throw std::invalid_argument("weight");
      scale.weight[ri] = w;
    } catch (const std::exception&) {
      throw ParseError("invalid weight in scale entry '" + std::string(item) + "'");
    }
  }
  return scale;
}

inline int hand_points(Hand hand, const PointScale& scale = PointScale::standard()) {
  int total = 0;
  for (Card c : hand) total += scale.of(c);
  return total;
}

struct Deal {
  std::array<Hand, kNumHands> hands{};
  std::uint64_t seed = 0;

  // Four disjoint 13-card hands covering the deck.
  bool valid() const {
    Hand all;
    for (Hand h : hands) {
      if (h.size() != kHandSize || !all.disjoint(h)) return false;
      all = all | h;
    }
    return all == Hand::full_deck();
  }

  friend bool operator==(const Deal&, const Deal&) = default;
};

// Deals are produced by std::mt19937_64 (fully specified by the standard)
// driving a Fisher-Yates shuffle of the canonically ordered deck. Bounded
// draws use rejection sampling rather than std::uniform_int_distribution,
// whose algorithm differs between standard libraries.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n + 1) % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % n;
}

// SplitMix64 finalizer over (seed, stream): independent per-deal seeds so
// parallel runs match serial ones.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

template <std::size_t N>
void shuffle_cards(std::array<Card, N>& cards, Rng& rng, std::size_t count = N) {
  for (std::size_t i = count - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i + 1));
    std::swap(cards[i], cards[j]);
  }
}

inline Deal deal_from(Rng& rng) {
  std::array<Card, kDeckSize> deck;
  for (int i = 0; i < kDeckSize; ++i) deck[i] = Card::from_index(i);
  shuffle_cards(deck, rng);
  Deal deal;
  for (int i = 0; i < kDeckSize; ++i) deal.hands[i / kHandSize].add(deck[i]);
  return deal;
}

inline Deal deal_random(std::uint64_t seed) {
  Rng rng(seed);
  Deal deal = deal_from(rng);
  deal.seed = seed;
  return deal;
}

// JSON forms: cards are their two-character text, hands are arrays of cards.
inline void to_json(nlohmann::json& j, Card c) { j = c.to_string(); }
inline void from_json(const nlohmann::json& j, Card& c) { c = parse_card(j.get<std::string>()); }

inline void to_json(nlohmann::json& j, Hand h) {
  j = nlohmann::json::array();
  for (Card c : h) j.push_back(c.to_string());
}
inline void from_json(const nlohmann::json& j, Hand& h) {
  h = Hand();
  for (const auto& item : j) h.add(parse_card(item.get<std::string>()));
}

inline void to_json(nlohmann::json& j, const Deal& d) {
  j = nlohmann::json{{"seed", d.seed}, {"hands", d.hands}};
}
inline void from_json(const nlohmann::json& j, Deal& d) {
  d.seed = j.at("seed").get<std::uint64_t>();
  const auto& hands = j.at("hands");
  if (hands.size() != kNumHands) throw ParseError("deal needs exactly 4 hands");
  for (int i = 0; i < kNumHands; ++i) d.hands[i] = hands[i].get<Hand>();
  if (!d.valid()) throw ParseError("deal hands do not partition the deck");
}

}  // namespace tribridge

#endif  // TRIBRIDGE_CARD_HPP_
