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

// Per-player settlement of one deal under either scoring scheme.
//
// Previous scheme: every odd trick of a made contract scores the halved
// auction-bridge value (C 3, D 3.5, H 4, S 4.5, NT 5), times the doubling
// multiplier. A doubled make adds 25 per overtrick and a 25 insult bonus,
// both doubled again on redouble. A failed contract pays each defender 25
// per undertrick times the multiplier.
//
// New scheme: as above, but odd tricks score the full value (C 6 ... NT 10),
// and every overtrick earns a further half of the full value.
//
// Both schemes: slam bonus 50 (12 tricks) or 100 (13 tricks) times the
// multiplier on a made contract, and honors paid to the declarer only.
// Points are multiples of 0.5 and held exactly in a double.

#ifndef TRIBRIDGE_SCORING_HPP_
#define TRIBRIDGE_SCORING_HPP_

#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "tribridge/auction.hpp"
#include "tribridge/card.hpp"
#include "tribridge/errors.hpp"

namespace tribridge {

enum class Scheme : std::uint8_t { kPrevious = 0, kNew };

inline std::string scheme_name(Scheme s) { return s == Scheme::kPrevious ? "prev" : "new"; }

inline Scheme parse_scheme(std::string_view text) {
  std::string t;
  for (char ch : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (t == "prev" || t == "previous") return Scheme::kPrevious;
  if (t == "new") return Scheme::kNew;
  throw ParseError("unknown scheme '" + std::string(text) + "' (expected prev or new)");
}

// Full auction-bridge value of one odd trick.
constexpr double full_trick_value(Denomination d) {
  constexpr double kFull[] = {6, 7, 8, 9, 10};
  return kFull[to_int(d)];
}

constexpr double trick_value(Denomination d, Scheme s) {
  return s == Scheme::kPrevious ? full_trick_value(d) / 2 : full_trick_value(d);
}

// Honor holdings of the declaring partnership. For a suit contract the bits
// are the trump T, J, Q, K, A (bit 0 = ten); at no-trump they are the four
// aces, one bit per suit.
struct HonorsInfo {
  std::uint8_t declarer_hand = 0;
  std::uint8_t dummy_hand = 0;
};

inline std::uint8_t honor_bits(Hand hand, Denomination denom) {
  std::uint8_t bits = 0;
  if (denom == Denomination::kNoTrump) {
    for (Suit s : kAllSuits) {
      if (hand.contains(Card(Rank::kAce, s))) bits |= static_cast<std::uint8_t>(1U << to_int(s));
    }
    return bits;
  }
  const Suit trump = *trump_suit(denom);
  for (int r = to_int(Rank::kTen); r <= to_int(Rank::kAce); ++r) {
    if (hand.contains(Card(static_cast<Rank>(r), trump))) {
      bits |= static_cast<std::uint8_t>(1U << (r - to_int(Rank::kTen)));
    }
  }
  return bits;
}

inline HonorsInfo honors_from_hands(Hand declarer, Hand dummy, Denomination denom) {
  return {honor_bits(declarer, denom), honor_bits(dummy, denom)};
}

// Tiers, first match wins:
//   all honors (5 trump honors, or 4 aces at NT) in one hand   -> 100
//   4 of the 5 trump honors in one hand                         -> 80
//   3+ honors between declarer and phantom                      -> 10 each
//   honors in the phantom hand                                  -> 10 each
inline int honors_points(const HonorsInfo& honors, Denomination denom) {
  const bool nt = denom == Denomination::kNoTrump;
  const int all = nt ? 4 : 5;
  const int own = std::popcount(static_cast<unsigned>(honors.declarer_hand));
  const int partner = std::popcount(static_cast<unsigned>(honors.dummy_hand));
  if (own == all || partner == all) return 100;
  if (!nt && (own == 4 || partner == 4)) return 80;
  if (own + partner >= 3) return 10 * (own + partner);
  return 10 * partner;
}

inline int slam_bonus(int declarer_tricks, Doubling doubling) {
  if (declarer_tricks == 13) return 100 * multiplier(doubling);
  if (declarer_tricks == 12) return 50 * multiplier(doubling);
  return 0;
}

struct Breakdown {
  double trick_points = 0;
  double overtrick_points = 0;
  double insult = 0;
  double slam_bonus = 0;
  double honors = 0;
  double penalties = 0;  // paid to each defender
};

struct Settlement {
  std::array<double, kNumPlayers> per_seat{};
  Breakdown breakdown;
  bool made = false;
  int declarer_tricks = 0;
  Scheme scheme = Scheme::kPrevious;
  Contract contract;
};

inline Settlement score_deal(const Contract& contract, int declarer_tricks,
                             const HonorsInfo& honors, Scheme scheme) {
  if (declarer_tricks < 0 || declarer_tricks > 13) {
    throw DomainError("declarer tricks must be 0-13");
  }
  Settlement s;
  s.scheme = scheme;
  s.contract = contract;
  s.declarer_tricks = declarer_tricks;
  Breakdown& b = s.breakdown;

  const int dm = multiplier(contract.doubling);
  const int odd = declarer_tricks - 6;
  s.made = odd >= contract.level;
  b.honors = honors_points(honors, contract.denom);

  if (s.made) {
    const int over = odd - contract.level;
    b.trick_points = odd * trick_value(contract.denom, scheme) * dm;
    if (contract.doubling != Doubling::kNone) {
      b.overtrick_points += 25.0 * (dm / 2) * over;
      b.insult = 25.0 * (dm / 2);
    }
    if (scheme == Scheme::kNew) b.overtrick_points += 0.5 * full_trick_value(contract.denom) * over;
    b.slam_bonus = slam_bonus(declarer_tricks, contract.doubling);
    s.per_seat[contract.declarer] =
        b.trick_points + b.overtrick_points + b.insult + b.slam_bonus + b.honors;
  } else {
    b.penalties = 25.0 * (contract.target_tricks() - declarer_tricks) * dm;
    for (Seat seat = 0; seat < kNumPlayers; ++seat) {
      s.per_seat[seat] = seat == contract.declarer ? b.honors : b.penalties;
    }
  }
  return s;
}

inline void to_json(nlohmann::json& j, const Breakdown& b) {
  j = nlohmann::json{{"trickPoints", b.trick_points},   {"overtrickPoints", b.overtrick_points},
                     {"insult", b.insult},              {"slamBonus", b.slam_bonus},
                     {"honors", b.honors},              {"penalties", b.penalties}};
}

inline void to_json(nlohmann::json& j, const Settlement& s) {
  j = nlohmann::json{{"scheme", scheme_name(s.scheme)},
                     {"contract", s.contract},
                     {"declarerTricks", s.declarer_tricks},
                     {"made", s.made},
                     {"perSeatDelta", s.per_seat},
                     {"breakdown", s.breakdown}};
}

}  // namespace tribridge

#endif  // TRIBRIDGE_SCORING_HPP_
