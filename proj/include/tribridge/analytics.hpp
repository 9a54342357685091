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

// Exact hand-probability calculations and descriptive statistics. Counts are
// arbitrary-precision integers; probabilities are doubles derived from exact
// integer ratios.

#ifndef TRIBRIDGE_ANALYTICS_HPP_
#define TRIBRIDGE_ANALYTICS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"
#include "tribridge/card.hpp"
#include "tribridge/errors.hpp"

namespace tribridge {

using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigCount choose_exact(unsigned n, unsigned k) {
  if (k > n) {
    throw DomainError("choose(" + std::to_string(n) + ", " + std::to_string(k) + "): k > n");
  }
  k = std::min(k, n - k);
  BigCount result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) here
  }
  return result;
}

// numerator / denominator, kept unreduced as computed.
struct ExactRatio {
  BigCount numerator;
  BigCount denominator = 1;

  double value() const {
    return static_cast<double>(BigRational(numerator, denominator));
  }
};

inline void to_json(nlohmann::json& j, const ExactRatio& r) {
  j = nlohmann::json{{"value", r.value()},
                     {"numerator", r.numerator.str()},
                     {"denominator", r.denominator.str()}};
}

inline BigCount hands_total() { return choose_exact(kDeckSize, kHandSize); }

// Chance of a hand with ten clubs and one card in each other suit: the
// leanest holding that still makes a one-club opening safe on its own.
inline ExactRatio prob_safe_min_bid() {
  return {choose_exact(13, 10) * choose_exact(39, 3), hands_total()};
}

// Law of hand_points for a uniformly dealt 13-card hand.
struct PointDistribution {
  std::vector<BigCount> counts;  // counts[p] = number of hands with p points
  BigCount total;

  int max_points() const { return static_cast<int>(counts.size()) - 1; }

  double prob(int points) const {
    if (points < 0 || points > max_points()) return 0.0;
    return static_cast<double>(BigRational(counts[points], total));
  }

  // P(lo <= X < hi); hi may exceed the support.
  ExactRatio range(int lo, int hi) const {
    BigCount n = 0;
    for (int p = std::max(lo, 0); p < std::min(hi, max_points() + 1); ++p) n += counts[p];
    return {n, total};
  }

  ExactRatio at_least(int lo) const { return range(lo, max_points() + 1); }

  BigRational mean() const {
    BigCount weighted = 0;
    for (int p = 0; p <= max_points(); ++p) weighted += counts[p] * p;
    return BigRational(weighted, total);
  }
};

inline PointDistribution point_distribution(const PointScale& scale = PointScale::standard()) {
  std::vector<int> weights;
  for (int i = 0; i < kDeckSize; ++i) weights.push_back(scale.of(Card::from_index(i)));
  std::vector<int> sorted = weights;
  std::sort(sorted.rbegin(), sorted.rend());
  int max_points = 0;
  for (int i = 0; i < kHandSize; ++i) max_points += sorted[i];

  // ways[k][p]: subsets of the cards seen so far with k cards and p points.
  std::vector<std::vector<BigCount>> ways(kHandSize + 1,
                                          std::vector<BigCount>(max_points + 1, BigCount(0)));
  ways[0][0] = 1;
  for (int w : weights) {
    for (int k = kHandSize; k >= 1; --k) {
      for (int p = max_points; p >= w; --p) {
        if (ways[k - 1][p - w] != 0) ways[k][p] += ways[k - 1][p - w];
      }
    }
  }
  return {std::move(ways[kHandSize]), hands_total()};
}

using Thresholds = std::array<int, 3>;

inline void check_thresholds(const Thresholds& t) {
  if (!(t[0] < t[1] && t[1] < t[2])) {
    throw DomainError("thresholds must be strictly increasing");
  }
}

// P(t1 <= X < t2), P(t2 <= X < t3), P(X >= t3).
inline std::array<double, 3> bucket_probs(const PointDistribution& dist, const Thresholds& t) {
  check_thresholds(t);
  return {dist.range(t[0], t[1]).value(), dist.range(t[1], t[2]).value(),
          dist.at_least(t[2]).value()};
}

// A table of honor profiles: each row gives exact counts for the tracked
// ranks (missing trailing entries are zero).
struct ComboSet {
  std::string name;
  std::vector<Rank> ranks;
  std::vector<std::vector<int>> rows;
  std::optional<double> reference;  // published approximation, informational only
};

inline ComboSet strategy_combos(int strategy) {
  using R = Rank;
  switch (strategy) {
    case 1:
      return {"strategy1", {R::kAce, R::kKing, R::kQueen, R::kJack},
              {{4, 3}, {4, 2, 1}, {4, 1, 1, 1}}, 14e-5};
    case 2:
      return {"strategy2", {R::kAce, R::kKing, R::kQueen, R::kJack, R::kTen},
              {{4, 4}, {4, 3, 1}, {4, 2, 2}, {4, 2, 1, 1}, {4, 1, 1, 1, 1}}, 3.6e-5};
    case 3:
      return {"strategy3", {R::kAce, R::kKing, R::kQueen, R::kJack, R::kTen, R::kNine},
              {{4, 4, 1}, {4, 3, 2}, {4, 2, 2, 1}, {4, 2, 1, 1, 1}, {4, 1, 1, 1, 1, 1}},
              0.5e-5};
    default:
      throw DomainError("strategy combo sets are numbered 1-3");
  }
}

// "strategy1".."strategy3" (or "s1".."s3"), or "<ranks>:<row>,<row>..." where
// each row is one digit per tracked rank, e.g. "AKQJ:43,421,4111".
inline ComboSet parse_combos(std::string_view spec) {
  for (int s = 1; s <= 3; ++s) {
    if (spec == "strategy" + std::to_string(s) || spec == "s" + std::to_string(s)) {
      return strategy_combos(s);
    }
  }
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("invalid combo spec '" + std::string(spec) + "'");
  }
  ComboSet set;
  set.name = std::string(spec);
  for (char ch : spec.substr(0, colon)) {
    const auto r = kRankChars.find(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    if (r == std::string_view::npos) {
      throw ParseError("invalid rank '" + std::string(1, ch) + "' in combo spec");
    }
    set.ranks.push_back(static_cast<Rank>(r));
  }
  std::vector<int> row;
  for (char ch : spec.substr(colon + 1)) {
    if (ch == ',') {
      set.rows.push_back(row);
      row.clear();
    } else if (ch >= '0' && ch <= '9') {
      row.push_back(ch - '0');
    } else {
      throw ParseError("invalid count '" + std::string(1, ch) + "' in combo spec");
    }
  }
  if (!row.empty()) set.rows.push_back(row);
  return set;
}

// Probability that a hand has exactly one of the listed honor profiles,
// with all of its other cards drawn from untracked ranks. Rows are disjoint
// events, so their counts add.
inline ExactRatio honor_combo_prob(const ComboSet& set) {
  const auto tracked = static_cast<unsigned>(set.ranks.size());
  if (std::set<Rank>(set.ranks.begin(), set.ranks.end()).size() != tracked) {
    throw DomainError("combo set tracks a rank twice");
  }
  std::set<std::vector<int>> seen;
  BigCount favorable = 0;
  for (auto row : set.rows) {
    if (row.size() > tracked) throw DomainError("combo row has more counts than tracked ranks");
    row.resize(tracked, 0);
    int cards = 0;
    BigCount ways = 1;
    for (int c : row) {
      if (c < 0 || c > kNumSuits) throw DomainError("honor count must be 0-4");
      cards += c;
      ways *= choose_exact(kNumSuits, static_cast<unsigned>(c));
    }
    if (cards > kHandSize) throw DomainError("combo needs more than 13 cards");
    if (!seen.insert(row).second) throw DomainError("duplicate combo row");
    const unsigned others = kDeckSize - kNumSuits * tracked;
    const auto rest = static_cast<unsigned>(kHandSize - cards);
    if (rest > others) continue;
    favorable += ways * choose_exact(others, rest);
  }
  return {favorable, hands_total()};
}

// Hypergeometric mean of the phantom hand's points given our own 13 cards:
// the unseen 39 cards hold (deck total - own) points, 13 of them go to it.
inline double expected_dummy_points(Hand own, const PointScale& scale = PointScale::standard()) {
  if (own.size() != kHandSize) throw DomainError("own hand must hold 13 cards");
  return static_cast<double>(scale.deck_total() - hand_points(own, scale)) * kHandSize /
         (kDeckSize - kHandSize);
}

struct MomentSummary {
  std::size_t count = 0;
  double mean = 0;
  double sd = 0;  // population (divide by N)
  std::optional<double> skewness;
  std::optional<double> excess_kurtosis;
};

inline MomentSummary moments(std::span<const double> samples) {
  if (samples.empty()) throw DomainError("moments need at least one sample");
  MomentSummary m;
  m.count = samples.size();
  const auto n = static_cast<double>(samples.size());
  double sum = 0;
  for (double x : samples) sum += x;
  m.mean = sum / n;
  double m2 = 0, m3 = 0, m4 = 0;
  for (double x : samples) {
    const double d = x - m.mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  m.sd = std::sqrt(m2);
  if (samples.size() >= 3 && m2 > 0) {
    m.skewness = m3 / std::pow(m2, 1.5);
    m.excess_kurtosis = m4 / (m2 * m2) - 3.0;
  }
  return m;
}

inline void to_json(nlohmann::json& j, const MomentSummary& m) {
  j = nlohmann::json{{"count", m.count}, {"mean", m.mean}, {"sd", m.sd}};
  j["skewness"] = m.skewness ? nlohmann::json(*m.skewness) : nlohmann::json(nullptr);
  j["excessKurtosis"] =
      m.excess_kurtosis ? nlohmann::json(*m.excess_kurtosis) : nlohmann::json(nullptr);
}

}  // namespace tribridge

#endif  // TRIBRIDGE_ANALYTICS_HPP_
