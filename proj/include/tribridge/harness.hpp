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

// Batch experiments: no-trump bidding simulations, multi-deal tournaments,
// partner-split enumeration and the worked-example fixture.
//
// Every deal in a batch is generated from derive_seed(seed, index), and
// per-worker tallies are plain sums, so results depend only on the inputs and
// never on the number of worker threads.

#ifndef TRIBRIDGE_HARNESS_HPP_
#define TRIBRIDGE_HARNESS_HPP_

#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "tribridge/analytics.hpp"
#include "tribridge/auction.hpp"
#include "tribridge/card.hpp"
#include "tribridge/play.hpp"
#include "tribridge/policies.hpp"
#include "tribridge/scoring.hpp"

namespace tribridge {

inline constexpr const char* kVersion = "1.0.0";

inline unsigned default_workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Runs fn(worker) on `workers` threads (inline when there is one).
template <typename Fn>
void run_workers(unsigned workers, Fn fn) {
  if (workers <= 1) {
    fn(0U);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        fn(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

struct PolicyTriple {
  std::array<std::unique_ptr<PlayPolicy>, kNumPlayers> owned;
  std::array<PlayPolicy*, kNumPlayers> ptrs{};

  static PolicyTriple uniform(const std::string& spec) {
    return from({spec, spec, spec});
  }
  static PolicyTriple from(const std::array<std::string, kNumPlayers>& specs) {
    PolicyTriple t;
    for (int s = 0; s < kNumPlayers; ++s) {
      t.owned[s] = make_play_policy(specs[s]);
      t.ptrs[s] = t.owned[s].get();
    }
    return t;
  }
};

// ---------------------------------------------------------------------------
// No-trump bidding simulation

struct LevelCounts {
  std::uint64_t calls = 0;
  std::uint64_t made = 0;
  std::uint64_t failed = 0;
  friend bool operator==(const LevelCounts&, const LevelCounts&) = default;
};

struct SimOptions {
  std::string policy = "general";
  Seat declarer = 2;
  unsigned workers = 0;  // 0 = hardware concurrency
};

struct SimReport {
  Thresholds thresholds{};
  std::uint64_t total_deals = 0;
  std::uint64_t seed = 0;
  std::string policy;
  Seat declarer = 2;
  std::array<LevelCounts, 3> levels{};

  std::string ruleset() const {
    return std::to_string(thresholds[0]) + "+/" + std::to_string(thresholds[1]) + "+/" +
           std::to_string(thresholds[2]) + "+";
  }
};

// The declarer seat always wins the auction at the highest no-trump level
// its point count reaches; deals that reach no level are not played. Called
// deals are played out by `policy` at every seat and count as made when the
// declaring side takes level + 6 tricks.
inline SimReport simulate_nt_bidding(const Thresholds& thresholds, std::uint64_t n_deals,
                                     std::uint64_t seed, const SimOptions& opts = {}) {
  check_thresholds(thresholds);
  if (opts.declarer < 0 || opts.declarer >= kNumPlayers) {
    throw DomainError("declarer must be seat 0-2");
  }
  make_play_policy(opts.policy);  // validate before spawning workers

  SimReport report;
  report.thresholds = thresholds;
  report.total_deals = n_deals;
  report.seed = seed;
  report.policy = opts.policy;
  report.declarer = opts.declarer;

  const unsigned workers = opts.workers ? opts.workers : default_workers();
  std::vector<std::array<LevelCounts, 3>> partial(workers);
  run_workers(workers, [&](unsigned w) {
    PolicyTriple policies = PolicyTriple::uniform(opts.policy);
    auto& tally = partial[w];
    for (std::uint64_t i = w; i < n_deals; i += workers) {
      const Deal deal = deal_random(derive_seed(seed, i));
      const int level = nt_level_for(hand_points(deal.hands[opts.declarer]), thresholds);
      if (level == 0) continue;
      const Contract contract{opts.declarer, level, Denomination::kNoTrump, Doubling::kNone};
      const TrickOutcome out = play_deal(deal, contract, policies.ptrs);
      LevelCounts& c = tally[level - 1];
      ++c.calls;
      if (out.declarer_tricks >= contract.target_tricks()) {
        ++c.made;
      } else {
        ++c.failed;
      }
    }
  });
  for (const auto& tally : partial) {
    for (int k = 0; k < 3; ++k) {
      report.levels[k].calls += tally[k].calls;
      report.levels[k].made += tally[k].made;
      report.levels[k].failed += tally[k].failed;
    }
  }
  return report;
}

inline void to_json(nlohmann::json& j, const SimReport& r) {
  nlohmann::json levels = nlohmann::json::array();
  for (int k = 0; k < 3; ++k) {
    levels.push_back({{"level", std::to_string(k + 1) + "NT"},
                      {"calls", r.levels[k].calls},
                      {"made", r.levels[k].made},
                      {"failed", r.levels[k].failed}});
  }
  j = nlohmann::json{
      {"metadata",
       {{"seed", r.seed},
        {"version", kVersion},
        {"config",
         {{"thresholds", r.thresholds}, {"deals", r.total_deals}, {"policy", r.policy},
          {"declarer", r.declarer}}}}},
      {"ruleset", r.ruleset()},
      {"totalDeals", r.total_deals},
      {"levels", levels}};
}

inline void write_csv(std::ostream& os, const SimReport& r) {
  os << "ruleset,level,calls,made,failed\n";
  for (int k = 0; k < 3; ++k) {
    os << r.ruleset() << ',' << (k + 1) << "NT," << r.levels[k].calls << ','
       << r.levels[k].made << ',' << r.levels[k].failed << '\n';
  }
}

// ---------------------------------------------------------------------------
// Tournaments

struct SeatConfig {
  std::string play = "general";
  std::string bid = "defensive";
};

// "<play>", "<bid>" or "<play>/<bid>", e.g. "general/bluff" or "points:20,25,30".
inline SeatConfig parse_seat_spec(std::string_view spec) {
  SeatConfig cfg;
  const auto slash = spec.find('/');
  if (slash != std::string_view::npos) {
    cfg.play = std::string(spec.substr(0, slash));
    cfg.bid = std::string(spec.substr(slash + 1));
  } else if (is_play_policy(spec)) {
    cfg.play = std::string(spec);
  } else if (is_bid_policy(spec)) {
    cfg.bid = std::string(spec);
  } else {
    throw ParseError("unknown seat policy '" + std::string(spec) + "'");
  }
  make_play_policy(cfg.play);
  make_bid_policy(cfg.bid);
  return cfg;
}

inline std::string seat_spec_text(const SeatConfig& c) { return c.play + "/" + c.bid; }

struct TournamentConfig {
  std::array<SeatConfig, kNumPlayers> seats{};
  std::uint64_t deals = 12;
  std::uint64_t seed = 1;
  std::vector<Scheme> schemes = {Scheme::kPrevious, Scheme::kNew};
};

struct TournamentRow {
  int game = 0;  // 1-based
  Seat bidder = 0;
  Contract contract;
  int declarer_tricks = 0;
  bool made = false;
  std::array<std::array<double, kNumPlayers>, 2> points{};  // indexed by Scheme
  std::vector<CallRecord> auction;
};

struct TournamentReport {
  TournamentConfig config;
  std::vector<TournamentRow> rows;
  std::array<std::array<double, kNumPlayers>, 2> totals{};
  std::array<MomentSummary, 2> spread{};  // moments of the per-player totals
};

inline std::size_t scheme_index(Scheme s) { return static_cast<std::size_t>(s); }

inline void summarize(TournamentReport& report) {
  report.totals = {};
  for (const auto& row : report.rows) {
    for (int s = 0; s < 2; ++s) {
      for (int p = 0; p < kNumPlayers; ++p) report.totals[s][p] += row.points[s][p];
    }
  }
  for (int s = 0; s < 2; ++s) report.spread[s] = moments(report.totals[s]);
}

inline TournamentReport run_tournament(const TournamentConfig& config) {
  if (config.schemes.empty()) throw DomainError("at least one scheme is required");
  TournamentReport report;
  report.config = config;

  std::array<std::unique_ptr<BidPolicy>, kNumPlayers> bidders;
  std::array<std::string, kNumPlayers> play_specs;
  for (int s = 0; s < kNumPlayers; ++s) {
    bidders[s] = make_bid_policy(config.seats[s].bid);
    play_specs[s] = config.seats[s].play;
  }
  PolicyTriple players = PolicyTriple::from(play_specs);

  for (std::uint64_t i = 0; i < config.deals; ++i) {
    const Deal deal = deal_random(derive_seed(config.seed, i));
    AuctionState auction(static_cast<Seat>(i % kNumPlayers));
    while (!auction.complete()) {
      const Seat seat = auction.to_act();
      const Call call = bidders[seat]->choose(auction, deal.hands[seat], seat);
      auction = auction.apply(seat, call);
    }
    const Contract contract = auction.contract();
    const TrickOutcome out = play_deal(deal, contract, players.ptrs);
    const HonorsInfo honors =
        honors_from_hands(deal.hands[contract.declarer], deal.hands[kDummySeat], contract.denom);

    TournamentRow row;
    row.game = static_cast<int>(i + 1);
    row.bidder = contract.declarer;
    row.contract = contract;
    row.declarer_tricks = out.declarer_tricks;
    row.made = out.declarer_tricks >= contract.target_tricks();
    row.auction = auction.history();
    for (Scheme scheme : {Scheme::kPrevious, Scheme::kNew}) {
      row.points[scheme_index(scheme)] =
          score_deal(contract, out.declarer_tricks, honors, scheme).per_seat;
    }
    report.rows.push_back(std::move(row));
  }
  summarize(report);
  return report;
}

inline void to_json(nlohmann::json& j, const TournamentReport& r) {
  nlohmann::json seats = nlohmann::json::array();
  for (const auto& s : r.config.seats) seats.push_back(seat_spec_text(s));
  nlohmann::json schemes = nlohmann::json::array();
  for (Scheme s : r.config.schemes) schemes.push_back(scheme_name(s));

  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json item{{"game", row.game},
                        {"bidder", row.bidder},
                        {"contract", row.contract.to_string()},
                        {"doubling", doubling_text(row.contract.doubling)},
                        {"tricks", row.declarer_tricks},
                        {"outcome", row.made ? "Win" : "Loss"}};
    nlohmann::json calls = nlohmann::json::array();
    for (const auto& c : row.auction) calls.push_back(c.call.to_string());
    item["auction"] = calls;
    for (Scheme s : r.config.schemes) item["points"][scheme_name(s)] = row.points[scheme_index(s)];
    rows.push_back(item);
  }
  nlohmann::json totals, sd;
  for (Scheme s : r.config.schemes) {
    totals[scheme_name(s)] = r.totals[scheme_index(s)];
    sd[scheme_name(s)] = r.spread[scheme_index(s)].sd;
  }
  j = nlohmann::json{{"metadata",
                      {{"seed", r.config.seed},
                       {"version", kVersion},
                       {"config", {{"seats", seats}, {"deals", r.config.deals}, {"schemes", schemes}}}}},
                     {"rows", rows},
                     {"totals", totals},
                     {"sd", sd}};
}

inline std::string format_points(double v) {
  nlohmann::json j = v;
  if (v == static_cast<double>(static_cast<long long>(v))) return std::to_string(static_cast<long long>(v));
  return j.dump();
}

inline void write_csv(std::ostream& os, const TournamentReport& r) {
  os << "game,bidder,contract,doubling,tricks,scheme,p0,p1,p2\n";
  for (const auto& row : r.rows) {
    for (Scheme s : r.config.schemes) {
      const auto& p = row.points[scheme_index(s)];
      os << row.game << ',' << row.bidder << ',' << row.contract.to_string() << ','
         << doubling_text(row.contract.doubling) << ',' << row.declarer_tricks << ','
         << scheme_name(s) << ',' << format_points(p[0]) << ',' << format_points(p[1]) << ','
         << format_points(p[2]) << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// Partner-split enumeration

struct SplitOptions {
  bool exact = false;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  std::string policy = "general";
  Seat declarer = 1;  // defenders are the two other player seats
  unsigned workers = 0;
  // Called from worker 0 with (splits done by that worker, total splits).
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

struct SplitDistribution {
  std::array<std::uint64_t, kNumTricks + 1> frequency{};  // declarer-side tricks
  bool exact = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::string policy;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto f : frequency) t += f;
    return t;
  }
};

// Fixes the declarer's and phantom hands and plays out every way (or a
// uniform sample of the ways) the other 26 cards can split between the two
// defenders, tallying the declaring side's tricks at no-trump.
inline SplitDistribution enumerate_splits(Hand declarer_hand, Hand dummy_hand,
                                          const SplitOptions& opts = {}) {
  if (declarer_hand.size() != kHandSize || dummy_hand.size() != kHandSize) {
    throw DomainError("both fixed hands need 13 cards");
  }
  if (!declarer_hand.disjoint(dummy_hand)) throw DomainError("fixed hands overlap");
  if (opts.declarer < 0 || opts.declarer >= kNumPlayers) {
    throw DomainError("declarer must be seat 0-2");
  }
  make_play_policy(opts.policy);

  const std::vector<Card> rest = (Hand::full_deck() - declarer_hand - dummy_hand).cards();
  std::array<Seat, 2> defenders{};
  for (Seat s = 0, k = 0; s < kNumPlayers; ++s) {
    if (s != opts.declarer) defenders[k++] = s;
  }
  const Contract contract{opts.declarer, 1, Denomination::kNoTrump, Doubling::kNone};

  SplitDistribution dist;
  dist.exact = opts.exact;
  dist.seed = opts.seed;
  dist.policy = opts.policy;

  const unsigned workers = opts.workers ? opts.workers : default_workers();
  std::vector<std::array<std::uint64_t, kNumTricks + 1>> partial(workers);

  auto play_split = [&](std::uint32_t mask, PolicyTriple& policies,
                        std::array<std::uint64_t, kNumTricks + 1>& tally) {
    Deal deal;
    deal.hands[opts.declarer] = declarer_hand;
    deal.hands[kDummySeat] = dummy_hand;
    for (std::size_t b = 0; b < rest.size(); ++b) {
      deal.hands[defenders[(mask >> b) & 1U ? 0 : 1]].add(rest[b]);
    }
    ++tally[play_deal(deal, contract, policies.ptrs).declarer_tricks];
  };

  if (opts.exact) {
    const std::uint64_t total = 10400600;  // C(26, 13)
    dist.samples = total;
    run_workers(workers, [&](unsigned w) {
      PolicyTriple policies = PolicyTriple::uniform(opts.policy);
      std::uint64_t index = 0, done = 0;
      // Gosper's hack: next 26-bit mask with the same popcount.
      for (std::uint32_t v = (1U << kHandSize) - 1; v < (1U << 26);) {
        if (index++ % workers == w) {
          play_split(v, policies, partial[w]);
          if (w == 0 && opts.progress && (++done & 0xFFFFF) == 0) opts.progress(done, total);
        }
        const std::uint32_t t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
      }
    });
  } else {
    dist.samples = opts.samples;
    run_workers(workers, [&](unsigned w) {
      PolicyTriple policies = PolicyTriple::uniform(opts.policy);
      std::array<int, 26> order;
      for (std::uint64_t i = w; i < opts.samples; i += workers) {
        for (int k = 0; k < 26; ++k) order[k] = k;
        Rng rng(derive_seed(opts.seed, i));
        for (int k = 25; k > 0; --k) {
          std::swap(order[k], order[uniform_below(rng, static_cast<std::uint64_t>(k) + 1)]);
        }
        std::uint32_t mask = 0;
        for (int k = 0; k < kHandSize; ++k) mask |= 1U << order[k];
        play_split(mask, policies, partial[w]);
      }
    });
  }
  for (const auto& tally : partial) {
    for (int t = 0; t <= kNumTricks; ++t) dist.frequency[t] += tally[t];
  }
  return dist;
}

inline void to_json(nlohmann::json& j, const SplitDistribution& d) {
  j = nlohmann::json{
      {"metadata",
       {{"seed", d.seed},
        {"version", kVersion},
        {"config", {{"mode", d.exact ? "exact" : "sampled"}, {"samples", d.samples},
                    {"policy", d.policy}}}}},
      {"frequency", d.frequency},
      {"total", d.total()}};
}

inline void write_csv(std::ostream& os, const SplitDistribution& d) {
  os << "tricks,frequency\n";
  for (int t = 0; t <= kNumTricks; ++t) os << t << ',' << d.frequency[t] << '\n';
}

// The ten declarer / phantom hand pairs used for split enumeration.
inline std::array<std::pair<Hand, Hand>, 10> reference_hands() {
  static constexpr const char* kRows[10][2] = {
      {"2H 2S 5D 5H 6D 7H 8C 8S 9C JC QC TH TS", "2D 3C 3D 3H 4D 6H 7D 7S AH AS JS KD QD"},
      {"4D 4S 6D 6H 7S 8C 8D 9H AD JD QC TH TS", "3H 4C 5S 6C 6S 8H 9D AC JH JS KC QS TC"},
      {"2D 2S 3D 3H 4C 5H 6S 7S 8D 9C AH JD TD", "2C 4S 5C 5S 7D 8S AD AS JH JS KC KS QH"},
      {"2H 2S 3H 4S 5H 7C 7H 8C AC JD JH QH TH", "4D 4H 5C 6D 8D AH JC KH KS QD QS TC TS"},
      {"2H 2S 4D 7C 7D 8H 9S AH JS KC KS QD TH", "2D 3D 4C 4H 5C 6C 9C 9D JD QC QS TC TD"},
      {"2D 2S 3D 4C 6D 8H 8S 9C AS QD QH TC TS", "3C 3H 4D 5C 6H 7H AC JD JS KC QS TD TH"},
      {"2H 3D 5D 5S 8H 8S 9S JC JS KC QC TC TS", "2D 2S 3C 4C 5C 7D 7H 7S 8D 9D AC KH TH"},
      {"2C 3H 3S 6S 7D 9C 9S AC JD KC QD TH TS", "2D 2H 5C 5D 6C 6D 7S AS JC JS QC TC TD"},
      {"2D 2S 3D 4D 4H 5C 5D 8D JS KC KD TD TS", "2C 3C 3H 6H 6S 8S 9C 9D JH KH QC QS TH"},
      {"2S 3S 4C 4S 6C 6H 7D 8H 9S AS JC JH TH", "2C 4D 4H 5D 5S 6D 6S 7S 8C 8D AC KC TC"},
  };
  std::array<std::pair<Hand, Hand>, 10> out;
  for (int i = 0; i < 10; ++i) out[i] = {parse_hand(kRows[i][0]), parse_hand(kRows[i][1])};
  return out;
}

// ---------------------------------------------------------------------------
// Worked example: one fixed deal played with each strategy at every seat.

inline Deal example1_deal() {
  Deal deal;
  deal.hands[0] = parse_hand("6S 8S QS 2H 3H QH 6D QD 3C 4C 5C 7C JC");
  deal.hands[1] = parse_hand("5S 7S KS 4H TH AH 4D 5D 8D KD 9C TC AC");
  deal.hands[2] = parse_hand("2S 3S 4S 5H 9H JH KH 7D TD JD AD 6C QC");
  deal.hands[3] = parse_hand("9S TS JS AS 6H 7H 8H 2D 3D 9D 2C 8C KC");
  return deal;
}

// Seats 1 and 3 form the declaring side (the example's "Team B").
inline Contract example1_contract() {
  return Contract{1, 1, Denomination::kNoTrump, Doubling::kNone};
}

struct FixtureRow {
  std::string strategy;
  Seat leader = 0;
  std::array<int, kNumHands> per_seat{};
  std::array<int, kNumHands> expected_per_seat{};

  std::array<int, 2> teams() const { return {per_seat[0] + per_seat[2], per_seat[1] + per_seat[3]}; }
  std::array<int, 2> expected_teams() const {
    return {expected_per_seat[0] + expected_per_seat[2],
            expected_per_seat[1] + expected_per_seat[3]};
  }
  bool teams_match() const { return teams() == expected_teams(); }
  bool seats_match() const { return per_seat == expected_per_seat; }
};

struct FixtureReport {
  Contract contract;
  std::vector<FixtureRow> rows;
};

// Rows come in two groups: the standard opening-lead convention (first
// defender after the declarer, seat 2) and seat 0 on lead. The published
// per-seat vectors depend on who leads; the team totals do not.
inline FixtureReport reproduce_fixtures() {
  static const std::array<std::pair<const char*, std::array<int, kNumHands>>, 3> kExpected = {{
      {"hcf", {0, 4, 6, 3}},
      {"lcf", {1, 4, 5, 3}},
      {"general", {3, 2, 4, 4}},
  }};
  FixtureReport report;
  report.contract = example1_contract();
  const Deal deal = example1_deal();
  for (Seat leader : {opening_leader(report.contract.declarer), Seat{0}}) {
    for (const auto& [name, expected] : kExpected) {
      PolicyTriple policies = PolicyTriple::uniform(name);
      const TrickOutcome out = play_deal(deal, report.contract, policies.ptrs, leader);
      report.rows.push_back({name, leader, out.per_seat, expected});
    }
  }
  return report;
}

inline void to_json(nlohmann::json& j, const FixtureReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"strategy", row.strategy},
                    {"leader", row.leader},
                    {"perSeat", row.per_seat},
                    {"teams", row.teams()},
                    {"expectedPerSeat", row.expected_per_seat},
                    {"expectedTeams", row.expected_teams()},
                    {"teamsMatch", row.teams_match()},
                    {"perSeatMatch", row.seats_match()}});
  }
  j = nlohmann::json{{"metadata", {{"version", kVersion}, {"config", {{"fixture", "example1"}}}}},
                     {"contract", r.contract},
                     {"rows", rows}};
}

inline void write_csv(std::ostream& os, const FixtureReport& r) {
  os << "strategy,leader,p0,p1,p2,p3,teamA,teamB,expected_teamA,expected_teamB,teams_match,"
        "per_seat_match\n";
  for (const auto& row : r.rows) {
    const auto t = row.teams();
    const auto e = row.expected_teams();
    os << row.strategy << ',' << row.leader << ',' << row.per_seat[0] << ',' << row.per_seat[1]
       << ',' << row.per_seat[2] << ',' << row.per_seat[3] << ',' << t[0] << ',' << t[1] << ','
       << e[0] << ',' << e[1] << ',' << (row.teams_match() ? "yes" : "no") << ','
       << (row.seats_match() ? "yes" : "no") << '\n';
  }
}

}  // namespace tribridge

#endif  // TRIBRIDGE_HARNESS_HPP_
