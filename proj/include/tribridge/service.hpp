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

// Live-play sessions: humans hold one or more of the three seats, bots fill
// the rest. Transport-independent; see http_server.hpp for the wire side.
//
// Message envelope, both directions:
//   {"type": ..., "sessionId": ..., "seat": ..., "payload": {...},
//    "stateVersion": n}
//
// Actions (payload of an "action" message):
//   {"type": "call", "call": "1NT" | "PASS" | "X" | "XX"}
//   {"type": "play", "card": "QS"}
// A declaring human plays the phantom hand's cards with its own seat number.
//
// stateVersion grows by one per accepted action, bot moves included. An
// action carrying a stale stateVersion is refused with a conflict, so of
// two clients racing on the same version exactly one wins.

#ifndef TRIBRIDGE_SERVICE_HPP_
#define TRIBRIDGE_SERVICE_HPP_

#include <array>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <vector>

#include "json.hpp"
#include "tribridge/auction.hpp"
#include "tribridge/card.hpp"
#include "tribridge/errors.hpp"
#include "tribridge/harness.hpp"
#include "tribridge/play.hpp"
#include "tribridge/policies.hpp"
#include "tribridge/scoring.hpp"

namespace tribridge {

inline constexpr const char* kHumanSeat = "human";

struct SessionConfig {
  // "human" or a bot seat spec such as "general/defensive".
  std::array<std::string, kNumPlayers> seats{kHumanSeat, "general/defensive", "general/defensive"};
  std::optional<std::uint64_t> seed;  // fresh entropy when absent
  // Deal again after each settlement; otherwise the session ends.
  bool continuous = true;
};

inline SessionConfig session_config_from_json(const nlohmann::json& j) {
  SessionConfig cfg;
  try {
    if (j.contains("seats")) {
      const auto& seats = j.at("seats");
      if (!seats.is_array() || seats.size() != kNumPlayers) {
        throw DomainError("seats must list exactly 3 entries");
      }
      for (int s = 0; s < kNumPlayers; ++s) cfg.seats[s] = seats[s].get<std::string>();
    }
    if (j.contains("seed") && !j.at("seed").is_null()) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("continuous")) cfg.continuous = j.at("continuous").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid session config: ") + e.what());
  }
  return cfg;
}

// One legal move for the seat asking. `from` is the hand the card leaves,
// which differs from the acting seat when the declarer plays the phantom.
struct Action {
  enum class Kind : std::uint8_t { kCall, kPlay };
  Kind kind = Kind::kCall;
  Call call = Call::pass();
  Card card;
  Seat from = 0;
};

inline Action parse_action(const nlohmann::json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    Action a;
    if (type == "call") {
      a.kind = Action::Kind::kCall;
      a.call = parse_call(j.at("call").get<std::string>());
    } else if (type == "play") {
      a.kind = Action::Kind::kPlay;
      a.card = parse_card(j.at("card").get<std::string>());
    } else {
      throw ParseError("unknown action type '" + type + "'");
    }
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid action: ") + e.what());
  }
}

inline nlohmann::json action_json(const Action& a) {
  if (a.kind == Action::Kind::kCall) return {{"type", "call"}, {"call", a.call.to_string()}};
  return {{"type", "play"}, {"card", a.card.to_string()}, {"from", a.from}};
}

struct DealRecord {
  int number = 0;  // 1-based
  Contract contract;
  int declarer_tricks = 0;
  std::array<Settlement, 2> settlements;  // indexed by Scheme
};

inline nlohmann::json deal_record_json(const DealRecord& r) {
  return {{"deal", r.number},
          {"contract", r.contract},
          {"declarerTricks", r.declarer_tricks},
          {"made", r.settlements[0].made},
          {"settlement",
           {{"prev", r.settlements[scheme_index(Scheme::kPrevious)]},
            {"new", r.settlements[scheme_index(Scheme::kNew)]}}}};
}

class Session {
 public:
  enum class Phase : std::uint8_t { kAuction, kPlay, kComplete };

  Session(std::string id, SessionConfig config) : id_(std::move(id)), config_(std::move(config)) {
    int humans = 0;
    for (int s = 0; s < kNumPlayers; ++s) {
      if (config_.seats[s] == kHumanSeat) {
        ++humans;
        continue;
      }
      const SeatConfig bot = parse_seat_spec(config_.seats[s]);
      config_.seats[s] = seat_spec_text(bot);
      bidders_[s] = make_bid_policy(bot.bid);
      players_[s] = make_play_policy(bot.play);
    }
    if (humans == 0) throw DomainError("a session needs at least one human seat");
    seed_ = config_.seed ? *config_.seed : std::random_device{}() * 0x100000001ULL;
    start_deal();
    advance_bots();
  }

  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  const std::string& id() const { return id_; }

  std::uint64_t version() const {
    std::lock_guard lock(mu_);
    return version_;
  }

  bool is_human(Seat seat) const {
    return seat >= 0 && seat < kNumPlayers && config_.seats[seat] == kHumanSeat;
  }

  // Applies `action` for `seat`, then lets bots move. Returns the new
  // stateVersion. Nothing changes when an exception is thrown.
  std::uint64_t apply(Seat seat, const Action& action,
                      std::optional<std::uint64_t> expected_version = std::nullopt) {
    std::unique_lock lock(mu_);
    check_seat(seat);
    if (expected_version && *expected_version != version_) {
      throw Conflict("stateVersion " + std::to_string(*expected_version) + " is stale; current is " +
                     std::to_string(version_));
    }
    step(seat, action);
    advance_bots();
    lock.unlock();
    changed_.notify_all();
    return version();
  }

  nlohmann::json view(Seat seat) const {
    std::lock_guard lock(mu_);
    check_seat(seat);
    return view_locked(seat);
  }

  // Public events after `since`, waiting up to `timeout` for one to appear.
  nlohmann::json events_since(std::uint64_t since, std::chrono::milliseconds timeout) const {
    std::unique_lock lock(mu_);
    changed_.wait_for(lock, timeout, [&] { return version_ > since; });
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : events_) {
      if (e.at("stateVersion").get<std::uint64_t>() > since) out.push_back(e);
    }
    return out;
  }

  // Blocks until the version passes `since` or `timeout` elapses.
  std::uint64_t wait_for_change(std::uint64_t since, std::chrono::milliseconds timeout) const {
    std::unique_lock lock(mu_);
    changed_.wait_for(lock, timeout, [&] { return version_ > since; });
    return version_;
  }

  // Consistency check used by tests: replaying the recorded moves of the
  // current deal from its seed reproduces the live state.
  bool replay_consistent() const {
    std::lock_guard lock(mu_);
    const Deal fresh = deal_random(derive_seed(seed_, deal_index_));
    if (!(fresh == deal_)) return false;
    AuctionState a(auction_.opener());
    for (const auto& rec : auction_.history()) {
      if (!a.is_legal(rec.seat, rec.call)) return false;
      a = a.apply(rec.seat, rec.call);
    }
    if (!play_) return phase_ == Phase::kAuction || phase_ == Phase::kComplete;
    PlayState p(deal_, play_->contract());
    for (const auto& rec : play_->log()) {
      if (!p.legal_plays(rec.seat).contains(rec.card)) return false;
      p.play(rec.seat, rec.card);
    }
    return p.tricks_by_seat() == play_->tricks_by_seat();
  }

 private:
  void check_seat(Seat seat) const {
    if (seat < 0 || seat >= kNumPlayers) {
      throw NotFound("seat " + std::to_string(seat) + " is not in this session");
    }
    if (!is_human(seat)) throw NotFound("seat " + std::to_string(seat) + " is not a human seat");
  }

  void start_deal() {
    deal_ = deal_random(derive_seed(seed_, deal_index_));
    auction_ = AuctionState(static_cast<Seat>(deal_index_ % kNumPlayers));
    play_.reset();
    phase_ = Phase::kAuction;
    push_event("deal", -1, {{"deal", deal_index_ + 1}, {"opener", auction_.opener()}});
  }

  // Seat whose decision is pending (the declarer when the phantom plays).
  Seat actor() const {
    if (phase_ == Phase::kAuction) return auction_.to_act();
    return play_->controller(play_->to_act());
  }

  void step(Seat seat, const Action& action) {
    if (phase_ == Phase::kComplete) throw IllegalAction("session-complete", "no deal in progress");
    if (action.kind == Action::Kind::kCall) {
      if (phase_ != Phase::kAuction) throw IllegalAction("not-bidding", "the auction is over");
      auction_ = auction_.apply(seat, action.call);
      push_event("call", seat, {{"call", action.call.to_string()}});
      if (auction_.complete()) {
        play_.emplace(deal_, auction_.contract());
        phase_ = Phase::kPlay;
        push_event("contract", -1, {{"contract", auction_.contract()}});
      }
      return;
    }
    if (phase_ != Phase::kPlay) throw IllegalAction("not-playing", "the auction is still open");
    const Seat hand = play_->to_act();
    if (play_->controller(hand) != seat) {
      throw IllegalAction("out-of-turn", "seat " + std::to_string(play_->controller(hand)) +
                                             " is to play");
    }
    play_->play(hand, action.card);
    push_event("play", seat, {{"card", action.card.to_string()}, {"from", hand}});
    if (play_->complete()) settle();
  }

  void settle() {
    const Contract c = play_->contract();
    DealRecord rec;
    rec.number = deal_index_ + 1;
    rec.contract = c;
    rec.declarer_tricks = play_->declarer_tricks();
    const HonorsInfo honors =
        honors_from_hands(deal_.hands[c.declarer], deal_.hands[kDummySeat], c.denom);
    for (Scheme s : {Scheme::kPrevious, Scheme::kNew}) {
      rec.settlements[scheme_index(s)] = score_deal(c, rec.declarer_tricks, honors, s);
      for (int p = 0; p < kNumPlayers; ++p) {
        totals_[scheme_index(s)][p] += rec.settlements[scheme_index(s)].per_seat[p];
      }
    }
    history_.push_back(rec);
    push_event("settlement", -1, deal_record_json(rec));
    if (config_.continuous) {
      ++deal_index_;
      start_deal();
    } else {
      phase_ = Phase::kComplete;
    }
  }

  void advance_bots() {
    while (phase_ != Phase::kComplete) {
      const Seat seat = actor();
      if (is_human(seat)) return;
      Action a;
      if (phase_ == Phase::kAuction) {
        a.kind = Action::Kind::kCall;
        a.call = bidders_[seat]->choose(auction_, deal_.hands[seat], seat);
      } else {
        a.kind = Action::Kind::kPlay;
        a.card = players_[seat]->choose(view_for(*play_, play_->to_act()));
      }
      step(seat, a);
    }
  }

  void push_event(const char* type, Seat seat, nlohmann::json payload) {
    ++version_;
    events_.push_back({{"type", type},
                       {"sessionId", id_},
                       {"seat", seat < 0 ? nlohmann::json(nullptr) : nlohmann::json(seat)},
                       {"payload", std::move(payload)},
                       {"stateVersion", version_}});
  }

  std::vector<Action> legal_actions(Seat seat) const {
    std::vector<Action> out;
    if (phase_ == Phase::kComplete || actor() != seat) return out;
    if (phase_ == Phase::kAuction) {
      for (const Call& c : auction_.legal_calls(seat)) {
        Action a;
        a.call = c;
        out.push_back(a);
      }
      return out;
    }
    const Seat hand = play_->to_act();
    for (Card c : play_->legal_plays(hand)) {
      Action a;
      a.kind = Action::Kind::kPlay;
      a.card = c;
      a.from = hand;
      out.push_back(a);
    }
    return out;
  }

  nlohmann::json view_locked(Seat seat) const {
    static constexpr const char* kPhase[] = {"auction", "play", "complete"};
    nlohmann::json v;
    v["sessionId"] = id_;
    v["seat"] = seat;
    v["stateVersion"] = version_;
    v["deal"] = deal_index_ + 1;
    v["phase"] = kPhase[static_cast<int>(phase_)];
    v["seats"] = config_.seats;
    v["hand"] = play_ ? play_->hand(seat) : deal_.hands[seat];
    v["auction"] = auction_;
    v["dummy"] = nullptr;
    v["contract"] = nullptr;
    v["currentTrick"] = nlohmann::json::array();
    v["lastTrick"] = nlohmann::json::array();
    if (play_) {
      v["contract"] = play_->contract();
      // The phantom hand is exposed to everyone after the opening lead.
      if (play_->dummy_revealed()) v["dummy"] = play_->hand(kDummySeat);
      for (const auto& t : play_->current_trick()) v["currentTrick"].push_back(t);
      for (const auto& t : play_->last_trick()) v["lastTrick"].push_back(t);
      v["tricksBySeat"] = play_->tricks_by_seat();
      v["trickNumber"] = play_->complete() ? kNumTricks : play_->trick_number();
    }
    if (phase_ != Phase::kComplete) {
      v["toAct"] = phase_ == Phase::kAuction ? auction_.to_act() : play_->to_act();
      v["yourTurn"] = actor() == seat;
    } else {
      v["toAct"] = nullptr;
      v["yourTurn"] = false;
    }
    v["legalActions"] = nlohmann::json::array();
    for (const Action& a : legal_actions(seat)) v["legalActions"].push_back(action_json(a));
    v["scores"] = {{"prev", totals_[scheme_index(Scheme::kPrevious)]},
                   {"new", totals_[scheme_index(Scheme::kNew)]}};
    v["settlements"] = nlohmann::json::array();
    for (const auto& r : history_) v["settlements"].push_back(deal_record_json(r));
    return v;
  }

  const std::string id_;
  SessionConfig config_;
  std::array<std::unique_ptr<BidPolicy>, kNumPlayers> bidders_;
  std::array<std::unique_ptr<PlayPolicy>, kNumPlayers> players_;
  std::uint64_t seed_ = 0;

  mutable std::mutex mu_;
  mutable std::condition_variable changed_;
  std::uint64_t version_ = 0;
  int deal_index_ = 0;
  Deal deal_;
  AuctionState auction_;
  std::optional<PlayState> play_;
  Phase phase_ = Phase::kAuction;
  std::vector<DealRecord> history_;
  std::array<std::array<double, kNumPlayers>, 2> totals_{};
  std::vector<nlohmann::json> events_;
};

class SessionManager {
 public:
  std::string create(const SessionConfig& config) {
    auto session = std::make_shared<Session>(new_id(), config);
    std::unique_lock lock(mu_);
    const std::string id = session->id();
    sessions_.emplace(id, std::move(session));
    return id;
  }

  std::shared_ptr<Session> get(const std::string& id) const {
    std::shared_lock lock(mu_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) throw NotFound("unknown session '" + id + "'");
    return it->second;
  }

  bool remove(const std::string& id) {
    std::unique_lock lock(mu_);
    return sessions_.erase(id) > 0;
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return sessions_.size();
  }

 private:
  std::string new_id() {
    std::lock_guard lock(id_mu_);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string id;
    for (int i = 0; i < 32; ++i) id.push_back(kHex[id_rng_() & 15U]);
    return id;
  }

  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mutex id_mu_;
  std::mt19937_64 id_rng_{std::random_device{}()};
};

}  // namespace tribridge

#endif  // TRIBRIDGE_SERVICE_HPP_
