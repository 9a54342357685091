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

// Command-line front end. run_cli returns 0 on success, 2 on a usage error
// and 1 on a runtime failure. The effective configuration, seed included,
// goes to the error stream as one "config:" line so stdout stays parseable.

#ifndef TRIBRIDGE_CLI_HPP_
#define TRIBRIDGE_CLI_HPP_

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tribridge/analytics.hpp"
#include "tribridge/harness.hpp"
#include "tribridge/http_server.hpp"
#include "tribridge/service.hpp"

namespace tribridge {

inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr unsigned short kDefaultPort = 8080;

// Scientific notation with a bare exponent: 4.11606e-6.
inline std::string format_sci(double v, int significant = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", significant - 1, v);
  std::string s(buf);
  const auto e = s.find('e');
  if (e == std::string::npos) return s;
  std::string mantissa = s.substr(0, e);
  std::string exp = s.substr(e + 1);
  const char sign = exp[0];
  exp = exp.substr(1);
  while (exp.size() > 1 && exp[0] == '0') exp.erase(0, 1);
  return mantissa + "e" + (sign == '-' ? "-" : "") + exp;
}

inline std::string format_fixed(double v, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << v;
  return os.str();
}

namespace cli_detail {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void print(std::ostream& os) const {
    std::vector<std::size_t> width(header.size(), 0);
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
      for (std::size_t c = 0; c < r.size() && c < width.size(); ++c)
        width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c) os << "  ";
        os << std::setw(static_cast<int>(width[c])) << (c == 0 ? std::left : std::right)
           << cells[c];
      }
      os << std::right << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
  }
};

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

inline bool is_number(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

// "general,points:20,25,30,hcf/bluff" -> three specs; numeric tokens after
// a "points:" spec belong to it.
inline std::array<std::string, kNumPlayers> split_seats(const std::string& text) {
  std::vector<std::string> specs;
  for (const auto& tok : split(text, ',')) {
    if (is_number(tok) && !specs.empty() && specs.back().find("points:") != std::string::npos &&
        std::count(specs.back().begin(), specs.back().end(), ',') < 2) {
      specs.back() += "," + tok;
    } else {
      specs.push_back(tok);
    }
  }
  if (specs.size() != kNumPlayers) {
    throw ParseError("--seats needs exactly 3 seat specs, got " + std::to_string(specs.size()));
  }
  return {specs[0], specs[1], specs[2]};
}

inline std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  for (const auto& tok : split(text, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("invalid value '" + tok + "'");
    }
  }
  if (out.empty()) throw ParseError("--values needs at least one number");
  return out;
}

inline std::uint64_t resolve_seed(const std::string& text) {
  if (text == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(text, &used);
    if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError("--seed must be a non-negative integer or 'random'");
  }
}

inline std::pair<Hand, Hand> load_hands(const std::string& spec) {
  if (spec.rfind("ref:", 0) == 0) {
    const std::string row = spec.substr(4);
    if (!is_number(row) || std::stoi(row) < 1 || std::stoi(row) > 10) {
      throw ParseError("reference rows are numbered 1-10");
    }
    return reference_hands()[std::stoi(row) - 1];
  }
  std::ifstream in(spec);
  if (!in) throw ParseError("cannot read hands file '" + spec + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos && line[0] != '#') lines.push_back(line);
  }
  if (lines.size() != 2) throw ParseError("hands file needs two lines: declarer, phantom");
  return {parse_hand(lines[0]), parse_hand(lines[1])};
}

}  // namespace cli_detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using cli_detail::Table;

  CLI::App app{"Three-player auction bridge engine and strategy lab", "tribridge"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  std::string format = "table";
  std::string output;
  std::string seed_text = std::to_string(kDefaultSeed);
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("-o,--output", output, "Write results to this file instead of stdout");
  app.add_option("--seed", seed_text, "Integer seed, or 'random'")->capture_default_str();

  // prob
  auto* prob = app.add_subcommand("prob", "Exact probabilities");
  prob->require_subcommand(1);
  auto* prob_safe = prob->add_subcommand("safe-min-bid", "Chance of a safe one-club hand");
  auto* prob_combos = prob->add_subcommand("combos", "Honor-combination probabilities");
  std::string combo_spec = "all";
  prob_combos->add_option("spec", combo_spec, "s1|s2|s3|all or RANKS:row,row")
      ->capture_default_str();

  // dist
  auto* dist = app.add_subcommand("dist", "Distributions");
  dist->require_subcommand(1);
  auto* dist_points = dist->add_subcommand("points", "Point-count distribution of one hand");
  std::string scale_text = "A=5,K=4,Q=3,J=2,T=1";
  std::string dist_thresholds = "20,25,30";
  dist_points->add_option("--scale", scale_text)->capture_default_str();
  dist_points->add_option("--thresholds", dist_thresholds)->capture_default_str();

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo simulations");
  sim->require_subcommand(1);
  auto* sim_nt = sim->add_subcommand("nt", "No-trump bidding rule simulation");
  std::string sim_thresholds = "20,25,30";
  std::uint64_t sim_n = 100000;
  SimOptions sim_opts;
  sim_nt->add_option("--thresholds", sim_thresholds)->capture_default_str();
  sim_nt->add_option("-n,--deals", sim_n)->capture_default_str();
  sim_nt->add_option("--policy", sim_opts.policy)->capture_default_str();
  sim_nt->add_option("--declarer", sim_opts.declarer)->check(CLI::Range(0, 2))->capture_default_str();
  sim_nt->add_option("--workers", sim_opts.workers, "0 = all cores")->capture_default_str();

  // tournament
  auto* tour = app.add_subcommand("tournament", "Multi-deal match between policies");
  std::string seats_text = "general/defensive,general/defensive,general/defensive";
  std::uint64_t tour_n = 12;
  std::string schemes_text = "prev,new";
  tour->add_option("--seats", seats_text, "Three seat specs, play[/bid]")->capture_default_str();
  tour->add_option("-n,--deals", tour_n)->capture_default_str();
  tour->add_option("--schemes", schemes_text)->capture_default_str();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Play out defender splits for fixed hands");
  std::string hands_spec;
  bool exact = false;
  std::uint64_t samples = 10000;
  SplitOptions split_opts;
  enumerate->add_option("--hands", hands_spec, "File with two hands, or ref:<row> (1-10)")
      ->required();
  auto* exact_flag = enumerate->add_flag("--exact", exact, "All C(26,13) splits");
  enumerate->add_option("--sample", samples, "Number of sampled splits")
      ->excludes(exact_flag)
      ->capture_default_str();
  enumerate->add_option("--policy", split_opts.policy)->capture_default_str();
  enumerate->add_option("--declarer", split_opts.declarer)
      ->check(CLI::Range(0, 2))
      ->capture_default_str();
  enumerate->add_option("--workers", split_opts.workers, "0 = all cores")->capture_default_str();

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "Worked-example reproduction");
  std::string fixture_name;
  fixtures->add_option("name", fixture_name)->required()->check(CLI::IsMember({"example1"}));

  // stats
  auto* stats = app.add_subcommand("stats", "Descriptive statistics");
  std::string values_text;
  stats->add_option("--values", values_text, "Comma-separated numbers")->required();

  // play / serve
  auto* play = app.add_subcommand("play", "Start a live session and serve it");
  bool interactive = false;
  std::string play_seats = "human,general/defensive,general/defensive";
  play->add_flag("--interactive", interactive, "Required: play against bots")->required();
  play->add_option("--seats", play_seats)->capture_default_str();

  auto* serve = app.add_subcommand("serve", "Run the session service");
  unsigned short port = kDefaultPort;
  if (const char* env = std::getenv("TRIBRIDGE_PORT")) {
    try {
      port = static_cast<unsigned short>(std::stoul(env));
    } catch (const std::exception&) {
      err << "ignoring invalid TRIBRIDGE_PORT '" << env << "'\n";
    }
  }
  std::string address = "127.0.0.1";
  std::int64_t duration_ms = -1;
  for (auto* sub : {play, serve}) {
    sub->add_option("--port", port)->capture_default_str();
    sub->add_option("--address", address)->capture_default_str();
    sub->add_option("--duration-ms", duration_ms, "Stop after this long (default: run forever)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ofstream file;
  std::ostream* os = &out;
  auto open_output = [&] {
    if (output.empty()) return;
    file.open(output);
    if (!file) throw std::runtime_error("cannot open output file '" + output + "'");
    os = &file;
  };
  auto print_config = [&](const nlohmann::json& cfg) { err << "config: " << cfg.dump() << '\n'; };

  try {
    const std::uint64_t seed = cli_detail::resolve_seed(seed_text);
    nlohmann::json config{{"format", format}, {"seed", seed}, {"version", kVersion}};
    const auto meta = [&] { return nlohmann::json{{"seed", seed}, {"version", kVersion}, {"config", config}}; };

    if (*prob_safe) {
      config["command"] = "prob safe-min-bid";
      print_config(config);
      open_output();
      const ExactRatio r = prob_safe_min_bid();
      if (format == "json") {
        *os << nlohmann::json{{"metadata", meta()}, {"safeMinBid", r}}.dump(2) << '\n';
      } else if (format == "csv") {
        *os << "quantity,value,numerator,denominator\n"
            << "safe_min_bid," << format_sci(r.value()) << ',' << r.numerator << ','
            << r.denominator << '\n';
      } else {
        *os << "P(safe minimum bid) = " << format_sci(r.value()) << "  (" << r.numerator << " / "
            << r.denominator << ")\n";
      }
      return 0;
    }

    if (*prob_combos) {
      config["command"] = "prob combos";
      config["spec"] = combo_spec;
      print_config(config);
      std::vector<ComboSet> sets;
      if (combo_spec == "all") {
        for (int s = 1; s <= 3; ++s) sets.push_back(strategy_combos(s));
      } else {
        sets.push_back(parse_combos(combo_spec));
      }
      std::vector<ExactRatio> probs;
      for (const auto& s : sets) probs.push_back(honor_combo_prob(s));
      open_output();
      if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < sets.size(); ++i) {
          nlohmann::json row{{"name", sets[i].name}, {"probability", probs[i]}};
          row["reference"] = sets[i].reference ? nlohmann::json(*sets[i].reference) : nullptr;
          rows.push_back(row);
        }
        *os << nlohmann::json{{"metadata", meta()}, {"combos", rows}}.dump(2) << '\n';
      } else if (format == "csv") {
        *os << "name,value,numerator,denominator,reference\n";
        for (std::size_t i = 0; i < sets.size(); ++i) {
          *os << sets[i].name << ',' << format_sci(probs[i].value()) << ',' << probs[i].numerator
              << ',' << probs[i].denominator << ','
              << (sets[i].reference ? format_sci(*sets[i].reference, 2) : "") << '\n';
        }
      } else {
        Table t{{"combo set", "probability", "exact", "published"}, {}};
        for (std::size_t i = 0; i < sets.size(); ++i) {
          std::ostringstream ratio;
          ratio << probs[i].numerator << " / " << probs[i].denominator;
          t.rows.push_back({sets[i].name, format_sci(probs[i].value(), 4), ratio.str(),
                            sets[i].reference ? format_sci(*sets[i].reference, 2) : "-"});
        }
        t.print(*os);
      }
      return 0;
    }

    if (*dist_points) {
      const PointScale scale = parse_scale(scale_text);
      const Thresholds th = parse_thresholds(dist_thresholds);
      config["command"] = "dist points";
      config["scale"] = scale_text;
      config["thresholds"] = th;
      print_config(config);
      const PointDistribution d = point_distribution(scale);
      const auto buckets = bucket_probs(d, th);
      const double mean = static_cast<double>(d.mean());
      const std::array<std::string, 3> labels = {
          std::to_string(th[0]) + "-" + std::to_string(th[1] - 1),
          std::to_string(th[1]) + "-" + std::to_string(th[2] - 1), std::to_string(th[2]) + "+"};
      const std::array<ExactRatio, 3> exact_buckets = {d.range(th[0], th[1]), d.range(th[1], th[2]),
                                                       d.at_least(th[2])};
      open_output();
      if (format == "json") {
        nlohmann::json points = nlohmann::json::array();
        for (int p = 0; p <= d.max_points(); ++p) {
          points.push_back({{"points", p}, {"count", d.counts[p].str()}, {"probability", d.prob(p)}});
        }
        nlohmann::json bj = nlohmann::json::array();
        for (int k = 0; k < 3; ++k) bj.push_back({{"range", labels[k]}, {"probability", exact_buckets[k]}});
        *os << nlohmann::json{{"metadata", meta()}, {"total", d.total.str()}, {"mean", mean},
                              {"points", points}, {"buckets", bj}}
                   .dump(2)
            << '\n';
      } else if (format == "csv") {
        *os << "kind,key,count,probability\n";
        for (int p = 0; p <= d.max_points(); ++p) {
          *os << "points," << p << ',' << d.counts[p] << ',' << format_sci(d.prob(p), 10) << '\n';
        }
        for (int k = 0; k < 3; ++k) {
          *os << "bucket," << labels[k] << ',' << exact_buckets[k].numerator << ','
              << format_sci(buckets[k], 10) << '\n';
        }
      } else {
        Table t{{"points", "hands", "probability"}, {}};
        for (int p = 0; p <= d.max_points(); ++p) {
          t.rows.push_back({std::to_string(p), d.counts[p].str(), format_sci(d.prob(p), 6)});
        }
        t.print(*os);
        *os << "\nmean " << format_fixed(mean, 4) << " of " << d.total << " hands\n";
        Table b{{"range", "probability", "per 1e6"}, {}};
        for (int k = 0; k < 3; ++k) {
          b.rows.push_back({labels[k], format_sci(buckets[k], 6), format_fixed(buckets[k] * 1e6, 1)});
        }
        *os << '\n';
        b.print(*os);
      }
      return 0;
    }

    if (*sim_nt) {
      const Thresholds th = parse_thresholds(sim_thresholds);
      make_play_policy(sim_opts.policy);
      config["command"] = "simulate nt";
      config["thresholds"] = th;
      config["deals"] = sim_n;
      config["policy"] = sim_opts.policy;
      config["declarer"] = sim_opts.declarer;
      print_config(config);
      const SimReport r = simulate_nt_bidding(th, sim_n, seed, sim_opts);
      open_output();
      if (format == "json") {
        *os << nlohmann::json(r).dump(2) << '\n';
      } else if (format == "csv") {
        write_csv(*os, r);
      } else {
        const PointDistribution d = point_distribution();
        const auto p = bucket_probs(d, th);
        Table t{{"level", "calls", "expected", "made", "failed"}, {}};
        for (int k = 0; k < 3; ++k) {
          t.rows.push_back({std::to_string(k + 1) + "NT", std::to_string(r.levels[k].calls),
                            format_fixed(p[k] * static_cast<double>(sim_n), 1),
                            std::to_string(r.levels[k].made), std::to_string(r.levels[k].failed)});
        }
        *os << "rule set " << r.ruleset() << ", " << sim_n << " deals, seed " << seed << '\n';
        t.print(*os);
      }
      return 0;
    }

    if (*tour) {
      TournamentConfig tc;
      const auto specs = cli_detail::split_seats(seats_text);
      for (int s = 0; s < kNumPlayers; ++s) tc.seats[s] = parse_seat_spec(specs[s]);
      tc.deals = tour_n;
      tc.seed = seed;
      tc.schemes.clear();
      for (const auto& s : cli_detail::split(schemes_text, ',')) tc.schemes.push_back(parse_scheme(s));
      if (tc.schemes.empty()) throw ParseError("--schemes needs at least one scheme");
      config["command"] = "tournament";
      nlohmann::json seats = nlohmann::json::array();
      for (const auto& s : tc.seats) seats.push_back(seat_spec_text(s));
      config["seats"] = seats;
      config["deals"] = tour_n;
      config["schemes"] = schemes_text;
      print_config(config);
      const TournamentReport r = run_tournament(tc);
      open_output();
      if (format == "json") {
        *os << nlohmann::json(r).dump(2) << '\n';
      } else if (format == "csv") {
        write_csv(*os, r);
      } else {
        std::vector<std::string> header{"game", "bidder", "contract", "tricks", "result"};
        for (Scheme s : tc.schemes)
          for (int p = 0; p < kNumPlayers; ++p) header.push_back(scheme_name(s) + ":p" + std::to_string(p));
        Table t{header, {}};
        for (const auto& row : r.rows) {
          std::vector<std::string> cells{std::to_string(row.game), std::to_string(row.bidder),
                                         row.contract.to_string(),
                                         std::to_string(row.declarer_tricks),
                                         row.made ? "Win" : "Loss"};
          for (Scheme s : tc.schemes)
            for (int p = 0; p < kNumPlayers; ++p) cells.push_back(format_points(row.points[scheme_index(s)][p]));
          t.rows.push_back(cells);
        }
        std::vector<std::string> total{"total", "", "", "", ""};
        std::vector<std::string> sd{"sd", "", "", "", ""};
        for (Scheme s : tc.schemes) {
          for (int p = 0; p < kNumPlayers; ++p) total.push_back(format_points(r.totals[scheme_index(s)][p]));
          sd.push_back(format_fixed(r.spread[scheme_index(s)].sd, 1));
          sd.push_back("");
          sd.push_back("");
        }
        t.rows.push_back(total);
        t.rows.push_back(sd);
        t.print(*os);
      }
      return 0;
    }

    if (*enumerate) {
      const auto [decl, dummy] = cli_detail::load_hands(hands_spec);
      split_opts.exact = exact;
      split_opts.samples = samples;
      split_opts.seed = seed;
      config["command"] = "enumerate";
      config["hands"] = hands_spec;
      config["mode"] = exact ? "exact" : "sampled";
      if (!exact) config["samples"] = samples;
      config["policy"] = split_opts.policy;
      config["declarer"] = split_opts.declarer;
      print_config(config);
      if (exact) {
        split_opts.progress = [&err](std::uint64_t done, std::uint64_t total) {
          err << "progress: " << done << " of about " << total << '\n';
        };
      }
      const SplitDistribution d = enumerate_splits(decl, dummy, split_opts);
      open_output();
      if (format == "json") {
        *os << nlohmann::json(d).dump(2) << '\n';
      } else if (format == "csv") {
        write_csv(*os, d);
      } else {
        *os << "declarer " << decl.to_string() << "\nphantom  " << dummy.to_string() << '\n'
            << (exact ? "all " : "sampled ") << d.total() << " splits\n";
        Table t{{"tricks", "frequency", "share"}, {}};
        for (int k = 0; k <= kNumTricks; ++k) {
          t.rows.push_back({std::to_string(k), std::to_string(d.frequency[k]),
                            format_fixed(static_cast<double>(d.frequency[k]) /
                                             static_cast<double>(std::max<std::uint64_t>(1, d.total())),
                                         5)});
        }
        t.print(*os);
      }
      return 0;
    }

    if (*fixtures) {
      config["command"] = "fixtures";
      config["fixture"] = fixture_name;
      print_config(config);
      const FixtureReport r = reproduce_fixtures();
      open_output();
      if (format == "json") {
        *os << nlohmann::json(r).dump(2) << '\n';
      } else if (format == "csv") {
        write_csv(*os, r);
      } else {
        *os << "contract " << r.contract.to_string() << " by seat " << r.contract.declarer << '\n';
        Table t{{"strategy", "leader", "p0", "p1", "p2", "p3", "teams", "expected", "teams", "seats"},
                {}};
        for (const auto& row : r.rows) {
          const auto tm = row.teams();
          const auto ex = row.expected_teams();
          t.rows.push_back({row.strategy, std::to_string(row.leader), std::to_string(row.per_seat[0]),
                            std::to_string(row.per_seat[1]), std::to_string(row.per_seat[2]),
                            std::to_string(row.per_seat[3]),
                            std::to_string(tm[0]) + "-" + std::to_string(tm[1]),
                            std::to_string(ex[0]) + "-" + std::to_string(ex[1]),
                            row.teams_match() ? "match" : "differ",
                            row.seats_match() ? "match" : "differ"});
        }
        t.print(*os);
      }
      return 0;
    }

    if (*stats) {
      const std::vector<double> values = cli_detail::parse_values(values_text);
      config["command"] = "stats";
      config["values"] = values;
      print_config(config);
      const MomentSummary m = moments(values);
      open_output();
      auto opt = [](const std::optional<double>& v) { return v ? format_fixed(*v, 4) : std::string(); };
      if (format == "json") {
        *os << nlohmann::json{{"metadata", meta()}, {"moments", m}}.dump(2) << '\n';
      } else if (format == "csv") {
        *os << "count,mean,sd,skewness,excess_kurtosis\n"
            << m.count << ',' << format_fixed(m.mean, 4) << ',' << format_fixed(m.sd, 4) << ','
            << opt(m.skewness) << ',' << opt(m.excess_kurtosis) << '\n';
      } else {
        *os << "n " << m.count << "\nmean " << format_fixed(m.mean, 2) << "\nSD "
            << format_fixed(m.sd, 1) << " (population)\n";
        if (m.skewness) *os << "skewness " << opt(m.skewness) << '\n';
        if (m.excess_kurtosis) *os << "excess kurtosis " << opt(m.excess_kurtosis) << '\n';
      }
      return 0;
    }

    if (*play || *serve) {
      SessionManager sessions;
      HttpServer server(sessions, address, port);
      config["command"] = *play ? "play" : "serve";
      config["address"] = address;
      config["port"] = server.port();
      std::optional<std::string> session_id;
      if (*play) {
        SessionConfig sc;
        sc.seats = cli_detail::split_seats(play_seats);
        sc.seed = seed;
        config["seats"] = sc.seats;
        session_id = sessions.create(sc);
      }
      print_config(config);
      const std::string base = "http://" + address + ":" + std::to_string(server.port());
      out << "listening on " << base << '\n';
      if (session_id) {
        auto s = sessions.get(*session_id);
        for (Seat seat = 0; seat < kNumPlayers; ++seat) {
          if (!s->is_human(seat)) continue;
          out << "seat " << seat << ": " << base << "/api/sessions/" << *session_id
              << "/view?seat=" << seat << "\n        ws://" << address << ':' << server.port()
              << "/api/sessions/" << *session_id << "/stream?seat=" << seat << '\n';
        }
      }
      out.flush();
      if (duration_ms >= 0) {
        server.start();
        std::this_thread::sleep_for(std::chrono::milliseconds(duration_ms));
        server.stop();
      } else {
        server.run();
      }
      return 0;
    }
    err << app.help();
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace tribridge

#endif  // TRIBRIDGE_CLI_HPP_
