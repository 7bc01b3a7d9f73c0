// Copyright 2026 The DCAE Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end: flat key=value config files mirrored one-to-one by
// flags, subcommands for trials, sweeps, privacy checks and the pricing
// comparison demo, and deterministic CSV outputs.
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error, 4 internal
// invariant violation.

#ifndef DCAE_CLI_HPP
#define DCAE_CLI_HPP

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dcae/csv.hpp"
#include "dcae/errors.hpp"
#include "dcae/experiment.hpp"

namespace dcae {

enum class Command { Trial, Sweep, DpCheck, Fig2Demo };

struct RunConfig {
  Command command = Command::Trial;
  ScenarioParams scenario;
  MechanismConfig mechanism;
  // Set when the sensitivity was derived from the scenario rather than
  // pinned by the user; sweeps then re-derive it per axis value.
  bool delta_is_auto = true;
  int trials = 100;
  SweepAxis axis = SweepAxis::Epsilon;
  std::vector<double> axis_values;
  int pairs = 100;
  int threads = 1;
  std::filesystem::path out_dir = "out";
};

namespace cli_detail {

// Option handles needed to tell "left at default" from "set by the user",
// either on the command line or in the config file.
struct OptionRefs {
  CLI::Option* m = nullptr;
  CLI::Option* n = nullptr;
  CLI::Option* k_min = nullptr;
  CLI::Option* k_max = nullptr;
  CLI::Option* q_max = nullptr;
  CLI::Option* pi_size = nullptr;
  CLI::Option* copies_mode = nullptr;
  CLI::Option* copies_min = nullptr;
  CLI::Option* copies_max = nullptr;
  CLI::Option* copies_value = nullptr;
  CLI::Option* scenario_preset = nullptr;
  CLI::Option* delta = nullptr;
  CLI::Option* mech_seed = nullptr;
  CLI::Option* axis = nullptr;
  CLI::Option* values = nullptr;
};

struct RawOptions {
  // scenario (defaults are the non-competitive base setup)
  int m = 6;
  int n = 100;
  std::int64_t k_min = 0, k_max = 100;
  std::int64_t b_min = 1, b_max = 20;
  std::int64_t p_min = 1, p_max = 100;
  std::string copies_mode = "uniform";
  std::int64_t copies_min = 200, copies_max = 800, copies_value = 500;
  std::int64_t q_max = 100;
  int pi_size = 1000;
  std::uint64_t seed = 42;
  std::string scenario_preset;
  // mechanism
  double epsilon = 1.0;
  double delta = 0.0;  // 0 = derive from the scenario
  std::uint64_t mech_seed = 0;
  // payloads
  int trials = 100;
  std::string axis = "epsilon";
  std::vector<double> values;
  int pairs = 100;
  // run control
  int threads = 1;
  std::string out_dir = "out";
};

inline CopiesSpec resolve_copies(const RawOptions& raw, const OptionRefs& refs) {
  // An explicit copies-mode wins over the scenario preset.
  std::string mode = raw.copies_mode;
  if (refs.copies_mode->count() == 0 && !raw.scenario_preset.empty()) {
    if (raw.scenario_preset == "competitive") mode = "competitive";
    if (raw.scenario_preset == "noncompetitive") mode = "uniform";
  }
  if (mode == "uniform") return CopiesSpec::uniform(raw.copies_min, raw.copies_max);
  if (mode == "constant") return CopiesSpec::constant(raw.copies_value);
  if (mode == "competitive") return CopiesSpec::competitive_one();
  throw ConfigError("copies-mode: unknown mode '" + mode + "'");
}

}  // namespace cli_detail

// Parse flags and the optional config file into a validated RunConfig.
// Returns nullopt when the invocation only asked for help text.
inline std::optional<RunConfig> parse_config(std::vector<std::string> args,
                                             std::ostream& help_out = std::cout) {
  using cli_detail::OptionRefs;
  using cli_detail::RawOptions;

  CLI::App app{"DCAE combinatorial data-auction simulator"};
  app.set_config("--config", "", "flat key=value config file; flags override")
      ->configurable(false);
  app.allow_config_extras(false);
  app.require_subcommand(1);

  RawOptions raw;
  OptionRefs refs;

  refs.m = app.add_option("--m", raw.m, "dataset type count");
  refs.n = app.add_option("--n", raw.n, "buyer count");
  refs.k_min = app.add_option("--k-min", raw.k_min, "min requested copies per type");
  refs.k_max = app.add_option("--k-max", raw.k_max, "max requested copies per type");
  app.add_option("--b-min", raw.b_min, "min unit bid");
  app.add_option("--b-max", raw.b_max, "max unit bid");
  app.add_option("--p-min", raw.p_min, "min settlement unit price");
  app.add_option("--p-max", raw.p_max, "max settlement unit price");
  refs.copies_mode =
      app.add_option("--copies-mode", raw.copies_mode, "stock model per type")
          ->check(CLI::IsMember({"uniform", "constant", "competitive"}));
  refs.copies_min = app.add_option("--copies-min", raw.copies_min, "uniform stock lower bound");
  refs.copies_max = app.add_option("--copies-max", raw.copies_max, "uniform stock upper bound");
  refs.copies_value = app.add_option("--copies-value", raw.copies_value, "constant stock");
  refs.q_max = app.add_option("--q-max", raw.q_max, "request cap per buyer and type");
  refs.pi_size = app.add_option("--pi-size", raw.pi_size, "candidate price vectors per trial");
  app.add_option("--seed", raw.seed, "master seed for instance and price streams");
  refs.scenario_preset =
      app.add_option("--scenario", raw.scenario_preset, "scenario preset for the stock model")
          ->check(CLI::IsMember({"noncompetitive", "competitive"}));
  app.add_option("--epsilon", raw.epsilon, "privacy budget");
  refs.delta = app.add_option("--delta", raw.delta,
                              "revenue sensitivity; omit to derive m*q_max*p_max");
  refs.mech_seed =
      app.add_option("--mech-seed", raw.mech_seed, "selection seed (defaults to --seed)");
  app.add_option("--trials", raw.trials, "number of trials");
  refs.axis = app.add_option("--axis", raw.axis, "sweep axis")
                  ->check(CLI::IsMember({"m", "copies", "epsilon"}));
  refs.values = app.add_option("--values", raw.values, "comma-separated axis values")
                    ->delimiter(',');
  app.add_option("--pairs", raw.pairs, "neighboring bid-set pairs to evaluate");
  app.add_option("--threads", raw.threads, "worker threads for trials");
  app.add_option("--out-dir", raw.out_dir, "output directory for CSV files");

  CLI::App* cmd_trial = app.add_subcommand("trial", "run independent trials, one CSV row each");
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "sweep one axis and emit per-value means");
  CLI::App* cmd_dp = app.add_subcommand("dp-check", "exact privacy-ratio report");
  CLI::App* cmd_fig2 = app.add_subcommand("fig2-demo", "compare the three pricing strategies");
  for (CLI::App* sub : {cmd_trial, cmd_sweep, cmd_dp, cmd_fig2}) sub->fallthrough();

  args.insert(args.begin(), "dcae");
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    help_out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp& e) {
    help_out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(std::string("command line: ") + e.what());
  }

  RunConfig config;
  if (cmd_trial->parsed()) config.command = Command::Trial;
  if (cmd_sweep->parsed()) config.command = Command::Sweep;
  if (cmd_dp->parsed()) config.command = Command::DpCheck;
  if (cmd_fig2->parsed()) config.command = Command::Fig2Demo;

  // dp-check evaluates exact distributions, so its scenario defaults shrink
  // to a small instance unless the user pinned sizes explicitly.
  if (config.command == Command::DpCheck) {
    if (refs.m->count() == 0) raw.m = 3;
    if (refs.n->count() == 0) raw.n = 8;
    if (refs.k_max->count() == 0) raw.k_max = 10;
    if (refs.q_max->count() == 0) raw.q_max = 10;
    if (refs.pi_size->count() == 0) raw.pi_size = 50;
    if (refs.copies_mode->count() == 0 && refs.scenario_preset->count() == 0) {
      raw.copies_mode = "constant";
      if (refs.copies_value->count() == 0) raw.copies_value = 10;
    }
  }

  config.scenario.m = raw.m;
  config.scenario.n = raw.n;
  config.scenario.k_lo = raw.k_min;
  config.scenario.k_hi = raw.k_max;
  config.scenario.b_lo = raw.b_min;
  config.scenario.b_hi = raw.b_max;
  config.scenario.p_lo = raw.p_min;
  config.scenario.p_hi = raw.p_max;
  config.scenario.copies = cli_detail::resolve_copies(raw, refs);
  config.scenario.q_max = raw.q_max;
  config.scenario.pi_size = raw.pi_size;
  config.scenario.seed = raw.seed;
  validate(config.scenario);

  config.mechanism.epsilon = raw.epsilon;
  config.delta_is_auto = refs.delta->count() == 0;
  config.mechanism.delta_sensitivity =
      config.delta_is_auto
          ? static_cast<double>(sensitivity_bound(config.scenario.m, config.scenario.q_max,
                                                  config.scenario.p_hi))
          : raw.delta;
  config.mechanism.seed = refs.mech_seed->count() > 0 ? raw.mech_seed : raw.seed;
  validate(config.mechanism);

  if (raw.trials <= 0) throw ConfigError("trials: must be positive");
  if (raw.pairs <= 0) throw ConfigError("pairs: must be positive");
  if (raw.threads <= 0) throw ConfigError("threads: must be positive");
  config.trials = raw.trials;
  config.pairs = raw.pairs;
  config.threads = raw.threads;
  config.out_dir = raw.out_dir;

  if (config.command == Command::Sweep) {
    if (refs.axis->count() == 0) throw ConfigError("sweep: --axis is required");
    if (refs.values->count() == 0) throw ConfigError("sweep: --values is required");
    if (raw.axis == "m") config.axis = SweepAxis::TypeCount;
    if (raw.axis == "copies") config.axis = SweepAxis::Copies;
    if (raw.axis == "epsilon") config.axis = SweepAxis::Epsilon;
    if (raw.values.empty()) throw ConfigError("sweep: --values list is empty");
    config.axis_values = raw.values;
  }

  return config;
}

namespace cli_detail {

inline std::string describe_copies(const CopiesSpec& copies) {
  switch (copies.mode) {
    case CopiesMode::Uniform:
      return "uniform[" + std::to_string(copies.lo) + "," + std::to_string(copies.hi) + "]";
    case CopiesMode::Constant:
      return "constant(" + std::to_string(copies.lo) + ")";
    case CopiesMode::CompetitiveOne:
      return "competitive(1)";
  }
  return "?";
}

inline void echo_config(const RunConfig& config, std::ostream& err) {
  const ScenarioParams& s = config.scenario;
  err << "# resolved configuration\n"
      << "m = " << s.m << "\n"
      << "n = " << s.n << "\n"
      << "k = [" << s.k_lo << "," << s.k_hi << "]\n"
      << "b = [" << s.b_lo << "," << s.b_hi << "]\n"
      << "p = [" << s.p_lo << "," << s.p_hi << "]\n"
      << "copies = " << describe_copies(s.copies) << "\n"
      << "q_max = " << s.q_max << "\n"
      << "pi_size = " << s.pi_size << "\n"
      << "seed = " << s.seed << "\n"
      << "epsilon = " << config.mechanism.epsilon << "\n"
      << "delta = " << config.mechanism.delta_sensitivity
      << (config.delta_is_auto ? " (auto)" : "") << "\n"
      << "mech_seed = " << config.mechanism.seed << "\n"
      << "threads = " << config.threads << "\n";
}

// Fixed embedded instance contrasting the three pricing strategies. Stock
// of 20 per type, settlement prices (4,4), thresholds 90 (total) and 6
// (average unit).
inline void run_fig2_demo(const std::filesystem::path& out_dir, std::ostream& out,
                          std::ostream& err) {
  struct NamedBuyer {
    const char* name;
    Bid bid;
  };
  const std::vector<NamedBuyer> buyers{
      {"bulk", {{10, 10}, {5, 5}}},      // large balanced request, fair unit bid
      {"boutique", {{1, 1}, {8, 8}}},    // small request, high unit bid
      {"whale", {{20, 20}, {3, 3}}},     // huge request, low unit bid
      {"lowball", {{10, 0}, {1, 0}}},    // large request, token unit bid
  };
  const DatasetCatalog catalog{{20, 20}};
  const PriceVector settlement{{4, 4}};
  const AllocationOrder order{{0, 1, 2, 3}};
  const Money total_threshold = 90;
  const Money avg_threshold = 6;

  BidSet bids;
  for (const auto& b : buyers) bids.bids.push_back(b.bid);

  const std::vector<std::pair<const char*, PricingStrategy>> strategies{
      {"two_tier", PricingStrategy::two_tier()},
      {"total_price", PricingStrategy::total_price(total_threshold)},
      {"avg_unit_price", PricingStrategy::average_unit_price(avg_threshold)},
  };

  out << "pricing strategy comparison (settlement p = (4,4), total threshold " << total_threshold
      << ", average-unit threshold " << avg_threshold << ")\n\n";
  out << "buyer      k         b        total_bid  payment  candidate_under\n";
  std::ostringstream csv;
  csv << "buyer,total_bid,payment,two_tier,total_price,avg_unit_price\n";
  for (std::size_t j = 0; j < buyers.size(); ++j) {
    const Bid& bid = buyers[j].bid;
    std::string flags;
    std::string csv_flags;
    for (const auto& [name, strategy] : strategies) {
      const auto candidates = select_candidates(bids, settlement, strategy);
      const bool in = std::find(candidates.begin(), candidates.end(),
                                static_cast<BuyerId>(j)) != candidates.end();
      flags += std::string(name) + (in ? ":yes " : ":no  ");
      csv_flags += in ? ",1" : ",0";
    }
    char line[160];
    std::snprintf(line, sizeof(line), "%-10s (%2lld,%2lld)  (%lld,%lld)    %9lld  %7lld  %s",
                  buyers[j].name, static_cast<long long>(bid.quantities[0]),
                  static_cast<long long>(bid.quantities[1]),
                  static_cast<long long>(bid.unit_prices[0]),
                  static_cast<long long>(bid.unit_prices[1]),
                  static_cast<long long>(total_bid(bid)),
                  static_cast<long long>(payment(bid, settlement)), flags.c_str());
    out << line << "\n";
    csv << buyers[j].name << ',' << total_bid(bid) << ',' << payment(bid, settlement)
        << csv_flags << "\n";
  }

  out << "\nround results by strategy (order: bulk, boutique, whale, lowball)\n";
  for (const auto& [name, strategy] : strategies) {
    const RoundOutcome outcome = run_round(bids, catalog, order, settlement, strategy);
    out << "  " << name << ": winners";
    if (outcome.winners.empty()) out << " none";
    for (BuyerId w : outcome.winners) out << ' ' << buyers[static_cast<std::size_t>(w)].name;
    out << ", revenue " << outcome.revenue << "\n";
  }

  const auto csv_path = out_dir / "fig2_demo.csv";
  detail::emit_file(csv_path, [&](std::ostream& f) { f << csv.str(); });
  err << "wrote " << csv_path.string() << "\n";
}

}  // namespace cli_detail

// Execute a parsed command. Throws dcae errors; run_cli maps them to exit
// codes.
inline void run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  if (ec) throw IoError("cannot create output directory: " + config.out_dir.string());

  cli_detail::echo_config(config, err);

  switch (config.command) {
    case Command::Trial: {
      const auto trials =
          run_trials(config.scenario, config.mechanism, config.trials, config.threads);
      const auto path = config.out_dir / "trials.csv";
      emit_trials_csv(path, trials, config.scenario.seed);
      err << "wrote " << path.string() << "\n";
      break;
    }
    case Command::Sweep: {
      SweepOptions options;
      options.trials_per_value = config.trials;
      options.threads = config.threads;
      options.delta_tracks_axis = config.delta_is_auto;
      const SweepResult sweep = run_sweep(config.scenario, config.mechanism, config.axis,
                                          config.axis_values, options);
      const auto path = config.out_dir / ("sweep_" + sweep.axis + ".csv");
      emit_sweep_csv(path, sweep, config.scenario.seed);
      err << "wrote " << path.string() << "\n";
      break;
    }
    case Command::DpCheck: {
      const double ratio = dp_ratio_check(config.scenario, config.mechanism, config.pairs);
      const double bound = std::exp(config.mechanism.epsilon);
      out << "pairs = " << config.pairs << "\n"
          << "max probability ratio = " << format_fixed6(ratio) << "\n"
          << "exp(epsilon) bound    = " << format_fixed6(bound) << "\n";
      if (ratio > bound * (1.0 + 1e-9)) {
        throw Error("privacy bound violated: ratio " + format_fixed6(ratio) +
                    " exceeds exp(epsilon) " + format_fixed6(bound));
      }
      out << "within bound: yes\n";
      break;
    }
    case Command::Fig2Demo:
      cli_detail::run_fig2_demo(config.out_dir, out, err);
      break;
  }
}

inline int run_cli(std::vector<std::string> args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  try {
    const auto config = parse_config(std::move(args), out);
    if (!config) return 0;
    run_command(*config, out, err);
    return 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(std::move(args), out, err);
}

}  // namespace dcae

#endif  // DCAE_CLI_HPP
