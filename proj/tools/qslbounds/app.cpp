// Copyright 2026 The qslbounds Authors
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


#include "app.hpp"

#include <array>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "experiment.hpp"

namespace qslbounds {
namespace {

// Flags shared by trajectory, bounds and tau-cri, in the order they are
// applied on top of the config file.
struct RunFlags {
  std::string config;
  std::array<std::pair<const char*, std::string>, 11> values = {{
      {"channel", {}},
      {"gamma0_over_lambda", {}},
      {"s", {}},
      {"initial", {}},
      {"epsilon", {}},
      {"t_max", {}},
      {"dt", {}},
      {"bounds", {}},
      {"witness", {}},
      {"output", {}},
      {"modified", {}},
  }};
  std::array<CLI::Option*, 11> options{};
  CLI::Option* config_option = nullptr;
};

void add_run_flags(CLI::App& sub, RunFlags& flags) {
  static constexpr std::array<const char*, 11> kNames = {
      "--channel", "--gamma0-over-lambda", "--s",      "--initial",
      "--epsilon", "--t-max",              "--dt",     "--bounds",
      "--witness", "--output",             "--modified"};
  static constexpr std::array<const char*, 11> kHelp = {
      "ad (amplitude damping) or pd (phase damping)",
      "gamma0/lambda for ad (default 0.4)",
      "Ohmicity s for pd (default 1)",
      "plus, ground, excited or bloch:x,y,z (default plus)",
      "resolution threshold (default 1e-6)",
      "time horizon in lambda*t or omega_c*t (ad 60, pd 1e6)",
      "grid step (ad 0.01, pd 100)",
      "comma list from av,op,hs,tr,min,quant (default av,op,hs,tr,quant)",
      "trace-distance or decoherence (default trace-distance)",
      "output path (default standard output)",
      "freeze every bound at tau_cri"};
  for (std::size_t i = 0; i + 1 < kNames.size(); ++i) {
    flags.options[i] = sub.add_option(kNames[i], flags.values[i].second, kHelp[i]);
  }
  flags.options.back() = sub.add_flag(kNames.back(), kHelp.back());
  flags.config_option =
      sub.add_option("--config", flags.config, "flat key = value file");
}

ExperimentConfig build_config(const RunFlags& flags) {
  ExperimentConfig cfg;
  if (flags.config_option->count() > 0) load_config_file(cfg, flags.config);
  for (std::size_t i = 0; i < flags.values.size(); ++i) {
    if (flags.options[i]->count() == 0) continue;
    const bool is_flag = i + 1 == flags.values.size();
    set_key(cfg, flags.values[i].first, is_flag ? "true" : flags.values[i].second);
  }
  return cfg;
}

}  // namespace

int run_app(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Quantum speed limit bounds for a damped qubit"};
  app.name("qslbounds");
  app.require_subcommand(1);

  struct Entry {
    Command command;
    CLI::App* sub;
    RunFlags flags;
  };
  std::array<Entry, 3> entries{{
      {Command::kTrajectory, nullptr, {}},
      {Command::kBounds, nullptr, {}},
      {Command::kTauCri, nullptr, {}},
  }};
  entries[0].sub = app.add_subcommand(
      "trajectory", "decoherence function and trace distance to the stationary state");
  entries[1].sub = app.add_subcommand("bounds", "QSL bound series and tightness");
  entries[2].sub = app.add_subcommand("tau-cri", "resolution time tau_cri");
  for (Entry& e : entries) add_run_flags(*e.sub, e.flags);

  std::vector<std::string> sweep_configs;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  CLI::App* sweep = app.add_subcommand(
      "sweep", "run several config files concurrently, each with its own output");
  sweep->add_option("configs", sweep_configs, "config files (command and output keys required)")
      ->required();
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (sweep->parsed()) {
    int code = kExitOk;
    for (const SweepItem& item : run_sweep(sweep_configs, jobs)) {
      out << item.config_path << " -> " << (item.output.empty() ? "-" : item.output)
          << " : exit " << item.exit_code << "\n";
      if (!item.message.empty()) err << item.config_path << ": " << item.message << "\n";
      code = std::max(code, item.exit_code);
    }
    return code;
  }

  for (Entry& e : entries) {
    if (!e.sub->parsed()) continue;
    ExperimentConfig cfg;
    try {
      cfg = build_config(e.flags);
    } catch (const UsageError& ex) {
      err << "usage error: " << ex.what() << "\n";
      return kExitUsage;
    }
    return execute(e.command, cfg, out, err);
  }
  return kExitUsage;
}

}  // namespace qslbounds
