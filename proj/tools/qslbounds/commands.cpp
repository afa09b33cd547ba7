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


#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "qsl/errors.hpp"
#include "qsl/metrics.hpp"

namespace qslbounds {
namespace {

void write_common_header(const ExperimentConfig& cfg, Command command,
                         std::ostream& out) {
  out << "# qslbounds " << to_string(command) << "\n";
  out << "# channel = " << to_string(cfg.channel) << "\n";
  if (cfg.channel == ChannelKind::kAd) {
    out << "# gamma0_over_lambda = " << format_number(cfg.gamma0_over_lambda) << "\n";
    out << "# time_unit = lambda*t\n";
  } else {
    out << "# s = " << format_number(cfg.s) << "\n";
    out << "# time_unit = omega_c*t\n";
  }
  out << "# initial = " << cfg.initial << "\n";
  out << "# t_max = " << format_number(cfg.resolved_t_max()) << "\n";
  out << "# dt = " << format_number(cfg.resolved_dt()) << "\n";
}

void write_resolution_header(const ExperimentConfig& cfg, std::ostream& out) {
  out << "# epsilon = " << format_number(cfg.epsilon) << "\n";
  out << "# witness = " << qsl::to_string(cfg.witness) << "\n";
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_trajectory(const ExperimentConfig& cfg, std::ostream& out) {
  const qsl::ChannelModel model = cfg.model();
  const qsl::DensityMatrix rho0 = cfg.initial_state();
  const qsl::DensityMatrix stationary = qsl::stationary_state(rho0, model);
  qsl::Dynamics dynamics(model);

  write_common_header(cfg, Command::kTrajectory, out);
  out << "t,decoherence_function,trace_distance_to_stationary\n";
  for (double t : qsl::uniform_grid(cfg.resolved_t_max(), cfg.resolved_dt())) {
    const double g = dynamics.decoherence(t);
    const double d = qsl::trace_distance(dynamics.evolve(rho0, t), stationary);
    out << format_number(t) << ',' << format_number(g) << ',' << format_number(d)
        << '\n';
  }
}

void write_bounds(const ExperimentConfig& cfg, std::ostream& out) {
  const qsl::DensityMatrix rho0 = cfg.initial_state();
  qsl::Dynamics dynamics(cfg.model());
  const std::vector<double> grid =
      qsl::uniform_grid(cfg.resolved_t_max(), cfg.resolved_dt());

  std::vector<qsl::BoundSeries> series;
  series.reserve(cfg.bounds.size());
  for (qsl::BoundKind kind : cfg.bounds) {
    series.push_back(qsl::qsl_series(kind, rho0, dynamics, grid, cfg.epsilon,
                                     cfg.witness, cfg.modified));
  }

  write_common_header(cfg, Command::kBounds, out);
  write_resolution_header(cfg, out);
  out << "# modified = " << (cfg.modified ? "true" : "false") << "\n";
  const std::optional<double> tau_cri = series.front().tau_cri;
  out << "# tau_cri = " << (tau_cri ? format_number(*tau_cri) : "none") << "\n";
  for (const qsl::BoundSeries& s : series) {
    if (s.frozen_value) {
      out << "# frozen_" << qsl::to_string(s.kind) << " = "
          << format_number(*s.frozen_value) << "\n";
    }
  }

  out << 't';
  for (const qsl::BoundSeries& s : series) {
    out << ",tau_" << qsl::to_string(s.kind) << ",tightness_" << qsl::to_string(s.kind);
  }
  out << '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out << format_number(grid[i]);
    for (const qsl::BoundSeries& s : series) {
      out << ',' << format_number(s.tau_qsl[i]) << ',';
      if (s.tightness[i]) out << format_number(*s.tightness[i]);
    }
    out << '\n';
  }
}

int write_tau_cri(const ExperimentConfig& cfg, std::ostream& out) {
  const qsl::DensityMatrix rho0 = cfg.initial_state();
  qsl::Dynamics dynamics(cfg.model());
  const std::vector<double> grid =
      qsl::uniform_grid(cfg.resolved_t_max(), cfg.resolved_dt());
  const std::optional<double> tau =
      qsl::find_tau_cri(rho0, dynamics, grid, cfg.epsilon, cfg.witness);

  write_common_header(cfg, Command::kTauCri, out);
  if (!tau) {
    out << "tau_cri = not reached within t_max\n";
  } else {
    out << "tau_cri = " << format_number(*tau) << "\n";
  }
  out << "witness = " << qsl::to_string(cfg.witness) << "\n";
  out << "epsilon = " << format_number(cfg.epsilon) << "\n";
  const double at = tau ? *tau : grid.back();
  out << "witness_value = "
      << format_number(qsl::witness_value(cfg.witness, at, rho0, dynamics)) << "\n";
  return tau ? kExitOk : kExitNotReached;
}

int execute(Command command, const ExperimentConfig& cfg, std::ostream& out,
            std::ostream& err) {
  std::ostringstream buffer;
  int code = kExitOk;
  try {
    cfg.validate();
    switch (command) {
      case Command::kTrajectory: write_trajectory(cfg, buffer); break;
      case Command::kBounds: write_bounds(cfg, buffer); break;
      case Command::kTauCri: code = write_tau_cri(cfg, buffer); break;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qsl::NoTauCriError& e) {
    err << "tau_cri not reached within t_max: " << e.what() << "\n";
    return kExitNotReached;
  } catch (const qsl::PreconditionError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qsl::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  if (code == kExitNotReached) err << "tau_cri not reached within t_max\n";

  if (cfg.output.empty()) {
    out << buffer.str();
    out.flush();
  } else {
    std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
    file << buffer.str();
    if (!file) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return kExitFailure;
    }
  }
  return code;
}

std::vector<SweepItem> run_sweep(const std::vector<std::string>& config_paths,
                                 unsigned jobs) {
  std::vector<SweepItem> items(config_paths.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      SweepItem& item = items[i];
      item.config_path = config_paths[i];
      ExperimentConfig cfg;
      std::ostringstream err;
      try {
        load_config_file(cfg, item.config_path);
        if (!cfg.command) throw UsageError("command", "required in sweep configs");
        if (cfg.output.empty()) throw UsageError("output", "required in sweep configs");
      } catch (const UsageError& e) {
        item.exit_code = kExitUsage;
        item.message = std::string("usage error: ") + e.what();
        continue;
      }
      item.output = cfg.output;
      std::ostringstream unused;
      item.exit_code = execute(*cfg.command, cfg, unused, err);
      item.message = err.str();
      while (!item.message.empty() && item.message.back() == '\n') {
        item.message.pop_back();
      }
    }
  };

  jobs = std::clamp<unsigned>(jobs, 1, std::max<std::size_t>(1, items.size()));
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();  // join before handing the results out
  return items;
}

}  // namespace qslbounds
