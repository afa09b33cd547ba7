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


#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "experiment.hpp"

namespace qslbounds {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // numerical failure inside the library
  kExitUsage = 2,
  kExitNotReached = 3,
};

/// Fixed 12-significant-digit rendering used for every number we emit.
std::string format_number(double value);

/// t, decoherence_function, trace_distance_to_stationary.
void write_trajectory(const ExperimentConfig& cfg, std::ostream& out);

/// t, then tau_<k>, tightness_<k> per requested bound. Throws
/// qsl::NoTauCriError in modified mode when the witness never settles.
void write_bounds(const ExperimentConfig& cfg, std::ostream& out);

/// Returns kExitOk or kExitNotReached.
int write_tau_cri(const ExperimentConfig& cfg, std::ostream& out);

/// Validates, runs, and writes to cfg.output (or out when empty). The
/// result is buffered so a failed run never leaves a partial file.
/// Diagnostics go to err.
int execute(Command command, const ExperimentConfig& cfg, std::ostream& out,
            std::ostream& err);

struct SweepItem {
  std::string config_path;
  std::string output;
  int exit_code = kExitOk;
  std::string message;
};

/// Runs each config file on its own worker. Every file must set command and
/// output. Results come back in input order.
std::vector<SweepItem> run_sweep(const std::vector<std::string>& config_paths,
                                 unsigned jobs);

}  // namespace qslbounds
