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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsl/bounds.hpp"
#include "qsl/channels.hpp"
#include "qsl/qmat.hpp"

namespace qslbounds {

/// Bad flag, bad config key or bad value. field() names the culprit.
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class ChannelKind { kAd, kPd };
enum class Command { kTrajectory, kBounds, kTauCri };

std::string_view to_string(ChannelKind channel);
std::string_view to_string(Command command);

struct ExperimentConfig {
  ChannelKind channel = ChannelKind::kAd;
  double gamma0_over_lambda = 0.4;
  double s = 1.0;
  /// plus | ground | excited | bloch:x,y,z
  std::string initial = "plus";
  double epsilon = 1e-6;
  /// Unset means the channel default: 60 / 0.01 for ad, 1e6 / 100 for pd.
  std::optional<double> t_max;
  std::optional<double> dt;
  std::vector<qsl::BoundKind> bounds = {qsl::BoundKind::kAv, qsl::BoundKind::kOp,
                                        qsl::BoundKind::kHs, qsl::BoundKind::kTr,
                                        qsl::BoundKind::kQuant};
  bool modified = false;
  qsl::Witness witness = qsl::Witness::kTraceDistanceToStationary;
  /// Empty means standard output.
  std::string output;
  /// Only read by sweep, which takes the command from each config file.
  std::optional<Command> command;

  // Keys seen so far; used to reject parameters of the other channel.
  std::vector<std::string> assigned;

  double resolved_t_max() const;
  double resolved_dt() const;
  qsl::ChannelModel model() const;
  qsl::DensityMatrix initial_state() const;
  qsl::ResolutionConfig resolution() const;

  /// Throws UsageError naming the first offending field.
  void validate() const;
};

/// Assigns one key. Keys use underscores; dashes are accepted too.
void set_key(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// Flat "key = value" lines; blank lines and '#' comments are skipped.
void load_config(ExperimentConfig& cfg, std::istream& in,
                 const std::string& origin);
void load_config_file(ExperimentConfig& cfg, const std::string& path);

qsl::DensityMatrix parse_initial_state(std::string_view spec);
std::vector<qsl::BoundKind> parse_bound_list(std::string_view list);

}  // namespace qslbounds
