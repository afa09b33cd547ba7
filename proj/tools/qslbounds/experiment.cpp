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


#include "experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "qsl/errors.hpp"

namespace qslbounds {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string normalize_key(std::string_view key) {
  std::string out(trim(key));
  std::replace(out.begin(), out.end(), '-', '_');
  return out;
}

double parse_number(std::string_view field, std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw UsageError(std::string(field),
                     "expected a finite number, got '" + std::string(text) + "'");
  }
  return value;
}

bool parse_flag(std::string_view field, std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw UsageError(std::string(field),
                   "expected true or false, got '" + std::string(text) + "'");
}

bool was_assigned(const ExperimentConfig& cfg, std::string_view key) {
  return std::find(cfg.assigned.begin(), cfg.assigned.end(), key) !=
         cfg.assigned.end();
}

}  // namespace

std::string_view to_string(ChannelKind channel) {
  return channel == ChannelKind::kAd ? "ad" : "pd";
}

std::string_view to_string(Command command) {
  switch (command) {
    case Command::kTrajectory: return "trajectory";
    case Command::kBounds: return "bounds";
    case Command::kTauCri: return "tau-cri";
  }
  return "?";
}

double ExperimentConfig::resolved_t_max() const {
  if (t_max) return *t_max;
  return channel == ChannelKind::kAd ? 60.0 : 1e6;
}

double ExperimentConfig::resolved_dt() const {
  if (dt) return *dt;
  return channel == ChannelKind::kAd ? 0.01 : 100.0;
}

qsl::ChannelModel ExperimentConfig::model() const {
  if (channel == ChannelKind::kAd) {
    return qsl::ChannelModel::amplitude_damping(
        qsl::AdParams::from_ratio(gamma0_over_lambda));
  }
  return qsl::ChannelModel::phase_damping(qsl::PdParams{s, 1.0});
}

qsl::DensityMatrix ExperimentConfig::initial_state() const {
  return parse_initial_state(initial);
}

qsl::ResolutionConfig ExperimentConfig::resolution() const {
  qsl::ResolutionConfig r;
  r.epsilon = epsilon;
  r.witness = witness;
  r.t_max = resolved_t_max();
  r.dt = resolved_dt();
  return r;
}

void ExperimentConfig::validate() const {
  if (channel == ChannelKind::kAd && was_assigned(*this, "s")) {
    throw UsageError("s", "only applies to --channel pd");
  }
  if (channel == ChannelKind::kPd && was_assigned(*this, "gamma0_over_lambda")) {
    throw UsageError("gamma0_over_lambda", "only applies to --channel ad");
  }
  if (channel == ChannelKind::kAd && !(gamma0_over_lambda > 0.0)) {
    throw UsageError("gamma0_over_lambda", "must be positive");
  }
  if (channel == ChannelKind::kPd && !(s > 0.0)) {
    throw UsageError("s", "must be positive");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw UsageError("epsilon", "must lie in (0, 1)");
  }
  if (!(resolved_dt() > 0.0)) throw UsageError("dt", "must be positive");
  if (!(resolved_t_max() > resolved_dt())) {
    throw UsageError("t_max", "must exceed dt");
  }
  if (bounds.empty()) throw UsageError("bounds", "at least one bound is required");
  initial_state();
}

qsl::DensityMatrix parse_initial_state(std::string_view spec) {
  spec = trim(spec);
  if (spec == "plus") return qsl::DensityMatrix::plus();
  if (spec == "ground") return qsl::DensityMatrix::ground();
  if (spec == "excited") return qsl::DensityMatrix::excited();
  constexpr std::string_view kBloch = "bloch:";
  if (spec.starts_with(kBloch)) {
    std::string_view rest = spec.substr(kBloch.size());
    double xyz[3];
    for (int i = 0; i < 3; ++i) {
      const auto comma = rest.find(',');
      if ((i < 2) == (comma == std::string_view::npos)) {
        throw UsageError("initial", "bloch needs exactly three components x,y,z");
      }
      xyz[i] = parse_number("initial", rest.substr(0, comma));
      rest = i < 2 ? rest.substr(comma + 1) : std::string_view{};
    }
    try {
      return qsl::DensityMatrix::from_bloch({xyz[0], xyz[1], xyz[2]});
    } catch (const qsl::Error& e) {
      throw UsageError("initial", e.what());
    }
  }
  throw UsageError("initial", "expected plus, ground, excited or bloch:x,y,z, got '" +
                                  std::string(spec) + "'");
}

std::vector<qsl::BoundKind> parse_bound_list(std::string_view list) {
  std::vector<qsl::BoundKind> out;
  std::string_view rest = trim(list);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    const auto kind = qsl::parse_bound_kind(item);
    if (!kind) {
      throw UsageError("bounds", "unknown bound '" + std::string(item) +
                                     "' (expected av, op, hs, tr, min, quant)");
    }
    if (std::find(out.begin(), out.end(), *kind) == out.end()) out.push_back(*kind);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (out.empty()) throw UsageError("bounds", "at least one bound is required");
  return out;
}

void set_key(ExperimentConfig& cfg, std::string_view raw_key,
             std::string_view raw_value) {
  const std::string key = normalize_key(raw_key);
  const std::string_view value = trim(raw_value);
  if (key == "channel") {
    if (value == "ad") {
      cfg.channel = ChannelKind::kAd;
    } else if (value == "pd") {
      cfg.channel = ChannelKind::kPd;
    } else {
      throw UsageError(key, "expected ad or pd, got '" + std::string(value) + "'");
    }
  } else if (key == "gamma0_over_lambda") {
    cfg.gamma0_over_lambda = parse_number(key, value);
  } else if (key == "s") {
    cfg.s = parse_number(key, value);
  } else if (key == "initial") {
    parse_initial_state(value);
    cfg.initial = std::string(value);
  } else if (key == "epsilon") {
    cfg.epsilon = parse_number(key, value);
  } else if (key == "t_max") {
    cfg.t_max = parse_number(key, value);
  } else if (key == "dt") {
    cfg.dt = parse_number(key, value);
  } else if (key == "bounds") {
    cfg.bounds = parse_bound_list(value);
  } else if (key == "modified") {
    cfg.modified = parse_flag(key, value);
  } else if (key == "witness") {
    if (value == "trace-distance") {
      cfg.witness = qsl::Witness::kTraceDistanceToStationary;
    } else if (value == "decoherence") {
      cfg.witness = qsl::Witness::kDecoherenceFunctionMagnitude;
    } else {
      throw UsageError(key, "expected trace-distance or decoherence, got '" +
                                std::string(value) + "'");
    }
  } else if (key == "output") {
    cfg.output = std::string(value);
  } else if (key == "command") {
    if (value == "trajectory") {
      cfg.command = Command::kTrajectory;
    } else if (value == "bounds") {
      cfg.command = Command::kBounds;
    } else if (value == "tau-cri" || value == "tau_cri") {
      cfg.command = Command::kTauCri;
    } else {
      throw UsageError(key, "expected trajectory, bounds or tau-cri, got '" +
                                std::string(value) + "'");
    }
  } else {
    throw UsageError(key.empty() ? std::string("config") : key, "unknown key");
  }
  if (!was_assigned(cfg, key)) cfg.assigned.push_back(key);
}

void load_config(ExperimentConfig& cfg, std::istream& in,
                 const std::string& origin) {
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view text = line;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      std::ostringstream where;
      where << origin << ":" << number;
      throw UsageError(where.str(), "expected 'key = value'");
    }
    set_key(cfg, text.substr(0, eq), text.substr(eq + 1));
  }
}

void load_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("config", "cannot open '" + path + "'");
  load_config(cfg, in, path);
}

}  // namespace qslbounds
