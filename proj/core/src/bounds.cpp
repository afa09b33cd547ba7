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

#include "qsl/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "qsl/errors.hpp"
#include "qsl/metrics.hpp"
#include "qsl/quadrature.hpp"

namespace qsl {

namespace {

// Relative tolerance for one grid interval of a speed integral.
constexpr double kIntervalTolerance = 1e-11;
constexpr unsigned kIntervalDepth = 6;
constexpr double kBisectionResolution = 1e-9;
// Below this a numerator counts as zero when no speed has accumulated;
// the Bures angle of two states one ulp apart is ~sqrt(machine eps).
constexpr double kNumeratorFloor = 1e-7;

constexpr std::array<BoundKind, 3> kNormKinds = {BoundKind::kOp, BoundKind::kHs,
                                                 BoundKind::kTr};

void require_grid(std::span<const double> grid) {
  if (grid.empty() || grid.front() != 0.0)
    throw PreconditionError("time grid must start at 0");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1]) || !std::isfinite(grid[i]))
      throw PreconditionError("time grid must be strictly increasing and finite");
  }
}

double interval_integral(BoundKind kind, const DensityMatrix& rho0,
                         Dynamics& dynamics, double a, double b) {
  const auto f = [&](double t) { return speed_integrand(kind, t, rho0, dynamics); };
  // Gauss-Kronrod converges slowly across a kink, so integrate piecewise
  // between the sign changes of g and g'.
  double total = 0.0;
  double left = a;
  for (double kink : sign_change_times(dynamics.model(), a, b)) {
    total += gauss_kronrod(f, left, kink, kIntervalTolerance, kIntervalDepth).value;
    left = kink;
  }
  return total + gauss_kronrod(f, left, b, kIntervalTolerance, kIntervalDepth).value;
}

std::vector<double> cumulative_single(BoundKind kind, const DensityMatrix& rho0,
                                      Dynamics& dynamics,
                                      std::span<const double> grid) {
  std::vector<double> out(grid.size(), 0.0);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    out[i] = out[i - 1] +
             interval_integral(kind, rho0, dynamics, grid[i - 1], grid[i]);
  }
  return out;
}

// Integral up to an off-grid time t, given the cumulative values on grid.
double extend_to(BoundKind kind, const DensityMatrix& rho0, Dynamics& dynamics,
                 std::span<const double> grid, const std::vector<double>& cum,
                 double t) {
  const auto it = std::upper_bound(grid.begin(), grid.end(), t);
  const std::size_t k = static_cast<std::size_t>(it - grid.begin()) - 1;
  if (grid[k] == t) return cum[k];
  return cum[k] + interval_integral(kind, rho0, dynamics, grid[k], t);
}

}  // namespace

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kAv: return "av";
    case BoundKind::kOp: return "op";
    case BoundKind::kHs: return "hs";
    case BoundKind::kTr: return "tr";
    case BoundKind::kUnifiedMin: return "min";
    case BoundKind::kQuant: return "quant";
  }
  return "?";
}

std::optional<BoundKind> parse_bound_kind(std::string_view name) {
  for (BoundKind k : {BoundKind::kAv, BoundKind::kOp, BoundKind::kHs,
                      BoundKind::kTr, BoundKind::kUnifiedMin, BoundKind::kQuant}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(Witness witness) {
  return witness == Witness::kTraceDistanceToStationary ? "trace-distance"
                                                        : "decoherence";
}

void ResolutionConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw PreconditionError("epsilon must lie in (0, 1)");
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw PreconditionError("dt must be > 0");
  if (!(t_max > dt) || !std::isfinite(t_max))
    throw PreconditionError("t_max must exceed dt");
}

std::vector<double> uniform_grid(double t_max, double dt) {
  if (!(dt > 0.0) || !(t_max >= 0.0))
    throw PreconditionError("uniform_grid: need dt > 0 and t_max >= 0");
  // Tolerate t_max / dt landing a hair below an integer.
  const auto steps = static_cast<std::size_t>(std::floor(t_max / dt * (1.0 + 1e-12)));
  std::vector<double> grid(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) grid[i] = static_cast<double>(i) * dt;
  return grid;
}

double speed_integrand(BoundKind kind, double t, const DensityMatrix& rho0,
                       Dynamics& dynamics) {
  const ComplexMatrix2 velocity = dynamics.derivative(rho0, t);
  switch (kind) {
    case BoundKind::kAv: {
      const DensityMatrix rho_t = dynamics.evolve(rho0, t);
      return 0.5 * std::sqrt(std::max(qfi(rho_t, velocity), 0.0));
    }
    case BoundKind::kOp:
    case BoundKind::kUnifiedMin:
      return norms(velocity).op;
    case BoundKind::kHs:
      return hs_norm(velocity);
    case BoundKind::kTr:
      return norms(velocity).tr;
    case BoundKind::kQuant:
      return commutator_hs_norm(rho0.matrix(), velocity);
  }
  return 0.0;
}

double bound_numerator(BoundKind kind, double t, const DensityMatrix& rho0,
                       Dynamics& dynamics) {
  const DensityMatrix rho_t = dynamics.evolve(rho0, t);
  switch (kind) {
    case BoundKind::kAv:
      return bures_angle(rho0, rho_t);
    case BoundKind::kQuant:
      return commutator_hs_norm(rho0.matrix(), rho_t.matrix());
    default:
      return bures_infidelity_squared(rho0, rho_t);
  }
}

std::vector<double> cumulative_speed_integral(BoundKind kind,
                                              const DensityMatrix& rho0,
                                              Dynamics& dynamics,
                                              std::span<const double> grid) {
  require_grid(grid);
  if (kind != BoundKind::kUnifiedMin)
    return cumulative_single(kind, rho0, dynamics, grid);
  std::vector<double> out = cumulative_single(kNormKinds[0], rho0, dynamics, grid);
  for (std::size_t k = 1; k < kNormKinds.size(); ++k) {
    const auto other = cumulative_single(kNormKinds[k], rho0, dynamics, grid);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(out[i], other[i]);
  }
  return out;
}

std::vector<double> cumulative_speed_integral(BoundKind kind,
                                              const DensityMatrix& rho0,
                                              const ChannelModel& model,
                                              std::span<const double> grid) {
  Dynamics dynamics(model);
  return cumulative_speed_integral(kind, rho0, dynamics, grid);
}

double witness_value(Witness witness, double t, const DensityMatrix& rho0,
                     Dynamics& dynamics) {
  if (witness == Witness::kDecoherenceFunctionMagnitude)
    return std::abs(dynamics.decoherence(t));
  return trace_distance(dynamics.evolve(rho0, t),
                        stationary_state(rho0, dynamics.model()));
}

std::optional<double> find_tau_cri(const DensityMatrix& rho0,
                                   Dynamics& dynamics,
                                   std::span<const double> grid,
                                   double epsilon, Witness witness) {
  require_grid(grid);
  std::optional<std::size_t> last_above;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (witness_value(witness, grid[i], rho0, dynamics) >= epsilon) last_above = i;
  }
  if (!last_above) return 0.0;
  if (*last_above + 1 == grid.size()) return std::nullopt;

  double lo = grid[*last_above];
  double hi = grid[*last_above + 1];
  const double resolution =
      std::max(kBisectionResolution,
               4.0 * (std::nextafter(hi, std::numeric_limits<double>::infinity()) - hi));
  while (hi - lo > resolution) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (witness_value(witness, mid, rho0, dynamics) >= epsilon) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

std::optional<double> find_tau_cri(const DensityMatrix& rho0,
                                   const ChannelModel& model,
                                   const ResolutionConfig& cfg) {
  cfg.validate();
  Dynamics dynamics(model);
  const auto grid = uniform_grid(cfg.t_max, cfg.dt);
  return find_tau_cri(rho0, dynamics, grid, cfg.epsilon, cfg.witness);
}

double qsl_time_from(double numerator, double t, double cumulative) {
  if (t == 0.0) return 0.0;
  if (!(cumulative > 0.0)) {
    if (std::abs(numerator) <= kNumeratorFloor) return 0.0;
    std::ostringstream msg;
    msg << "degenerate bound at t=" << t << ": numerator " << numerator
        << " with zero accumulated speed";
    throw DegenerateBoundError(msg.str());
  }
  return numerator * t / cumulative;
}

double qsl_time(BoundKind kind, double t, const DensityMatrix& rho0,
                const ChannelModel& model, double cumulative) {
  Dynamics dynamics(model);
  return qsl_time_from(bound_numerator(kind, t, rho0, dynamics), t, cumulative);
}

BoundSeries qsl_series(BoundKind kind, const DensityMatrix& rho0,
                       Dynamics& dynamics, std::span<const double> grid,
                       double epsilon, Witness witness, bool modified) {
  require_grid(grid);
  BoundSeries series;
  series.kind = kind;
  series.modified = modified;
  series.times.assign(grid.begin(), grid.end());
  series.tau_cri = find_tau_cri(rho0, dynamics, grid, epsilon, witness);
  if (modified && !series.tau_cri) {
    std::ostringstream msg;
    msg << "tau_cri not reached within t_max=" << grid.back() << " (epsilon "
        << epsilon << ", witness " << to_string(witness) << ")";
    throw NoTauCriError(msg.str());
  }

  // The min bound keeps the three norm integrals apart so the value at
  // tau_cri is the minimum of the three extended integrals.
  const bool unified = kind == BoundKind::kUnifiedMin;
  std::vector<std::vector<double>> parts;
  if (unified) {
    for (BoundKind k : kNormKinds) parts.push_back(cumulative_single(k, rho0, dynamics, grid));
  } else {
    parts.push_back(cumulative_single(kind, rho0, dynamics, grid));
  }
  std::vector<double> cumulative = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k)
    for (std::size_t i = 0; i < grid.size(); ++i)
      cumulative[i] = std::min(cumulative[i], parts[k][i]);

  series.tau_qsl.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    series.tau_qsl[i] = qsl_time_from(bound_numerator(kind, grid[i], rho0, dynamics),
                                      grid[i], cumulative[i]);
  }

  if (modified) {
    const double tau_cri = *series.tau_cri;
    double at_cri = extend_to(unified ? kNormKinds[0] : kind, rho0, dynamics, grid,
                              parts[0], tau_cri);
    for (std::size_t k = 1; k < parts.size(); ++k)
      at_cri = std::min(at_cri, extend_to(kNormKinds[k], rho0, dynamics, grid,
                                          parts[k], tau_cri));
    const double frozen = qsl_time_from(
        bound_numerator(kind, tau_cri, rho0, dynamics), tau_cri, at_cri);
    series.frozen_value = frozen;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (grid[i] >= tau_cri) series.tau_qsl[i] = frozen;
    }
  }
  series.tightness = tightness(series);
  return series;
}

BoundSeries qsl_series(BoundKind kind, const DensityMatrix& rho0,
                       const ChannelModel& model, const ResolutionConfig& cfg,
                       bool modified) {
  cfg.validate();
  Dynamics dynamics(model);
  const auto grid = uniform_grid(cfg.t_max, cfg.dt);
  return qsl_series(kind, rho0, dynamics, grid, cfg.epsilon, cfg.witness, modified);
}

std::vector<std::optional<double>> tightness(const BoundSeries& series) {
  std::vector<std::optional<double>> out(series.times.size());
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    if (series.times[i] > 0.0)
      out[i] = std::min(series.tau_qsl[i] / series.times[i], 1.0);
  }
  return out;
}

}  // namespace qsl
