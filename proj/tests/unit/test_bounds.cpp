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


#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qsl/bounds.hpp"
#include "qsl/errors.hpp"
#include "qsl/metrics.hpp"

using namespace qsl;
namespace oracle = qsl::testing;

namespace {

const ChannelModel kMarkov = ChannelModel::amplitude_damping(AdParams::from_ratio(0.4));
const ChannelModel kNonMarkov = ChannelModel::amplitude_damping(AdParams::from_ratio(20.0));
const ChannelModel kOhmic = ChannelModel::phase_damping(PdParams{1.0, 1.0});

constexpr BoundKind kAllKinds[] = {BoundKind::kAv, BoundKind::kOp, BoundKind::kHs,
                                   BoundKind::kTr, BoundKind::kUnifiedMin, BoundKind::kQuant};

ResolutionConfig config(double t_max, double dt) {
  ResolutionConfig c;
  c.t_max = t_max;
  c.dt = dt;
  return c;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("bound kind names round-trip") {
  for (BoundKind k : kAllKinds) CHECK(parse_bound_kind(to_string(k)) == k);
  CHECK_FALSE(parse_bound_kind("speed").has_value());
  CHECK(to_string(Witness::kTraceDistanceToStationary) == "trace-distance");
  CHECK(to_string(Witness::kDecoherenceFunctionMagnitude) == "decoherence");
}

TEST_CASE("resolution config validation") {
  CHECK_NOTHROW(ResolutionConfig{}.validate());
  ResolutionConfig c;
  c.epsilon = 0.0;
  CHECK_THROWS_AS(c.validate(), PreconditionError);
  c.epsilon = 1.0;
  CHECK_THROWS_AS(c.validate(), PreconditionError);
  c = ResolutionConfig{};
  c.dt = -0.1;
  CHECK_THROWS_AS(c.validate(), PreconditionError);
  c = ResolutionConfig{};
  c.t_max = c.dt;
  CHECK_THROWS_AS(c.validate(), PreconditionError);
}

TEST_CASE("uniform grid has floor(t_max / dt) + 1 points") {
  CHECK(uniform_grid(60.0, 0.01).size() == 6001);
  CHECK(uniform_grid(1e6, 100.0).size() == 10001);
  CHECK(uniform_grid(1.0, 0.3).size() == 4);
  CHECK(uniform_grid(0.3, 0.1).size() == 4);
  const auto g = uniform_grid(60.0, 0.01);
  CHECK(g.front() == 0.0);
  CHECK(g[1234] == 1234 * 0.01);
}

TEST_CASE("cumulative integrals start at zero and never decrease") {
  const auto grid = uniform_grid(20.0, 0.05);
  for (const auto& m : {kMarkov, kNonMarkov, kOhmic}) {
    for (BoundKind k : kAllKinds) {
      const auto cum = cumulative_speed_integral(k, DensityMatrix::plus(), m, grid);
      CHECK(cum.front() == 0.0);
      for (std::size_t i = 1; i < cum.size(); ++i) CHECK(cum[i] >= cum[i - 1]);
    }
  }
}

TEST_CASE("cumulative integrals reject malformed grids") {
  const DensityMatrix plus = DensityMatrix::plus();
  const std::vector<double> not_at_zero = {0.1, 0.2};
  const std::vector<double> not_increasing = {0.0, 0.2, 0.2};
  CHECK_THROWS_AS(cumulative_speed_integral(BoundKind::kOp, plus, kMarkov, not_at_zero),
                  PreconditionError);
  CHECK_THROWS_AS(cumulative_speed_integral(BoundKind::kOp, plus, kMarkov, not_increasing),
                  PreconditionError);
}

TEST_CASE("phase damping from |+>: integrals in closed form") {
  // r = 1/sqrt(1 + t^2). Fisher speed integrates to (1/2) arctan t, the
  // generator norms to (1 - r) times 1/2, 1/sqrt(2), 1.
  const auto grid = uniform_grid(50.0, 0.1);
  const DensityMatrix plus = DensityMatrix::plus();
  const auto av = cumulative_speed_integral(BoundKind::kAv, plus, kOhmic, grid);
  const auto op = cumulative_speed_integral(BoundKind::kOp, plus, kOhmic, grid);
  const auto hs = cumulative_speed_integral(BoundKind::kHs, plus, kOhmic, grid);
  const auto tr = cumulative_speed_integral(BoundKind::kTr, plus, kOhmic, grid);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double t = grid[i];
    const double loss = 1.0 - 1.0 / std::sqrt(1.0 + t * t);
    CHECK(av[i] == doctest::Approx(0.5 * std::atan(t)).epsilon(1e-10));
    CHECK(op[i] == doctest::Approx(0.5 * loss).epsilon(1e-10));
    CHECK(hs[i] == doctest::Approx(loss / std::sqrt(2.0)).epsilon(1e-10));
    CHECK(tr[i] == doctest::Approx(loss).epsilon(1e-10));
  }
}

TEST_CASE("amplitude damping from |+>: commutator speed integrates in closed form") {
  // ||[rho0, rho_dot]||_hs = sqrt(2) |G G'|; Markovian G is monotone, so the
  // integral is (1 - G^2) / sqrt(2).
  const auto grid = uniform_grid(30.0, 0.05);
  const auto q = cumulative_speed_integral(BoundKind::kQuant, DensityMatrix::plus(), kMarkov, grid);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double g = oracle::complex_decoherence_ad(grid[i], 0.4, 1.0);
    CHECK(q[i] == doctest::Approx((1 - g * g) / std::sqrt(2.0)).epsilon(1e-10));
  }
}

TEST_CASE("Fisher speed near t = 0 approaches sqrt(gamma0 lambda / 8)") {
  // G ~ 1 - (gamma0 lambda / 4) t^2, so the excited weight of rho_t grows like
  // t^2 while its derivative grows like t; the ratio stays finite.
  Dynamics dyn(kMarkov);
  const double limit = std::sqrt(0.4 / 8.0);
  for (double t : {1e-12, 1e-9, 1e-6}) {
    CHECK(speed_integrand(BoundKind::kAv, t, DensityMatrix::plus(), dyn) ==
          doctest::Approx(limit).epsilon(1e-6));
  }
  CHECK(speed_integrand(BoundKind::kAv, 0.0, DensityMatrix::plus(), dyn) == 0.0);
  // The integral itself still starts at zero and grows linearly.
  const std::vector<double> grid = {0.0, 1e-4};
  const auto cum = cumulative_speed_integral(BoundKind::kAv, DensityMatrix::plus(), kMarkov, grid);
  CHECK(cum[1] == doctest::Approx(limit * 1e-4).epsilon(1e-6));
}

TEST_CASE("cumulative integral does not depend on the grid step") {
  const auto coarse = uniform_grid(10.0, 0.1);
  const auto fine = uniform_grid(10.0, 0.05);
  for (BoundKind k : {BoundKind::kAv, BoundKind::kOp, BoundKind::kQuant}) {
    const auto a = cumulative_speed_integral(k, DensityMatrix::plus(), kNonMarkov, coarse);
    const auto b = cumulative_speed_integral(k, DensityMatrix::plus(), kNonMarkov, fine);
    CHECK(a.back() == doctest::Approx(b.back()).epsilon(1e-11));
  }
}

TEST_CASE("tau_cri against an independent root find") {
  for (double ratio : {0.4, 20.0}) {
    const ChannelModel m = ChannelModel::amplitude_damping(AdParams::from_ratio(ratio));
    const auto tau = find_tau_cri(DensityMatrix::plus(), m, config(60.0, 0.01));
    const auto expect = oracle::root_tau_cri_ad_plus(ratio, 1e-6, 60.0, 0.01);
    REQUIRE(tau.has_value());
    REQUIRE(expect.has_value());
    CHECK(*tau == doctest::Approx(*expect).epsilon(1e-9));
  }
}

TEST_CASE("tau_cri for Ohmic phase damping from |+>") {
  // r/2 = eps  =>  t = sqrt((2 eps)^-2 - 1).
  const auto tau = find_tau_cri(DensityMatrix::plus(), kOhmic, config(1e6, 100.0));
  REQUIRE(tau.has_value());
  CHECK(*tau == doctest::Approx(std::sqrt(std::pow(2e-6, -2) - 1)).epsilon(1e-9));
}

TEST_CASE("tau_cri edge cases") {
  // Already within epsilon of the stationary state.
  ResolutionConfig loose = config(10.0, 0.01);
  loose.epsilon = 0.5;
  const DensityMatrix near(ComplexMatrix2::diag(0.8, 0.2));
  CHECK(find_tau_cri(near, kMarkov, loose) == 0.0);
  CHECK(find_tau_cri(DensityMatrix::ground(), kMarkov, config(10.0, 0.01)) == 0.0);
  // Horizon too short.
  CHECK_FALSE(find_tau_cri(DensityMatrix::plus(), kMarkov, config(10.0, 0.01)).has_value());
}

TEST_CASE("tau_cri ignores temporary dips below epsilon") {
  // Every zero of G pulls the trace distance to 0; the first is near 0.55.
  const auto tau = find_tau_cri(DensityMatrix::plus(), kNonMarkov, config(60.0, 0.01));
  REQUIRE(tau.has_value());
  CHECK(*tau > 20.0);
  Dynamics dyn(kNonMarkov);
  for (int i = 0; i < 1000; ++i) {
    const double t = *tau + 0.03 * i;
    if (t > 60.0) break;
    CHECK(witness_value(Witness::kTraceDistanceToStationary, t, DensityMatrix::plus(), dyn) < 1e-6);
  }
}

TEST_CASE("tau_cri shrinks as epsilon grows in the Markovian channel") {
  double prev = 1e9;
  for (double eps : {1e-8, 1e-6, 1e-4, 1e-2}) {
    ResolutionConfig c = config(80.0, 0.01);
    c.epsilon = eps;
    const auto tau = find_tau_cri(DensityMatrix::plus(), kMarkov, c);
    REQUIRE(tau.has_value());
    CHECK(*tau < prev);
    prev = *tau;
  }
}

TEST_CASE("decoherence witness") {
  ResolutionConfig c = config(60.0, 0.01);
  c.witness = Witness::kDecoherenceFunctionMagnitude;
  const auto tau = find_tau_cri(DensityMatrix::plus(), kMarkov, c);
  REQUIRE(tau.has_value());
  CHECK(std::abs(decoherence_ad(*tau, kMarkov.ad())) == doctest::Approx(1e-6).epsilon(1e-6));
}

TEST_CASE("qsl time conventions") {
  CHECK(qsl_time_from(0.3, 0.0, 0.0) == 0.0);
  CHECK(qsl_time_from(0.0, 2.0, 0.0) == 0.0);
  CHECK(qsl_time_from(0.5, 2.0, 0.25) == 4.0);
  CHECK_THROWS_AS(qsl_time_from(0.5, 2.0, 0.0), DegenerateBoundError);
  // No evolution at all: ground state under amplitude damping.
  for (BoundKind k : kAllKinds) {
    CHECK(qsl_time(k, 3.0, DensityMatrix::ground(), kMarkov, 0.0) == 0.0);
  }
}

TEST_CASE("quantumness bound vanishes for commuting trajectories") {
  const auto pd = qsl_series(BoundKind::kQuant, DensityMatrix::plus(), kOhmic,
                             config(100.0, 0.5), false);
  const auto ad = qsl_series(BoundKind::kQuant, DensityMatrix::excited(), kMarkov,
                             config(60.0, 0.01), false);
  for (double v : pd.tau_qsl) CHECK(std::abs(v) < 1e-14);
  for (double v : ad.tau_qsl) CHECK(std::abs(v) < 1e-14);
}

TEST_CASE("unified min bound is the operator-norm bound") {
  for (const auto& m : {kMarkov, kNonMarkov}) {
    const auto op = qsl_series(BoundKind::kOp, DensityMatrix::plus(), m, config(30.0, 0.02), false);
    const auto mn =
        qsl_series(BoundKind::kUnifiedMin, DensityMatrix::plus(), m, config(30.0, 0.02), false);
    for (std::size_t i = 0; i < op.tau_qsl.size(); ++i) {
      CHECK(mn.tau_qsl[i] == doctest::Approx(op.tau_qsl[i]).epsilon(1e-12).scale(1e-12));
    }
  }
}

TEST_CASE("modified series: unchanged before tau_cri, frozen after") {
  for (const auto& m : {kMarkov, kNonMarkov}) {
    for (BoundKind k : {BoundKind::kAv, BoundKind::kOp, BoundKind::kQuant}) {
      const ResolutionConfig c = config(60.0, 0.01);
      const auto raw = qsl_series(k, DensityMatrix::plus(), m, c, false);
      const auto mod = qsl_series(k, DensityMatrix::plus(), m, c, true);
      REQUIRE(mod.tau_cri.has_value());
      REQUIRE(mod.frozen_value.has_value());
      CHECK(mod.modified);
      CHECK(raw.tau_cri == mod.tau_cri);
      for (std::size_t i = 0; i < mod.times.size(); ++i) {
        if (mod.times[i] < *mod.tau_cri) {
          CHECK(mod.tau_qsl[i] == raw.tau_qsl[i]);
        } else {
          CHECK(mod.tau_qsl[i] == *mod.frozen_value);
        }
      }
      // The frozen value is the unmodified bound evaluated at tau_cri.
      std::vector<double> grid;
      for (double t : mod.times) {
        if (t < *mod.tau_cri) grid.push_back(t);
      }
      grid.push_back(*mod.tau_cri);
      Dynamics dyn(m);
      const auto at = qsl_series(k, DensityMatrix::plus(), dyn, grid, 1e-6,
                                 Witness::kTraceDistanceToStationary, false);
      CHECK(at.tau_qsl.back() == doctest::Approx(*mod.frozen_value).epsilon(1e-9));
    }
  }
}

TEST_CASE("modified mode without tau_cri throws") {
  CHECK_THROWS_AS(qsl_series(BoundKind::kAv, DensityMatrix::plus(), kMarkov, config(10.0, 0.01), true),
                  NoTauCriError);
  CHECK_NOTHROW(qsl_series(BoundKind::kAv, DensityMatrix::plus(), kMarkov, config(10.0, 0.01), false));
}

TEST_CASE("tightness is tau / t, empty at t = 0, at most 1") {
  const auto s = qsl_series(BoundKind::kOp, DensityMatrix::plus(), kMarkov, config(60.0, 0.01), true);
  CHECK_FALSE(s.tightness.front().has_value());
  for (std::size_t i = 1; i < s.times.size(); ++i) {
    REQUIRE(s.tightness[i].has_value());
    CHECK(*s.tightness[i] <= 1.0);
    CHECK(*s.tightness[i] == doctest::Approx(s.tau_qsl[i] / s.times[i]).epsilon(1e-15));
  }
  // Beyond tau_cri the tightness decays like frozen / t.
  const double t = s.times.back();
  CHECK(*s.tightness.back() == doctest::Approx(*s.frozen_value / t));
  BoundSeries saturated;
  saturated.times = {0.0, 1.0, 2.0};
  saturated.tau_qsl = {0.0, 1.0, 2.0 + 1e-13};
  const auto tt = tightness(saturated);
  CHECK(tt[1] == 1.0);
  CHECK(tt[2] == 1.0);
}

TEST_CASE("bounds never exceed the elapsed time for random initial states") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 6; ++i) {
    const DensityMatrix rho0 = oracle::random_state(rng);
    for (const auto& m : {kMarkov, kNonMarkov, ChannelModel::phase_damping(PdParams{0.5, 1.0})}) {
      for (BoundKind k : kAllKinds) {
        Dynamics dyn(m);
        const auto grid = uniform_grid(15.0, 0.05);
        BoundSeries s;
        try {
          s = qsl_series(k, rho0, dyn, grid, 1e-6, Witness::kTraceDistanceToStationary, false);
        } catch (const DegenerateBoundError&) {
          continue;  // e.g. a diagonal state under dephasing never moves
        }
        for (std::size_t j = 0; j < grid.size(); ++j) {
          CAPTURE(m.describe());
          CAPTURE(to_string(k));
          CHECK(s.tau_qsl[j] >= 0.0);
          CHECK(s.tau_qsl[j] <= grid[j] * (1 + 1e-9));
        }
      }
    }
  }
}

}  // TEST_SUITE
