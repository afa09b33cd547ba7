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

#include "qsl/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qsl/errors.hpp"
#include "qsl/quadrature.hpp"

namespace qsl {

namespace {

// Absolute tolerance for one cached stretch of the dephasing integral.
constexpr double kStretchTolerance = 1e-13;
// Contractual accuracy of r(t).
constexpr double kDephasingTolerance = 1e-10;
constexpr double kCriticalBranch = 1e-12;
constexpr double kOutputStateTolerance = 1e-10;

void require_time(double t, const char* where) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    std::ostringstream msg;
    msg << where << ": time must be finite and >= 0 (got " << t << ")";
    throw PreconditionError(msg.str());
  }
}

enum class AdBranch { kMarkovian, kCritical, kOscillatory };

struct AdShape {
  AdBranch branch;
  double d;  // |d|
};

AdShape ad_shape(const AdParams& p) {
  const double d2 = p.lambda * p.lambda - 2.0 * p.gamma0 * p.lambda;
  if (std::abs(d2) < kCriticalBranch * p.lambda * p.lambda)
    return {AdBranch::kCritical, 0.0};
  if (d2 > 0.0) return {AdBranch::kMarkovian, std::sqrt(d2)};
  return {AdBranch::kOscillatory, std::sqrt(-d2)};
}

double sqrt_one_minus_square(double g, bool& clamped) {
  const double arg = std::fma(-g, g, 1.0);
  if (arg < 0.0) {
    clamped = true;
    return 0.0;
  }
  return std::sqrt(arg);
}

}  // namespace

AdParams AdParams::from_ratio(double gamma0_over_lambda, double lambda) {
  AdParams p;
  p.lambda = lambda;
  p.gamma0 = gamma0_over_lambda * lambda;
  p.validate();
  return p;
}

void AdParams::validate() const {
  if (!(gamma0 > 0.0) || !std::isfinite(gamma0))
    throw PreconditionError("amplitude damping: gamma0 must be > 0");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw PreconditionError("amplitude damping: lambda must be > 0");
  if (delta != 0.0)
    throw PreconditionError("amplitude damping: only zero detuning is supported");
}

void PdParams::validate() const {
  if (!(s > 0.0) || !std::isfinite(s))
    throw PreconditionError("phase damping: s must be > 0");
  if (!(omega_c > 0.0) || !std::isfinite(omega_c))
    throw PreconditionError("phase damping: omega_c must be > 0");
}

ChannelModel ChannelModel::amplitude_damping(const AdParams& p) {
  p.validate();
  return ChannelModel(p);
}

ChannelModel ChannelModel::phase_damping(const PdParams& p) {
  p.validate();
  return ChannelModel(p);
}

std::string ChannelModel::describe() const {
  std::ostringstream out;
  out.precision(12);
  if (is_amplitude_damping()) {
    const auto& p = ad();
    out << "amplitude-damping gamma0=" << p.gamma0 << " lambda=" << p.lambda
        << " gamma0/lambda=" << p.gamma0 / p.lambda
        << (p.markovian() ? " (markovian)" : " (non-markovian)");
  } else {
    const auto& p = pd();
    out << "phase-damping s=" << p.s << " omega_c=" << p.omega_c;
  }
  return out.str();
}

ComplexMatrix2 KrausSet::completeness() const {
  return k1.adjoint() * k1 + k2.adjoint() * k2;
}

double spectral_density_ad(double omega, const AdParams& p) {
  const double detuned = p.omega0 + p.delta - omega;
  return p.gamma0 * p.lambda * p.lambda /
         (2.0 * std::numbers::pi * (detuned * detuned + p.lambda * p.lambda));
}

double decoherence_ad(double t, const AdParams& p) {
  require_time(t, "decoherence_ad");
  const auto [branch, d] = ad_shape(p);
  switch (branch) {
    case AdBranch::kMarkovian: {
      // e^{-lt/2} cosh(dt/2) and e^{-lt/2} sinh(dt/2) written as two decaying
      // exponentials so large t never overflows.
      const double slow = std::exp(-0.5 * (p.lambda - d) * t);
      const double gap = -slow * std::expm1(-d * t);  // slow - fast
      return slow - 0.5 * gap + 0.5 * (p.lambda / d) * gap;
    }
    case AdBranch::kCritical:
      return std::exp(-0.5 * p.lambda * t) * (1.0 + 0.5 * p.lambda * t);
    case AdBranch::kOscillatory: {
      const double phase = 0.5 * d * t;
      return std::exp(-0.5 * p.lambda * t) *
             (std::cos(phase) + (p.lambda / d) * std::sin(phase));
    }
  }
  return 0.0;
}

double decoherence_ad_derivative(double t, const AdParams& p) {
  require_time(t, "decoherence_ad_derivative");
  // dG/dt = -(gamma0 lambda / d) e^{-lt/2} sinh(dt/2)
  const auto [branch, d] = ad_shape(p);
  const double coupling = p.gamma0 * p.lambda;
  switch (branch) {
    case AdBranch::kMarkovian: {
      const double slow = std::exp(-0.5 * (p.lambda - d) * t);
      return (coupling / d) * 0.5 * slow * std::expm1(-d * t);
    }
    case AdBranch::kCritical:
      return -0.5 * coupling * t * std::exp(-0.5 * p.lambda * t);
    case AdBranch::kOscillatory:
      return -(coupling / d) * std::exp(-0.5 * p.lambda * t) *
             std::sin(0.5 * d * t);
  }
  return 0.0;
}

double one_minus_decoherence_ad(double t, const AdParams& p) {
  require_time(t, "one_minus_decoherence_ad");
  const double damping = p.lambda;
  const double stiffness = 0.5 * p.gamma0 * p.lambda;
  const double scale = (damping + std::sqrt(stiffness)) * t;
  if (scale > 0.5) return 1.0 - decoherence_ad(t, p);
  // Taylor coefficients from c_{n+2} (n+2)(n+1) = -(lambda (n+1) c_{n+1} + k c_n),
  // c_0 = 1, c_1 = 0; summed as powers of t directly.
  double c_prev = 1.0;  // c_n t^n
  double c_curr = 0.0;  // c_{n+1} t^{n+1}
  double sum = 0.0;
  for (int n = 0; n < 80; ++n) {
    const double next = -(damping * (n + 1) * c_curr * t + stiffness * c_prev * t * t) /
                        ((n + 2.0) * (n + 1.0));
    sum += next;
    c_prev = c_curr;
    c_curr = next;
    if (n > 2 && std::abs(next) <= 1e-18 * std::abs(sum) && std::abs(c_prev) <= 1e-18 * std::abs(sum))
      break;
  }
  return -sum;
}

double spectral_density_pd(double omega, const PdParams& p) {
  if (!(omega >= 0.0))
    throw PreconditionError("spectral_density_pd: omega must be >= 0");
  return std::pow(omega, p.s) / std::pow(p.omega_c, p.s - 1.0) *
         std::exp(-omega / p.omega_c);
}

namespace {

double dephasing_rate_with(double t, const PdParams& p, double gamma_s) {
  const double x = p.omega_c * t;
  return p.omega_c * std::pow(1.0 + x * x, -0.5 * p.s) * gamma_s *
         std::sin(p.s * std::atan(x));
}

}  // namespace

double dephasing_rate(double t, const PdParams& p) {
  require_time(t, "dephasing_rate");
  return dephasing_rate_with(t, p, std::tgamma(p.s));
}

double decoherence_pd(double t, const PdParams& p) {
  require_time(t, "decoherence_pd");
  const double gamma_s = std::tgamma(p.s);
  const auto rate = [&](double u) { return dephasing_rate_with(u, p, gamma_s); };
  const QuadratureResult q = adaptive_simpson(rate, 0.0, t, 1e-12);
  if (q.error > kDephasingTolerance) {
    std::ostringstream msg;
    msg << "decoherence_pd: quadrature error " << q.error << " at t=" << t;
    throw IntegrationError(msg.str());
  }
  return std::exp(-q.value);
}

KrausSet kraus_from_decoherence(double g, const ChannelModel& model) {
  KrausSet k;
  const double transfer = sqrt_one_minus_square(g, k.clamped);
  k.k1 = ComplexMatrix2::diag(1.0, g);
  if (model.is_amplitude_damping()) {
    k.k2 = ComplexMatrix2(0.0, transfer, 0.0, 0.0);
  } else {
    k.k2 = ComplexMatrix2::diag(0.0, transfer);
  }
  return k;
}

Dynamics::Dynamics(ChannelModel model) : model_(std::move(model)) {
  if (!model_.is_amplitude_damping()) {
    gamma_s_ = std::tgamma(model_.pd().s);
    knots_.emplace_back(0.0, 0.0);
  }
}

double Dynamics::dephasing_integral(double t) {
  auto it = std::upper_bound(
      knots_.begin(), knots_.end(), t,
      [](double value, const auto& knot) { return value < knot.first; });
  const auto [t0, base] = *std::prev(it);
  if (t0 == t) return base;
  const PdParams& p = model_.pd();
  const auto rate = [&](double u) { return dephasing_rate_with(u, p, gamma_s_); };
  const QuadratureResult q = adaptive_simpson(rate, t0, t, kStretchTolerance);
  if (q.error > kDephasingTolerance) {
    std::ostringstream msg;
    msg << "dephasing integral: quadrature error " << q.error << " on [" << t0
        << ", " << t << "]";
    throw IntegrationError(msg.str());
  }
  const double value = base + q.value;
  if (it == knots_.end()) knots_.emplace_back(t, value);
  return value;
}

double Dynamics::decoherence(double t) {
  if (model_.is_amplitude_damping()) return decoherence_ad(t, model_.ad());
  require_time(t, "decoherence_pd");
  return std::exp(-dephasing_integral(t));
}

double Dynamics::decoherence_derivative(double t) {
  if (model_.is_amplitude_damping())
    return decoherence_ad_derivative(t, model_.ad());
  require_time(t, "decoherence_pd");
  return -dephasing_rate_with(t, model_.pd(), gamma_s_) * decoherence(t);
}

double Dynamics::one_minus_decoherence_squared(double t) {
  if (model_.is_amplitude_damping()) {
    const double g = decoherence(t);
    return one_minus_decoherence_ad(t, model_.ad()) * (1.0 + g);
  }
  require_time(t, "decoherence_pd");
  return -std::expm1(-2.0 * dephasing_integral(t));
}

std::vector<double> sign_change_times(const ChannelModel& model, double a, double b) {
  std::vector<double> out;
  if (!(b > a)) return out;
  auto keep = [&](double t) {
    if (t > a && t < b) out.push_back(t);
  };
  if (model.is_amplitude_damping()) {
    const AdParams& p = model.ad();
    const auto [branch, d] = ad_shape(p);
    if (branch != AdBranch::kOscillatory) return out;
    // g' ~ sin(d t / 2); g ~ cos(d t / 2) + (lambda / d) sin(d t / 2).
    const double period = 2.0 * std::numbers::pi / d;
    const double shift = 2.0 * std::atan(d / p.lambda) / d;
    const auto first = static_cast<long>(std::floor(a / period));
    for (long k = std::max(1L, first); k * period - shift < b; ++k) {
      keep(k * period - shift);
      keep(k * period);
    }
  } else {
    // gamma ~ sin(s atan(omega_c t)) vanishes where atan(omega_c t) = k pi / s.
    const PdParams& p = model.pd();
    for (int k = 1; k * std::numbers::pi / p.s < 0.5 * std::numbers::pi; ++k) {
      keep(std::tan(k * std::numbers::pi / p.s) / p.omega_c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

KrausSet Dynamics::kraus(double t) {
  return kraus_from_decoherence(decoherence(t), model_);
}

DensityMatrix Dynamics::evolve(const DensityMatrix& rho0, double t) {
  const KrausSet k = kraus(t);
  const ComplexMatrix2& rho = rho0.matrix();
  const ComplexMatrix2 out =
      k.k1 * rho * k.k1.adjoint() + k.k2 * rho * k.k2.adjoint();
  if (!is_density_matrix(out, kOutputStateTolerance)) {
    std::ostringstream msg;
    msg << "evolve: output is not a density matrix at t=" << t << " ("
        << model_.describe() << ")";
    throw ConsistencyError(msg.str());
  }
  // det rho(t) in closed form:
  //   amplitude damping: G^2 det rho0 + G^2 (1 - G^2) p_e^2, p_e = excited population
  //   phase damping:     det rho0 + (1 - r^2) |rho0_01|^2
  const double g = decoherence(t);
  const double loss = one_minus_decoherence_squared(t);
  const double det =
      model_.is_amplitude_damping()
          ? g * g * (rho0.det() + loss * std::norm(rho(1, 1)))
          : rho0.det() + loss * std::norm(rho(0, 1));
  return DensityMatrix::with_determinant(out, det, kOutputStateTolerance);
}

ComplexMatrix2 Dynamics::derivative(const DensityMatrix& rho0, double t) {
  const ComplexMatrix2& rho = rho0.matrix();
  const double rate = decoherence_derivative(t);
  if (model_.is_amplitude_damping()) {
    const double g = decoherence(t);
    const double flow = 2.0 * g * rate * rho(1, 1).real();
    return {-flow, rate * rho(0, 1), rate * rho(1, 0), flow};
  }
  return {0.0, rate * rho(0, 1), rate * rho(1, 0), 0.0};
}

KrausSet kraus_at(double t, const ChannelModel& model) {
  return Dynamics(model).kraus(t);
}

DensityMatrix evolve(const DensityMatrix& rho0, double t,
                     const ChannelModel& model) {
  return Dynamics(model).evolve(rho0, t);
}

ComplexMatrix2 state_derivative(double t, const DensityMatrix& rho0,
                                 const ChannelModel& model) {
  return Dynamics(model).derivative(rho0, t);
}

DensityMatrix stationary_state(const DensityMatrix& rho0,
                               const ChannelModel& model) {
  if (model.is_amplitude_damping()) return DensityMatrix::ground();
  return DensityMatrix(
      ComplexMatrix2::diag(rho0.population(0), rho0.population(1)));
}

}  // namespace qsl
