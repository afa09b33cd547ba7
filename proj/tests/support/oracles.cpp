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


#include "oracles.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>
#include <Eigen/Eigenvalues>

namespace qsl::testing {

Mat to_eigen(const ComplexMatrix2& m) {
  Mat out;
  out << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
  return out;
}

ComplexMatrix2 from_eigen(const Mat& m) {
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

OdeSample ode_decoherence_ad(double t, double gamma0, double lambda) {
  using State = std::array<double, 2>;
  namespace odeint = boost::numeric::odeint;
  State x{1.0, 0.0};
  if (t > 0.0) {
    auto rhs = [&](const State& s, State& ds, double) {
      ds[0] = s[1];
      ds[1] = -lambda * s[1] - 0.5 * gamma0 * lambda * s[0];
    };
    auto stepper = odeint::make_controlled(1e-14, 1e-14,
                                           odeint::runge_kutta_dopri5<State>());
    odeint::integrate_adaptive(stepper, rhs, x, 0.0, t, std::min(1e-3, t));
  }
  return {x[0], x[1]};
}

double complex_decoherence_ad(double t, double gamma0, double lambda) {
  using C = std::complex<double>;
  const C d = std::sqrt(C(lambda * lambda - 2.0 * gamma0 * lambda));
  const C h = 0.5 * d * t;
  const C value = std::exp(-0.5 * lambda * t) * (std::cosh(h) + (lambda / d) * std::sinh(h));
  return value.real();
}

namespace {

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

// int_0^60 omega_c of f, in pieces a few oscillation periods wide.
template <typename F>
double frequency_integral(F f, double t, double omega_c) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const double cut = 60.0 * omega_c;
  const int pieces = std::max(1, static_cast<int>(std::ceil(cut * t / 6.0)));
  double total = 0.0;
  for (int i = 0; i < pieces; ++i) {
    total += ts.integrate(f, cut * i / pieces, cut * (i + 1) / pieces);
  }
  return total;
}

}  // namespace

double spectral_dephasing_integral(double t, double s, double omega_c) {
  // J(w) (1 - cos wt) / w^2 with (1 - cos wt) / w^2 = (t^2 / 2) sinc^2(wt / 2).
  auto f = [&](double w) {
    const double c = sinc(0.5 * w * t);
    return std::pow(w, s) * std::pow(omega_c, 1.0 - s) * std::exp(-w / omega_c) * 0.5 * t * t *
           c * c;
  };
  return frequency_integral(f, t, omega_c);
}

double spectral_dephasing_rate(double t, double s, double omega_c) {
  // J(w) sin(wt) / w = w^s omega_c^(1-s) e^(-w/omega_c) t sinc(wt).
  auto f = [&](double w) {
    return std::pow(w, s) * std::pow(omega_c, 1.0 - s) * std::exp(-w / omega_c) * t *
           sinc(w * t);
  };
  return frequency_integral(f, t, omega_c);
}

namespace {

Mat hermitian_sqrt(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m);
  Eigen::Vector2d v = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * v.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

double eigen_fidelity(const Mat& a, const Mat& b) {
  const Mat ra = hermitian_sqrt(a);
  const Mat inner = ra * b * ra;
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (inner + inner.adjoint()));
  return es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
}

double eigen_trace_distance(const Mat& a, const Mat& b) {
  const Mat diff = a - b;
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (diff + diff.adjoint()));
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

Eigen::Vector2d singular_values(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues();
}

double lyapunov_qfi(const Mat& rho, const Mat& rho_dot) {
  // Column-major vec: entry (r, c) of L sits at r + 2c.
  //   (rho L)(r, c) = sum_m rho(r, m) L(m, c)
  //   (L rho)(r, c) = sum_m L(r, m) rho(m, c)
  Eigen::Matrix4cd a = Eigen::Matrix4cd::Zero();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int m = 0; m < 2; ++m) {
        a(r + 2 * c, m + 2 * c) += 0.5 * rho(r, m);
        a(r + 2 * c, r + 2 * m) += 0.5 * rho(m, c);
      }
  const Eigen::Vector4cd rhs = Eigen::Map<const Eigen::Vector4cd>(rho_dot.data());
  const Eigen::Vector4cd vec_l = a.fullPivLu().solve(rhs);
  const Mat l = Eigen::Map<const Mat>(vec_l.data());
  return (rho * l * l).trace().real();
}

std::optional<double> root_tau_cri_ad_plus(double gamma0_over_lambda,
                                           double epsilon, double t_max,
                                           double dt) {
  auto witness = [&](double t) {
    const double g = complex_decoherence_ad(t, gamma0_over_lambda, 1.0);
    return 0.5 * std::abs(g) * std::sqrt(1.0 + g * g);
  };
  const auto n = static_cast<long>(std::floor(t_max / dt * (1.0 + 1e-12)));
  long last_above = -1;
  for (long i = 0; i <= n; ++i) {
    if (witness(i * dt) >= epsilon) last_above = i;
  }
  if (last_above < 0) return 0.0;
  if (last_above == n) return std::nullopt;
  std::uintmax_t iters = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(
      [&](double t) { return witness(t) - epsilon; }, last_above * dt,
      (last_above + 1) * dt, boost::math::tools::eps_tolerance<double>(50),
      iters);
  return 0.5 * (lo + hi);
}

ComplexMatrix2 random_hermitian(std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> n(0.0, scale);
  const double a = n(rng);
  const double d = n(rng);
  const Complex b(n(rng), n(rng));
  return {a, b, std::conj(b), d};
}

ComplexMatrix2 random_traceless_hermitian(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double a = n(rng);
  const Complex b(n(rng), n(rng));
  return {a, b, std::conj(b), -a};
}

ComplexMatrix2 random_psd(std::mt19937_64& rng) {
  const ComplexMatrix2 a = random_hermitian(rng) + Complex(0.0, 1.0) * random_hermitian(rng);
  return a * a.adjoint();
}

DensityMatrix random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double x = n(rng), y = n(rng), z = n(rng);
  const double len = std::sqrt(x * x + y * y + z * z);
  // One in five on the sphere (pure), the rest uniform in the ball.
  const double radius = u(rng) < 0.2 ? 1.0 : std::cbrt(u(rng));
  x *= radius / len;
  y *= radius / len;
  z *= radius / len;
  return DensityMatrix::from_bloch({x, y, z});
}

}  // namespace qsl::testing
