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

#include "qsl/qmat.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "qsl/errors.hpp"

namespace qsl {

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kPsdClamp = 1e-12;

Vector2 normalized(Complex a, Complex b) {
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  return {a / n, b / n};
}

}  // namespace

ComplexMatrix2 ComplexMatrix2::outer(const Vector2& v, const Vector2& w) {
  return {v[0] * std::conj(w[0]), v[0] * std::conj(w[1]),
          v[1] * std::conj(w[0]), v[1] * std::conj(w[1])};
}

ComplexMatrix2 ComplexMatrix2::adjoint() const {
  return {std::conj(a_[0]), std::conj(a_[2]), std::conj(a_[1]),
          std::conj(a_[3])};
}

bool ComplexMatrix2::all_finite() const {
  return std::all_of(a_.begin(), a_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

double ComplexMatrix2::hermiticity_defect() const {
  return std::max({std::abs(a_[0].imag()), std::abs(a_[3].imag()),
                   std::abs(a_[2] - std::conj(a_[1]))});
}

ComplexMatrix2 ComplexMatrix2::hermitian_part() const {
  const Complex off = 0.5 * (a_[1] + std::conj(a_[2]));
  return {a_[0].real(), off, std::conj(off), a_[3].real()};
}

ComplexMatrix2& ComplexMatrix2::operator+=(const ComplexMatrix2& o) {
  for (std::size_t i = 0; i < 4; ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix2& ComplexMatrix2::operator-=(const ComplexMatrix2& o) {
  for (std::size_t i = 0; i < 4; ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix2& ComplexMatrix2::operator*=(Complex s) {
  for (auto& z : a_) z *= s;
  return *this;
}

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0),
          a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0),
          a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

double max_abs_diff(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  double m = 0.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

Vector2 multiply(const ComplexMatrix2& m, const Vector2& v) {
  return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}

Complex inner(const Vector2& v, const Vector2& w) {
  return std::conj(v[0]) * w[0] + std::conj(v[1]) * w[1];
}

HermitianEigen hermitian_eigendecomposition(const ComplexMatrix2& m) {
  const double det = std::fma(m(0, 0).real(), m(1, 1).real(),
                              -std::norm(0.5 * (m(0, 1) + std::conj(m(1, 0)))));
  return hermitian_eigendecomposition(m, det);
}

HermitianEigen hermitian_eigendecomposition(const ComplexMatrix2& m, double det) {
  if (!m.all_finite()) throw PreconditionError("eigendecomposition: non-finite entry");
  if (const double defect = m.hermiticity_defect();
      defect > kHermitianTolerance) {
    std::ostringstream msg;
    msg << "eigendecomposition: matrix not Hermitian (defect " << defect << ")";
    throw PreconditionError(msg.str());
  }
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));

  const double mean = 0.5 * (a + d);
  const double half_gap = 0.5 * (a - d);
  const double radius = std::hypot(half_gap, std::abs(b));

  HermitianEigen out;
  if (mean >= 0.0) {
    out.values[0] = mean + radius;
    out.values[1] = out.values[0] != 0.0 ? det / out.values[0] : 0.0;
  } else {
    out.values[1] = mean - radius;
    out.values[0] = det / out.values[1];
  }

  if (radius == 0.0) {
    out.vectors = {Vector2{1.0, 0.0}, Vector2{0.0, 1.0}};
    return out;
  }
  // Pick the eigenvector form that avoids cancellation in its first slot.
  const Vector2 v = half_gap >= 0.0 ? normalized(radius + half_gap, std::conj(b))
                                    : normalized(b, radius - half_gap);
  out.vectors[0] = v;
  out.vectors[1] = {-std::conj(v[1]), std::conj(v[0])};
  return out;
}

ComplexMatrix2 psd_sqrt(const ComplexMatrix2& m) {
  const HermitianEigen e = hermitian_eigendecomposition(m);
  ComplexMatrix2 out;
  for (std::size_t i = 0; i < 2; ++i) {
    const double lambda = e.values[i];
    if (lambda < -kPsdClamp) {
      std::ostringstream msg;
      msg << "psd_sqrt: eigenvalue " << lambda << " below -" << kPsdClamp;
      throw NotPsdError(msg.str());
    }
    out += std::sqrt(std::max(lambda, 0.0)) *
           ComplexMatrix2::outer(e.vectors[i], e.vectors[i]);
  }
  return out.hermitian_part();
}

double hs_norm(const ComplexMatrix2& m) {
  double s = 0.0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) s += std::norm(m(r, c));
  return std::sqrt(s);
}

MatrixNorms norms(const ComplexMatrix2& m) {
  if (!m.all_finite()) throw PreconditionError("norms: non-finite entry");
  MatrixNorms out;
  out.hs = hs_norm(m);
  if (out.hs == 0.0) return out;
  // Singular values are the square roots of the eigenvalues of m^dagger m;
  // the smaller one comes from |det m| = s1 * s2.
  const ComplexMatrix2 gram = (m.adjoint() * m).hermitian_part();
  const double s1 = std::sqrt(std::max(hermitian_eigendecomposition(gram).values[0], 0.0));
  const double s2 = s1 > 0.0 ? std::abs(m.det()) / s1 : 0.0;
  out.op = s1;
  out.tr = s1 + s2;
  return out;
}

ComplexMatrix2 commutator(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  return a * b - b * a;
}

double commutator_hs_norm(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  if (!a.is_hermitian(kHermitianTolerance) || !b.is_hermitian(kHermitianTolerance))
    throw PreconditionError("commutator_hs_norm: input is not Hermitian");
  // m = m0 I + v . sigma with v = (Re m01, -Im m01, (m00 - m11) / 2).
  auto pauli = [](const ComplexMatrix2& m) {
    return std::array<double, 3>{m(0, 1).real(), -m(0, 1).imag(),
                                 0.5 * (m(0, 0).real() - m(1, 1).real())};
  };
  const auto u = pauli(a);
  const auto v = pauli(b);
  const double cx = u[1] * v[2] - u[2] * v[1];
  const double cy = u[2] * v[0] - u[0] * v[2];
  const double cz = u[0] * v[1] - u[1] * v[0];
  return 2.0 * std::sqrt(2.0) * std::hypot(cx, cy, cz);
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

bool is_density_matrix(const ComplexMatrix2& m, double tol) {
  if (!m.all_finite()) return false;
  if (m.hermiticity_defect() > tol) return false;
  if (std::abs(m.trace() - 1.0) > tol) return false;
  const ComplexMatrix2 h = m.hermitian_part();
  return hermitian_eigendecomposition(h).values[1] >= -tol;
}

namespace {

double entry_det(const ComplexMatrix2& m) {
  return std::fma(m(0, 0).real(), m(1, 1).real(), -std::norm(m(0, 1)));
}

}  // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix2& m, double tol)
    : m_(m), det_(entry_det(m)) {
  if (!m.all_finite()) throw InvalidStateError("density matrix: non-finite entry");
  if (m.hermiticity_defect() > tol)
    throw InvalidStateError("density matrix: not Hermitian");
  if (std::abs(m.trace() - 1.0) > tol)
    throw InvalidStateError("density matrix: trace differs from 1");
  if (hermitian_eigendecomposition(m.hermitian_part()).values[1] < -tol)
    throw InvalidStateError("density matrix: negative eigenvalue");
}

DensityMatrix DensityMatrix::with_determinant(const ComplexMatrix2& m,
                                              double det, double tol) {
  DensityMatrix out(m, tol);
  out.det_ = det;
  return out;
}

HermitianEigen DensityMatrix::eigen() const {
  return hermitian_eigendecomposition(m_.hermitian_part(), det_);
}

DensityMatrix DensityMatrix::from_bloch(const BlochVector& r) {
  if (!(r.norm() <= 1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "Bloch vector length " << r.norm() << " exceeds 1";
    throw InvalidStateError(msg.str());
  }
  const Complex off(0.5 * r.x, -0.5 * r.y);
  return DensityMatrix(
      ComplexMatrix2(0.5 * (1.0 + r.z), off, std::conj(off), 0.5 * (1.0 - r.z)));
}

DensityMatrix DensityMatrix::ground() {
  return DensityMatrix(ComplexMatrix2::diag(1.0, 0.0));
}

DensityMatrix DensityMatrix::excited() {
  return DensityMatrix(ComplexMatrix2::diag(0.0, 1.0));
}

DensityMatrix DensityMatrix::plus() {
  return DensityMatrix(ComplexMatrix2(0.5, 0.5, 0.5, 0.5));
}

BlochVector DensityMatrix::bloch() const {
  const Complex c = m_(0, 1);
  return {2.0 * c.real(), -2.0 * c.imag(), m_(0, 0).real() - m_(1, 1).real()};
}

}  // namespace qsl
