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

#include <array>
#include <complex>

namespace qsl {

using Complex = std::complex<double>;
using Vector2 = std::array<Complex, 2>;

/// Dense complex 2x2 matrix, row-major. Indices are zero-based: (0, 0) is
/// the ground-state slot and (1, 1) the excited-state slot.
class ComplexMatrix2 {
 public:
  constexpr ComplexMatrix2() = default;
  constexpr ComplexMatrix2(Complex a00, Complex a01, Complex a10, Complex a11)
      : a_{a00, a01, a10, a11} {}

  static constexpr ComplexMatrix2 zero() { return {}; }
  static constexpr ComplexMatrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr ComplexMatrix2 diag(Complex a, Complex b) {
    return {a, 0.0, 0.0, b};
  }
  static constexpr ComplexMatrix2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
  static constexpr ComplexMatrix2 pauli_y() {
    return {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0};
  }
  static constexpr ComplexMatrix2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }
  /// v w^dagger
  static ComplexMatrix2 outer(const Vector2& v, const Vector2& w);

  constexpr Complex& operator()(int row, int col) { return a_[2 * row + col]; }
  constexpr const Complex& operator()(int row, int col) const {
    return a_[2 * row + col];
  }

  ComplexMatrix2 adjoint() const;
  Complex trace() const { return a_[0] + a_[3]; }
  Complex det() const { return a_[0] * a_[3] - a_[1] * a_[2]; }

  bool all_finite() const;
  /// Max over entries of |a_ij - conj(a_ji)|.
  double hermiticity_defect() const;
  bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }
  /// Hermitian part (m + m^dagger) / 2.
  ComplexMatrix2 hermitian_part() const;

  ComplexMatrix2& operator+=(const ComplexMatrix2& o);
  ComplexMatrix2& operator-=(const ComplexMatrix2& o);
  ComplexMatrix2& operator*=(Complex s);

  friend ComplexMatrix2 operator+(ComplexMatrix2 a, const ComplexMatrix2& b) {
    return a += b;
  }
  friend ComplexMatrix2 operator-(ComplexMatrix2 a, const ComplexMatrix2& b) {
    return a -= b;
  }
  friend ComplexMatrix2 operator*(ComplexMatrix2 a, Complex s) { return a *= s; }
  friend ComplexMatrix2 operator*(Complex s, ComplexMatrix2 a) { return a *= s; }
  friend ComplexMatrix2 operator*(const ComplexMatrix2& a,
                                  const ComplexMatrix2& b);
  friend bool operator==(const ComplexMatrix2&, const ComplexMatrix2&) = default;

 private:
  std::array<Complex, 4> a_{};
};

/// max_ij |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix2& a, const ComplexMatrix2& b);

Vector2 multiply(const ComplexMatrix2& m, const Vector2& v);
/// <v|w>, conjugate-linear in the first argument.
Complex inner(const Vector2& v, const Vector2& w);

struct HermitianEigen {
  std::array<double, 2> values;   // descending
  std::array<Vector2, 2> vectors;  // orthonormal, vectors[i] <-> values[i]
};

/// Closed-form eigendecomposition of a Hermitian 2x2 matrix. The smaller
/// magnitude eigenvalue is recovered from the determinant, which keeps
/// relative accuracy for nearly rank-deficient inputs. A degenerate
/// spectrum returns the standard basis.
///
/// Throws PreconditionError if m is not Hermitian within 1e-10.
HermitianEigen hermitian_eigendecomposition(const ComplexMatrix2& m);
/// Same, with the determinant supplied by the caller (e.g. known in closed
/// form) instead of being formed from the entries.
HermitianEigen hermitian_eigendecomposition(const ComplexMatrix2& m, double det);

/// Principal square root of a Hermitian positive semidefinite matrix.
/// Eigenvalues in [-1e-12, 0) are clamped to zero; anything more negative
/// raises NotPsdError.
ComplexMatrix2 psd_sqrt(const ComplexMatrix2& m);

struct MatrixNorms {
  double op = 0.0;  // largest singular value
  double hs = 0.0;  // Frobenius
  double tr = 0.0;  // sum of singular values
};

MatrixNorms norms(const ComplexMatrix2& m);
double hs_norm(const ComplexMatrix2& m);

/// ab - ba
ComplexMatrix2 commutator(const ComplexMatrix2& a, const ComplexMatrix2& b);

/// ||[a, b]||_hs for Hermitian a, b, as 2 sqrt(2) |a_vec x b_vec| with a_vec
/// the Pauli components of a. Unlike hs_norm(commutator(a, b)) this does not
/// lose relative accuracy when the commutator is much smaller than ab.
///
/// Throws PreconditionError if either input is not Hermitian within 1e-10.
double commutator_hs_norm(const ComplexMatrix2& a, const ComplexMatrix2& b);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double norm() const;
};

/// Qubit state. Construction validates Hermiticity, unit trace and
/// positivity; the stored matrix is the exact input (not symmetrized).
class DensityMatrix {
 public:
  static constexpr double kDefaultTolerance = 1e-12;

  /// Throws InvalidStateError when any invariant fails beyond tol.
  explicit DensityMatrix(const ComplexMatrix2& m,
                         double tol = kDefaultTolerance);

  /// Attaches a determinant known more accurately than the entries allow.
  /// Near pure states det(rho) is a difference of O(1) products, so the
  /// entry-wise value carries absolute error ~1e-16.
  static DensityMatrix with_determinant(const ComplexMatrix2& m, double det,
                                        double tol = kDefaultTolerance);

  /// rho = (I + x sx + y sy + z sz) / 2; |r| may exceed 1 by at most 1e-12.
  static DensityMatrix from_bloch(const BlochVector& r);
  static DensityMatrix ground();   // |0><0| = diag(1, 0)
  static DensityMatrix excited();  // |1><1| = diag(0, 1)
  static DensityMatrix plus();     // |+><+| = [[1,1],[1,1]] / 2

  const ComplexMatrix2& matrix() const { return m_; }
  double population(int i) const { return m_(i, i).real(); }
  Complex coherence() const { return m_(0, 1); }
  BlochVector bloch() const;
  /// det(rho) = (1 - |r|^2) / 4; the attached value if there is one.
  double det() const { return det_; }
  /// Eigendecomposition using det().
  HermitianEigen eigen() const;

  friend bool operator==(const DensityMatrix& a, const DensityMatrix& b) {
    return a.m_ == b.m_;
  }

 private:
  ComplexMatrix2 m_;
  double det_ = 0.0;
};

/// Checks the density-matrix invariants without constructing.
bool is_density_matrix(const ComplexMatrix2& m, double tol);

}  // namespace qsl
