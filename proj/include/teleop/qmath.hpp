// Copyright 2026 The teleop Authors
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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace teleop {

using Complex = std::complex<double>;
using QubitLabel = int;

/// Dense row-major complex matrix. Intended for dimensions up to 2^7.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Complex> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return entries_; }

  std::vector<Complex> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Complex> values);

  Matrix adjoint() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Complex s, const Matrix& m);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Matrix-vector product m * v.
std::vector<Complex> matvec(const Matrix& m, std::span<const Complex> v);

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);

double norm(std::span<const Complex> v);

/// <a|b> with a conjugated.
Complex dot(std::span<const Complex> a, std::span<const Complex> b);

/// Amplitudes over an ordered list of distinct qubit labels.
///
/// Index convention: the first label is the most significant bit of the
/// amplitude index, so over labels (a, b) amplitude 1 is |0>_a |1>_b.
class StateVector {
 public:
  StateVector() = default;
  StateVector(std::vector<QubitLabel> labels, std::vector<Complex> amps);

  /// Computational basis state |index> over `labels`.
  static StateVector basis(std::vector<QubitLabel> labels, std::size_t index);

  const std::vector<QubitLabel>& labels() const { return labels_; }
  std::span<const Complex> amps() const { return amps_; }
  std::size_t num_qubits() const { return labels_.size(); }
  std::size_t size() const { return amps_.size(); }
  const Complex& operator[](std::size_t k) const { return amps_[k]; }

  double norm() const;
  bool is_normalized(double tol) const;
  StateVector normalized() const;
  StateVector scaled(Complex s) const;

  /// Same state expressed over a permutation of its labels.
  StateVector reordered(const std::vector<QubitLabel>& labels) const;

  /// Position of `label` in the label list, or -1.
  int position(QubitLabel label) const;

 private:
  std::vector<QubitLabel> labels_;
  std::vector<Complex> amps_;
};

/// Standard Kronecker product; (a (x) b)[i*p + r][j*q + s] = a[i][j] * b[r][s].
Matrix kron(const Matrix& a, const Matrix& b);

/// Tensor product of states on disjoint labels; result labels are a's then b's.
StateVector kron(const StateVector& a, const StateVector& b);

/// Inner product of two states over the same label set (order may differ).
Complex inner(const StateVector& bra, const StateVector& ket);

/// Contracts `bra` (over labels S) against `psi` (over labels Q, S a subset of Q).
///
///   result[t] = sum_s conj(bra[s]) * psi[merge(s, t)]
///
/// The result lives on Q minus S, in Q's order, and is generally unnormalized.
/// When S == Q the result is a zero-qubit state holding the full inner product.
/// Throws LabelMismatch if some label of S is missing from Q.
StateVector partial_inner(const StateVector& bra, const StateVector& psi);

Complex determinant(const Matrix& m);

/// Thin singular value decomposition m = u * diag(s) * v^dagger of a square
/// matrix, computed by one-sided cyclic Jacobi rotations (each rotation is the
/// Jacobi rotation of the Hermitian Gram matrix m^dagger m). Singular values
/// are sorted in descending order; u and v are unitary.
struct Svd {
  Matrix u;
  std::vector<double> s;
  Matrix v;
};

Svd svd(const Matrix& m);

std::vector<double> singular_values(const Matrix& m);

/// Throws SingularMatrix when the smallest singular value is <= tol::kSingular.
Matrix inverse(const Matrix& m);

bool is_unitary(const Matrix& m, double tol);

/// Unitary U of twice the dimension whose top-left block equals m.
///
/// Acting on |0>_a (x) |state> with the ancilla as the most significant qubit,
/// the ancilla-|0> component of U's output is m * state. Built from the SVD of
/// m as diag(u, v) * [[C, -S], [S, C]] * diag(v^dagger, v^dagger) with C the
/// singular values and S = sqrt(1 - C^2).
///
/// Throws NormExceeded when the largest singular value exceeds 1 + tol::kContraction.
Matrix dilation_unitary(const Matrix& m);

}  // namespace teleop
