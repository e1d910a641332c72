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

#include "teleop/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "teleop/errors.hpp"
#include "teleop/tolerances.hpp"

namespace teleop {

namespace {

void require_finite(std::span<const Complex> values, const char* what) {
  for (const Complex& z : values) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument(std::string(what) + ": non-finite entry");
    }
  }
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("Matrix: entry count does not match shape");
  }
  require_finite(entries_, "Matrix");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("Matrix: ragged initializer");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  require_finite(entries_, "Matrix");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    m(k, k) = 1.0;
  }
  return m;
}

Matrix Matrix::diagonal(std::span<const Complex> values) {
  Matrix m(values.size(), values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    m(k, k) = values[k];
  }
  return m;
}

std::vector<Complex> Matrix::column(std::size_t c) const {
  std::vector<Complex> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r] = (*this)(r, c);
  }
  return out;
}

void Matrix::set_column(std::size_t c, std::span<const Complex> values) {
  if (values.size() != rows_) {
    throw std::invalid_argument("Matrix::set_column: length mismatch");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    (*this)(r, c) = values[r];
  }
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw std::invalid_argument("Matrix product: inner dimensions differ");
  }
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw std::invalid_argument("Matrix sum: shapes differ");
  }
  Matrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) {
    out.entries_[k] += b.entries_[k];
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (Complex{-1.0} * b); }

Matrix operator*(Complex s, const Matrix& m) {
  Matrix out = m;
  for (Complex& z : out.entries_) {
    z *= s;
  }
  return out;
}

std::vector<Complex> matvec(const Matrix& m, std::span<const Complex> v) {
  if (m.cols() != v.size()) {
    throw std::invalid_argument("apply: dimension mismatch");
  }
  std::vector<Complex> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Complex acc{};
    for (std::size_t c = 0; c < m.cols(); ++c) {
      acc += m(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shapes differ");
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return worst;
}

double norm(std::span<const Complex> v) {
  double acc = 0.0;
  for (const Complex& z : v) {
    acc += std::norm(z);
  }
  return std::sqrt(acc);
}

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: length mismatch");
  }
  Complex acc{};
  for (std::size_t k = 0; k < a.size(); ++k) {
    acc += std::conj(a[k]) * b[k];
  }
  return acc;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(std::vector<QubitLabel> labels, std::vector<Complex> amps)
    : labels_(std::move(labels)), amps_(std::move(amps)) {
  if (labels_.size() > 16) {
    throw std::invalid_argument("StateVector: too many qubits");
  }
  if (amps_.size() != (std::size_t{1} << labels_.size())) {
    throw std::invalid_argument("StateVector: amplitude count must be 2^(label count)");
  }
  std::unordered_set<QubitLabel> seen;
  for (QubitLabel l : labels_) {
    if (!seen.insert(l).second) {
      throw std::invalid_argument("StateVector: duplicate label " + std::to_string(l));
    }
  }
  require_finite(amps_, "StateVector");
}

StateVector StateVector::basis(std::vector<QubitLabel> labels, std::size_t index) {
  std::vector<Complex> amps(std::size_t{1} << labels.size());
  if (index >= amps.size()) {
    throw std::out_of_range("StateVector::basis: index out of range");
  }
  amps[index] = 1.0;
  return StateVector(std::move(labels), std::move(amps));
}

double StateVector::norm() const { return teleop::norm(amps_); }

bool StateVector::is_normalized(double tol) const {
  double sq = 0.0;
  for (const Complex& z : amps_) sq += std::norm(z);
  return std::abs(sq - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
  const double n = norm();
  if (n == 0.0) {
    throw std::invalid_argument("StateVector::normalized: zero vector");
  }
  return scaled(1.0 / n);
}

StateVector StateVector::scaled(Complex s) const {
  std::vector<Complex> amps = amps_;
  for (Complex& z : amps) z *= s;
  return StateVector(labels_, std::move(amps));
}

int StateVector::position(QubitLabel label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

StateVector StateVector::reordered(const std::vector<QubitLabel>& labels) const {
  const std::size_t n = labels_.size();
  if (labels.size() != n) {
    throw LabelMismatch("reordered: label count differs");
  }
  // src_pos[k] = position in this state of the k-th new label.
  std::vector<std::size_t> src_pos(n);
  for (std::size_t k = 0; k < n; ++k) {
    const int p = position(labels[k]);
    if (p < 0) {
      throw LabelMismatch("reordered: label " + std::to_string(labels[k]) + " not present");
    }
    src_pos[k] = static_cast<std::size_t>(p);
  }
  std::vector<Complex> amps(amps_.size());
  for (std::size_t dst = 0; dst < amps.size(); ++dst) {
    std::size_t src = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t bit = (dst >> (n - 1 - k)) & 1u;
      src |= bit << (n - 1 - src_pos[k]);
    }
    amps[dst] = amps_[src];
  }
  return StateVector(labels, std::move(amps));
}

// ---------------------------------------------------------------------------
// Products

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t p = b.rows();
  const std::size_t q = b.cols();
  Matrix out(a.rows() * p, a.cols() * q);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t s = 0; s < q; ++s) {
          out(i * p + r, j * q + s) = aij * b(r, s);
        }
      }
    }
  }
  return out;
}

StateVector kron(const StateVector& a, const StateVector& b) {
  std::vector<QubitLabel> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::vector<Complex> amps;
  amps.reserve(a.size() * b.size());
  for (const Complex& x : a.amps()) {
    for (const Complex& y : b.amps()) {
      amps.push_back(x * y);
    }
  }
  return StateVector(std::move(labels), std::move(amps));
}

Complex inner(const StateVector& bra, const StateVector& ket) {
  if (bra.num_qubits() != ket.num_qubits()) {
    throw LabelMismatch("inner: label sets differ");
  }
  const StateVector aligned = ket.reordered(bra.labels());
  return dot(bra.amps(), aligned.amps());
}

StateVector partial_inner(const StateVector& bra, const StateVector& psi) {
  const std::size_t n = psi.num_qubits();
  const std::size_t k = bra.num_qubits();

  // Bit shift within psi's index for each bra qubit, MSB first.
  std::vector<std::size_t> bra_shift(k);
  std::vector<bool> contracted(n, false);
  for (std::size_t a = 0; a < k; ++a) {
    const int p = psi.position(bra.labels()[a]);
    if (p < 0) {
      throw LabelMismatch("partial_inner: label " + std::to_string(bra.labels()[a]) +
                          " not present in the ket");
    }
    contracted[static_cast<std::size_t>(p)] = true;
    bra_shift[a] = n - 1 - static_cast<std::size_t>(p);
  }

  std::vector<QubitLabel> rest_labels;
  std::vector<std::size_t> rest_shift;
  for (std::size_t p = 0; p < n; ++p) {
    if (!contracted[p]) {
      rest_labels.push_back(psi.labels()[p]);
      rest_shift.push_back(n - 1 - p);
    }
  }
  const std::size_t m = rest_labels.size();

  // Spread bra and remainder indices into psi's index space once.
  std::vector<std::size_t> bra_bits(bra.size(), 0);
  for (std::size_t s = 0; s < bra.size(); ++s) {
    for (std::size_t a = 0; a < k; ++a) {
      bra_bits[s] |= ((s >> (k - 1 - a)) & 1u) << bra_shift[a];
    }
  }

  std::vector<Complex> out(std::size_t{1} << m);
  for (std::size_t t = 0; t < out.size(); ++t) {
    std::size_t t_bits = 0;
    for (std::size_t r = 0; r < m; ++r) {
      t_bits |= ((t >> (m - 1 - r)) & 1u) << rest_shift[r];
    }
    Complex acc{};
    for (std::size_t s = 0; s < bra.size(); ++s) {
      const Complex b = bra[s];
      if (b == Complex{}) continue;
      acc += std::conj(b) * psi[bra_bits[s] | t_bits];
    }
    out[t] = acc;
  }
  return StateVector(std::move(rest_labels), std::move(out));
}

// ---------------------------------------------------------------------------
// Analysis

Complex determinant(const Matrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("determinant: matrix must be square");
  }
  const std::size_t n = m.rows();
  switch (n) {
    case 0:
      return 1.0;
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    case 3:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    default:
      break;
  }

  // LU with partial pivoting.
  Matrix lu = m;
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    }
    if (lu(pivot, col) == Complex{}) {
      return 0.0;
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(pivot, c), lu(col, c));
      det = -det;
    }
    det *= lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = lu(r, col) / lu(col, col);
      for (std::size_t c = col; c < n; ++c) {
        lu(r, c) -= f * lu(col, c);
      }
    }
  }
  return det;
}

Svd svd(const Matrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("svd: matrix must be square");
  }
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix v = Matrix::identity(n);

  double fro2 = 0.0;
  for (const Complex& z : m.entries()) fro2 += std::norm(z);
  const double stop = tol::kJacobiStop * std::max(1.0, fro2);
  constexpr double eps = std::numeric_limits<double>::epsilon();

  auto gram = [&](std::size_t p, std::size_t q) {
    Complex g{};
    for (std::size_t r = 0; r < n; ++r) g += std::conj(a(r, p)) * a(r, q);
    return g;
  };
  auto sq_norm = [&](std::size_t p) {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) s += std::norm(a(r, p));
    return s;
  };

  bool converged = false;
  for (int sweep = 0; sweep < tol::kJacobiMaxSweeps; ++sweep) {
    double off2 = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off2 += 2.0 * std::norm(gram(p, q));
    }
    if (std::sqrt(off2) < stop) {
      converged = true;
      break;
    }

    bool rotated = false;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = sq_norm(p);
        const double beta = sq_norm(q);
        const Complex gamma = gram(p, q);
        const double g = std::abs(gamma);
        if (g == 0.0 || g <= eps * std::sqrt(alpha * beta)) continue;

        const Complex phase = std::conj(gamma / g);
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (Matrix* target : {&a, &v}) {
          Matrix& x = *target;
          for (std::size_t r = 0; r < n; ++r) {
            const Complex xp = x(r, p);
            const Complex xq = x(r, q) * phase;
            x(r, p) = c * xp - s * xq;
            x(r, q) = s * xp + c * xq;
          }
        }
        rotated = true;
      }
    }
    if (!rotated) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw InternalError("svd: Jacobi iteration did not converge");
  }

  std::vector<double> sigma(n);
  for (std::size_t p = 0; p < n; ++p) sigma[p] = std::sqrt(sq_norm(p));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  Svd out{Matrix(n, n), std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.s[k] = sigma[order[k]];
    out.v.set_column(k, v.column(order[k]));
  }

  // Left vectors: normalized columns of m v, re-orthonormalized in descending
  // order; null directions are completed from the standard basis.
  std::vector<std::vector<Complex>> basis;
  auto orthogonalize = [&](std::vector<Complex> w) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const Complex proj = dot(b, w);
        for (std::size_t r = 0; r < n; ++r) w[r] -= proj * b[r];
      }
    }
    return w;
  };
  const double tiny = std::numeric_limits<double>::min() / eps;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Complex> w;
    if (out.s[k] > tiny) {
      w = a.column(order[k]);
      for (Complex& z : w) z /= out.s[k];
      w = orthogonalize(std::move(w));
    }
    if (w.empty() || norm(w) < 0.5) {
      double best = -1.0;
      for (std::size_t e = 0; e < n; ++e) {
        std::vector<Complex> cand(n);
        cand[e] = 1.0;
        cand = orthogonalize(std::move(cand));
        const double nc = norm(cand);
        if (nc > best) {
          best = nc;
          w = std::move(cand);
        }
      }
    }
    const double nw = norm(w);
    for (Complex& z : w) z /= nw;
    out.u.set_column(k, w);
    basis.push_back(std::move(w));
  }
  return out;
}

std::vector<double> singular_values(const Matrix& m) { return svd(m).s; }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("inverse: matrix must be square");
  }
  const std::vector<double> s = singular_values(m);
  if (!s.empty() && s.back() <= tol::kSingular) {
    throw SingularMatrix("inverse: smallest singular value " + std::to_string(s.back()) +
                         " at or below the singularity threshold");
  }

  // Gauss-Jordan with partial pivoting.
  const std::size_t n = m.rows();
  Matrix work = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(work(r, col)) > std::abs(work(pivot, col))) pivot = r;
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const Complex d = work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) /= d;
      inv(col, c) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = work(r, col);
      if (f == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= f * work(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

bool is_unitary(const Matrix& m, double tol) {
  if (!m.is_square()) {
    throw std::invalid_argument("is_unitary: matrix must be square");
  }
  return max_abs_diff(m.adjoint() * m, Matrix::identity(m.rows())) <= tol;
}

Matrix dilation_unitary(const Matrix& m) {
  if (!m.is_square() || !is_power_of_two(m.rows())) {
    throw std::invalid_argument("dilation_unitary: expected a square matrix of power-of-two size");
  }
  const std::size_t n = m.rows();
  const Svd d = svd(m);
  if (d.s.front() > 1.0 + tol::kContraction) {
    throw NormExceeded("dilation_unitary: operator norm " + std::to_string(d.s.front()) + " exceeds 1");
  }

  std::vector<Complex> cosines(n);
  std::vector<Complex> sines(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double c = std::min(d.s[k], 1.0);
    cosines[k] = c;
    sines[k] = std::sqrt(std::max(0.0, 1.0 - c * c));
  }
  const Matrix vh = d.v.adjoint();
  const Matrix s_block = Matrix::diagonal(sines) * vh;
  const Matrix c_block = Matrix::diagonal(cosines) * vh;
  const Matrix upper_right = Complex{-1.0} * (d.u * s_block);
  const Matrix lower_left = d.v * s_block;
  const Matrix lower_right = d.v * c_block;

  Matrix out(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out(r, c) = m(r, c);
      out(r, c + n) = upper_right(r, c);
      out(r + n, c) = lower_left(r, c);
      out(r + n, c + n) = lower_right(r, c);
    }
  }
  return out;
}

}  // namespace teleop
