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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "teleop/bellkit.hpp"
#include "teleop/errors.hpp"

namespace {

using namespace teleop;
using oracle::kInvRt2;
using oracle::kRt2;

double vec_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

TEST(Matrix, RejectsNonFiniteEntries) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(Matrix(1, 1, {Complex(nan, 0)}), std::invalid_argument);
  EXPECT_THROW(Matrix(2, 2, {1, 2, 3}), std::invalid_argument);
}

TEST(StateVector, ValidatesShapeAndLabels) {
  EXPECT_THROW(StateVector({1, 2}, {1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(StateVector({1, 1}, {1, 0, 0, 0}), std::invalid_argument);
  const StateVector v({3, 7}, {0, 1, 0, 0});
  EXPECT_EQ(v.num_qubits(), 2u);
  EXPECT_EQ(v.position(7), 1);
}

TEST(Kron, MatrixExamples) {
  const Matrix id2 = Matrix::identity(2);
  EXPECT_EQ(kron(id2, id2), Matrix::identity(4));
  const Matrix x{{0, 1}, {1, 0}};
  const Matrix z{{1, 0}, {0, -1}};
  const Matrix expected{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}};
  EXPECT_EQ(kron(z, x), expected);
}

TEST(Kron, StateLabelsConcatenate) {
  const StateVector a({1}, {0, 1});
  const StateVector b({5, 6}, {0.5, 0.5, 0.5, 0.5});
  const StateVector ab = kron(a, b);
  EXPECT_EQ(ab.labels(), (std::vector<QubitLabel>{1, 5, 6}));
  EXPECT_DOUBLE_EQ(ab[4].real(), 0.5);
  EXPECT_DOUBLE_EQ(ab[3].real(), 0.0);
  EXPECT_THROW(kron(a, StateVector({1}, {1, 0})), std::invalid_argument);
}

TEST(Kron, MixedProductProperty) {
  oracle::Gen gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix a = gen.matrix(2, 2), b = gen.matrix(2, 2), c = gen.matrix(2, 2), d = gen.matrix(2, 2);
    const Matrix lhs = oracle::product(kron(a, b), kron(c, d));
    const Matrix rhs = kron(oracle::product(a, c), oracle::product(b, d));
    EXPECT_LT(oracle::max_diff(lhs, rhs), 1e-12);
  }
}

TEST(PartialInner, BasisProjection) {
  const StateVector out = partial_inner(StateVector({1}, {1, 0}), StateVector({1, 2}, {0, 1, 0, 0}));
  ASSERT_EQ(out.labels(), (std::vector<QubitLabel>{2}));
  EXPECT_EQ(out[0], Complex(0.0));
  EXPECT_EQ(out[1], Complex(1.0));
}

TEST(PartialInner, SingleOverlappingBellComponent) {
  // phi^1 on (1,3) against |0>_1 |0>_3 |v>_5
  const std::vector<Complex> v{0.6, Complex(0, 0.8)};
  const StateVector psi = kron(StateVector({1, 3}, {1, 0, 0, 0}), StateVector({5}, v));
  const StateVector out = partial_inner(bell_state(BellIndex(1), 1, 3), psi);
  ASSERT_EQ(out.labels(), (std::vector<QubitLabel>{5}));
  EXPECT_LT(std::abs(out[0] - kInvRt2 * v[0]), 1e-15);
  EXPECT_LT(std::abs(out[1] - kInvRt2 * v[1]), 1e-15);
}

TEST(PartialInner, CnotChannelBranch) {
  std::vector<Complex> ch(16);
  for (int k : {0b0000, 0b0101, 0b1011, 0b1110}) ch[k] = 0.5;
  const StateVector psi = kron(StateVector::basis({1, 2}, 0), StateVector({3, 4, 5, 6}, ch));
  const StateVector bra = kron(bell_state(BellIndex(1), 1, 3), bell_state(BellIndex(1), 2, 4));
  const StateVector out = partial_inner(bra, psi);
  ASSERT_EQ(out.labels(), (std::vector<QubitLabel>{5, 6}));
  EXPECT_LT(vec_diff(out.amps(), std::vector<Complex>{0.25, 0, 0, 0}), 1e-15);
}

TEST(PartialInner, MissingLabelThrows) {
  const StateVector psi({1, 2}, {1, 0, 0, 0});
  EXPECT_THROW(partial_inner(StateVector({3}, {1, 0}), psi), LabelMismatch);
}

TEST(PartialInner, FullContractionEqualsInnerProduct) {
  oracle::Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const StateVector a({1, 2, 3}, gen.unit_vector(8));
    const StateVector b({1, 2, 3}, gen.unit_vector(8));
    const StateVector out = partial_inner(a, b);
    ASSERT_EQ(out.size(), 1u);
    Complex expected = 0.0;
    for (std::size_t k = 0; k < 8; ++k) expected += std::conj(a[k]) * b[k];
    EXPECT_LT(std::abs(out[0] - expected), 1e-12);
    // label order of the bra must not matter
    EXPECT_LT(std::abs(partial_inner(a.reordered({3, 1, 2}), b)[0] - expected), 1e-12);
  }
}

TEST(Determinant, Examples) {
  EXPECT_LT(std::abs(determinant(Matrix::identity(4)) - 1.0), 1e-15);
  EXPECT_LT(std::abs(determinant(oracle::ghz_operator())), 1e-15);
  const Complex d = determinant(oracle::yeo_chua_quoted());
  EXPECT_LT(std::abs(d - oracle::det_cofactor(oracle::yeo_chua_quoted())), 1e-12);
  EXPECT_NEAR(std::abs(d), 1.0, 1e-12);
}

TEST(Determinant, MatchesCofactorExpansion) {
  oracle::Gen gen(3);
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 8u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix m = gen.matrix(n, n);
      const Complex expected = oracle::det_cofactor(m);
      EXPECT_LT(std::abs(determinant(m) - expected), 1e-9 * std::max(1.0, std::abs(expected))) << n;
    }
  }
}

TEST(SingularValues, Examples) {
  const std::vector<double> u = singular_values(oracle::cnot());
  for (double s : u) EXPECT_NEAR(s, 1.0, 1e-14);
  const std::vector<double> g = singular_values(oracle::ghz_operator());
  const std::vector<double> w = singular_values(oracle::w_operator());
  for (const auto& s : {g, w}) {
    EXPECT_NEAR(s[0], kRt2, 1e-14);
    EXPECT_NEAR(s[1], kRt2, 1e-14);
    EXPECT_LE(s[2], 1e-14);
    EXPECT_LE(s[3], 1e-14);
  }
}

TEST(SingularValues, ProductEqualsAbsDeterminant) {
  oracle::Gen gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix m = gen.matrix(4, 4);
    const std::vector<double> s = singular_values(m);
    ASSERT_TRUE(std::is_sorted(s.rbegin(), s.rend()));
    const double prod = s[0] * s[1] * s[2] * s[3];
    EXPECT_NEAR(prod, std::abs(oracle::det_cofactor(m)), 1e-8 * std::max(1.0, prod));
  }
}

TEST(Svd, Reconstructs) {
  oracle::Gen gen(19);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m = gen.matrix(4, 4);
    if (trial % 5 == 0) m.set_column(3, m.column(0));  // rank deficient
    const Svd d = svd(m);
    std::vector<Complex> s(d.s.begin(), d.s.end());
    const Matrix back = oracle::product(oracle::product(d.u, Matrix::diagonal(s)), oracle::adjoint(d.v));
    EXPECT_LT(oracle::max_diff(back, m), 1e-11);
    EXPECT_LT(oracle::deviation_from_identity(oracle::product(oracle::adjoint(d.u), d.u)), 1e-12);
    EXPECT_LT(oracle::deviation_from_identity(oracle::product(oracle::adjoint(d.v), d.v)), 1e-12);
  }
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(Matrix::identity(4)), Matrix::identity(4));
  EXPECT_LT(oracle::max_diff(inverse(oracle::cnot()), oracle::cnot()), 1e-15);
  const Matrix y = oracle::yeo_chua_quoted();
  EXPECT_LT(oracle::max_diff(inverse(y), oracle::adjoint(y)), 1e-14);
  EXPECT_THROW(inverse(oracle::ghz_operator()), SingularMatrix);
  EXPECT_THROW(inverse(oracle::w_operator()), SingularMatrix);
}

TEST(Inverse, ProductIsIdentity) {
  oracle::Gen gen(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix m = gen.matrix(4, 4);
    const Matrix inv = inverse(m);
    EXPECT_LT(oracle::deviation_from_identity(oracle::product(m, inv)), 1e-9);
    EXPECT_LT(oracle::deviation_from_identity(oracle::product(inv, m)), 1e-9);
  }
}

TEST(IsUnitary, Examples) {
  EXPECT_TRUE(is_unitary(oracle::yeo_chua_quoted(), 1e-10));
  EXPECT_TRUE(is_unitary(oracle::cnot(), 1e-10));
  EXPECT_FALSE(is_unitary(oracle::ghz_operator(), 1e-10));
  EXPECT_FALSE(is_unitary(Complex(0.999) * Matrix::identity(4), 1e-10));
  EXPECT_THROW(is_unitary(Matrix(2, 3), 1e-10), std::invalid_argument);
}

TEST(Dilation, Examples) {
  const Matrix u0 = dilation_unitary(Matrix::identity(4));
  EXPECT_TRUE(is_unitary(u0, 1e-12));
  const Matrix z = dilation_unitary(Matrix(4, 4));
  EXPECT_TRUE(is_unitary(z, 1e-12));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(z(r, c), Complex(0.0));
  EXPECT_THROW(dilation_unitary(Complex(1.01) * Matrix::identity(4)), NormExceeded);
  EXPECT_THROW(dilation_unitary(Matrix(3, 3)), std::invalid_argument);
}

TEST(Dilation, RandomContractions) {
  oracle::Gen gen(29);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix m = gen.matrix(4, 4);
    const double s_max = singular_values(m).front();
    m = Complex(gen.uniform(0.05, 1.0) / s_max) * m;
    if (trial % 10 == 0) m = Complex(1.0 / s_max) * gen.matrix(4, 4);  // may exceed 1 slightly
    if (singular_values(m).front() > 1.0 + 1e-10) continue;
    const Matrix u = dilation_unitary(m);
    ASSERT_EQ(u.rows(), 8u);
    EXPECT_LT(oracle::deviation_from_identity(oracle::product(oracle::adjoint(u), u)), 1e-9);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(u(r, c), m(r, c));
  }
}

}  // namespace
