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

#include "teleop/bellkit.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace {

using namespace teleop;
using oracle::kInvRt2;

TEST(BellIndex, RangeChecked) {
  EXPECT_THROW(BellIndex(0), std::out_of_range);
  EXPECT_THROW(BellIndex(5), std::out_of_range);
  EXPECT_EQ(BellIndex(3).offset(), 2u);
}

TEST(BellState, Amplitudes) {
  for (int i = 1; i <= 4; ++i) {
    const StateVector b = bell_state(BellIndex(i));
    for (int k = 0; k < 4; ++k) {
      EXPECT_EQ(b[k], oracle::bell(i, k >> 1, k & 1)) << i << " " << k;
    }
  }
  const StateVector b4 = bell_state(BellIndex(4));
  EXPECT_DOUBLE_EQ(b4[1].real(), kInvRt2);
  EXPECT_DOUBLE_EQ(b4[2].real(), -kInvRt2);
}

TEST(BellState, Orthonormal) {
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      const Complex ip = inner(bell_state(BellIndex(i)), bell_state(BellIndex(j)));
      EXPECT_LT(std::abs(ip - (i == j ? 1.0 : 0.0)), 1e-15);
    }
  }
}

TEST(GState, Examples) {
  const StateVector g11 = g_state(BellIndex(1), BellIndex(1));
  EXPECT_EQ(g11.labels(), (std::vector<QubitLabel>{1, 2, 3, 4}));
  for (int k = 0; k < 16; ++k) {
    const bool on = k == 0b0000 || k == 0b0101 || k == 0b1010 || k == 0b1111;
    EXPECT_NEAR(g11[k].real(), on ? 0.5 : 0.0, 1e-15) << k;
  }
  const StateVector g41 = g_state(BellIndex(4), BellIndex(1));
  for (int k = 0; k < 16; ++k) {
    double expected = 0.0;
    if (k == 0b0010 || k == 0b0111) expected = 0.5;
    if (k == 0b1000 || k == 0b1101) expected = -0.5;
    EXPECT_NEAR(g41[k].real(), expected, 1e-15) << k;
  }
}

TEST(GState, GramMatrixIsIdentity) {
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) {
      const StateVector x = g_state(BellIndex(a / 4 + 1), BellIndex(a % 4 + 1));
      const StateVector y = g_state(BellIndex(b / 4 + 1), BellIndex(b % 4 + 1));
      EXPECT_LT(std::abs(inner(x, y) - (a == b ? 1.0 : 0.0)), 1e-12);
    }
  }
}

TEST(PauliFactor, Matrices) {
  const Matrix expected[4] = {Matrix{{1, 0}, {0, 1}}, Matrix{{1, 0}, {0, -1}}, Matrix{{0, 1}, {1, 0}},
                              Matrix{{0, -1}, {1, 0}}};
  for (int i = 1; i <= 4; ++i) {
    const PauliFactor f = pauli_factor(BellIndex(i));
    EXPECT_EQ(f.index.value(), i);
    EXPECT_EQ(f.matrix, expected[i - 1]);
    const Matrix sq = oracle::product(f.matrix, f.matrix);
    const double sign = (i == 4) ? -1.0 : 1.0;
    EXPECT_EQ(sq, Complex(sign) * Matrix::identity(2));
    EXPECT_LT(oracle::deviation_from_identity(oracle::product(oracle::adjoint(f.matrix), f.matrix)), 1e-15);
    for (const Complex& z : f.matrix.entries()) EXPECT_EQ(z.imag(), 0.0);
  }
}

TEST(PauliFactor, SignTable) {
  // (F_i (x) I) phi^1 computed by hand over the four basis amplitudes.
  const std::array<int, 4> expected{1, 1, 1, -1};
  for (int i = 1; i <= 4; ++i) {
    const Matrix f = pauli_factor(BellIndex(i)).matrix;
    std::array<Complex, 4> out{};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int a2 = 0; a2 < 2; ++a2) out[2 * a + b] += f(a, a2) * oracle::bell(1, a2, b);
    int sign = 0;
    for (int k = 0; k < 4; ++k) {
      const Complex target = oracle::bell(i, k >> 1, k & 1);
      if (std::abs(target) > 0) sign = std::abs(out[k] - target) < 1e-15 ? 1 : -1;
    }
    EXPECT_EQ(sign, expected[i - 1]);
    EXPECT_EQ(bell_sign(BellIndex(i)), expected[i - 1]);
  }
}

}  // namespace
