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

#include <cmath>
#include <stdexcept>
#include <string>

#include "teleop/errors.hpp"

namespace teleop {

BellIndex::BellIndex(int value) : value_(value) {
  if (value < 1 || value > 4) {
    throw std::out_of_range("BellIndex: " + std::to_string(value) + " not in 1..4");
  }
}

std::array<BellIndex, 4> BellIndex::all() {
  return {BellIndex(1), BellIndex(2), BellIndex(3), BellIndex(4)};
}

StateVector bell_state(BellIndex i, QubitLabel first, QubitLabel second) {
  const double h = std::sqrt(0.5);
  std::vector<Complex> amps(4);
  switch (i.value()) {
    case 1:
      amps = {h, 0.0, 0.0, h};
      break;
    case 2:
      amps = {h, 0.0, 0.0, -h};
      break;
    case 3:
      amps = {0.0, h, h, 0.0};
      break;
    case 4:
      amps = {0.0, h, -h, 0.0};
      break;
  }
  return StateVector({first, second}, std::move(amps));
}

StateVector g_state(BellIndex i, BellIndex j) {
  return kron(bell_state(i, 1, 3), bell_state(j, 2, 4)).reordered({1, 2, 3, 4});
}

PauliFactor pauli_factor(BellIndex i) {
  switch (i.value()) {
    case 1:
      return {i, Matrix{{1.0, 0.0}, {0.0, 1.0}}};
    case 2:
      return {i, Matrix{{1.0, 0.0}, {0.0, -1.0}}};
    case 3:
      return {i, Matrix{{0.0, 1.0}, {1.0, 0.0}}};
    default:
      return {i, Matrix{{0.0, -1.0}, {1.0, 0.0}}};
  }
}

namespace {

std::array<int, 4> compute_sign_table() {
  const StateVector phi1 = bell_state(BellIndex(1));
  std::array<int, 4> signs{};
  for (BellIndex i : BellIndex::all()) {
    const Matrix op = kron(pauli_factor(i).matrix, Matrix::identity(2));
    const StateVector image({0, 1}, matvec(op, phi1.amps()));
    const Complex overlap = inner(bell_state(i), image);
    if (std::abs(std::abs(overlap) - 1.0) > 1e-12 || std::abs(overlap.imag()) > 1e-12) {
      throw InternalError("bell sign table: factor does not map phi1 onto a Bell state");
    }
    signs[i.offset()] = overlap.real() > 0.0 ? 1 : -1;
  }
  return signs;
}

}  // namespace

int bell_sign(BellIndex i) {
  static const std::array<int, 4> table = compute_sign_table();
  return table[i.offset()];
}

}  // namespace teleop
