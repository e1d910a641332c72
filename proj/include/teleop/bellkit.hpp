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

#include <array>

#include "teleop/qmath.hpp"

namespace teleop {

/// Bell-state index 1..4: phi+, phi-, psi+, psi-.
class BellIndex {
 public:
  explicit BellIndex(int value);

  int value() const { return value_; }
  std::size_t offset() const { return static_cast<std::size_t>(value_ - 1); }

  static std::array<BellIndex, 4> all();

  friend bool operator==(BellIndex, BellIndex) = default;

 private:
  int value_;
};

struct PauliFactor {
  BellIndex index;
  Matrix matrix;
};

/// (|00> + |11>)/sqrt2, (|00> - |11>)/sqrt2, (|01> + |10>)/sqrt2, (|01> - |10>)/sqrt2
/// over (first, second).
StateVector bell_state(BellIndex i, QubitLabel first = 0, QubitLabel second = 1);

/// Product phi^i on (1,3) times phi^j on (2,4), expressed over labels (1,2,3,4).
StateVector g_state(BellIndex i, BellIndex j);

/// I, sigma_z, sigma_x, -i sigma_y for i = 1..4.
PauliFactor pauli_factor(BellIndex i);

/// Sign s_i with (F_i (x) I) phi^1 = s_i phi^i, F_i = pauli_factor(i).
/// Computed from the state vectors on first use.
int bell_sign(BellIndex i);

}  // namespace teleop
