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

#include <cstdint>
#include <random>
#include <vector>

#include "teleop/qmath.hpp"

namespace teleop {

/// Seeded source of uniform and standard-normal variates.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Uniforms take the top 53 bits of each draw; normals use the
/// Box-Muller transform (both variates of each pair are used). Nothing here
/// depends on the standard library's distribution classes, so streams are
/// identical across toolchains.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();

  double normal();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// n complex amplitudes with independent standard-normal real and imaginary
/// parts (drawn re, im, re, im, ...), scaled to unit norm.
std::vector<Complex> random_unit_vector(std::uint64_t seed, std::size_t n);

}  // namespace teleop
