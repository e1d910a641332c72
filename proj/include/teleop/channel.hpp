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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "teleop/qmath.hpp"
#include "teleop/tolerances.hpp"

namespace teleop {

/// Qubits 3 and 4 stay with the sender, 5 and 6 with the receiver.
inline const std::vector<QubitLabel> kChannelLabels{3, 4, 5, 6};

/// A normalized four-qubit state over labels (3,4,5,6).
class Channel {
 public:
  /// Throws std::invalid_argument on wrong labels and NormalizationError when
  /// the squared norm is off by more than `norm_tol`.
  explicit Channel(StateVector state, std::string name = {}, double norm_tol = tol::kNormalized);

  /// Amplitudes indexed by the bitstring of qubits (3,4,5,6), qubit 3 most significant.
  static Channel from_amplitudes(std::vector<Complex> amps, std::string name = {},
                                 double norm_tol = tol::kNormalized);

  const StateVector& state() const { return state_; }
  std::span<const Complex> amplitudes() const { return state_.amps(); }
  const std::string& name() const { return name_; }

  /// Copy with a local operator applied to qubits (5,6).
  Channel with_receiver_operator(const Matrix& op, std::string name = {}) const;

 private:
  StateVector state_;
  std::string name_;
};

/// Builtin channel families, with parameters where the family has them.
struct CatalogName {
  enum class Kind { YeoChua, Ghz4, W4, CnotChannel, BellPairs, PartialPair };

  Kind kind = Kind::YeoChua;
  int i = 1;           // bell-pairs only
  int j = 1;           // bell-pairs only
  double theta = 0.0;  // partial-pair only

  /// Accepts `name` or `name:key=value,...`, e.g. `bell-pairs:i=2,j=3` or
  /// `partial-pair:theta=0.5235987755982988`. Throws UnknownName for an
  /// unrecognized family and BadParameter for malformed or out-of-range
  /// parameters (bell indices outside 1..4, theta outside (0, pi/2)).
  static CatalogName parse(std::string_view text);

  std::string to_string() const;
};

struct CatalogEntry {
  std::string_view name;
  std::string_view example;  // resolvable reference
  std::string_view description;
};

std::span<const CatalogEntry> catalog_entries();

Channel catalog(const CatalogName& name);
Channel catalog(std::string_view text);

/// Reads the channel file format: '#' comment lines, then exactly 16 lines of
/// `BBBB RE IM` covering every bitstring of qubits (3,4,5,6) once. Blank lines
/// are ignored. The squared norm must be 1 within tol::kUserNorm unless
/// `normalize` is set, in which case the amplitudes are rescaled.
Channel parse_channel(std::string_view text, bool normalize = false, std::string name = {});

/// Inverse of parse_channel; numbers are written in shortest round-trip form.
std::string serialize_channel(const Channel& c);

/// Seeded random channel; see random_unit_vector.
Channel random_channel(std::uint64_t seed);

}  // namespace teleop
