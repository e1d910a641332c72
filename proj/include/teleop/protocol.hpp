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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "teleop/channel.hpp"
#include "teleop/sigma.hpp"

namespace teleop {

using Amplitudes4 = std::array<Complex, 4>;

/// Unknown two-qubit state x0|00> + x1|01> + x2|10> + x3|11> on qubits (1,2).
class InputState {
 public:
  /// Throws NormalizationError if the squared norm is off by more than `norm_tol`.
  explicit InputState(const Amplitudes4& amps, double norm_tol = tol::kNormalized);

  /// Seeded random state; same generator as random_channel, four amplitudes.
  static InputState random(std::uint64_t seed);

  const Amplitudes4& amps() const { return amps_; }

 private:
  Amplitudes4 amps_;
};

enum class CorrectionMode { Inverse, Filter };

enum class CorrectionKind { Inverse, Filter, Skipped };

std::string_view to_string(CorrectionKind k);

struct CorrectionResult {
  // Empty when the correction cannot succeed (zero success probability).
  std::optional<Amplitudes4> state;
  double success_probability = 0.0;
};

struct OutcomeRecord {
  BellIndex i;
  BellIndex j;
  double probability = 0.0;
  Amplitudes4 bob_state_raw{};  // normalized; all zero for a zero-probability branch
  CorrectionKind correction = CorrectionKind::Skipped;
  std::optional<Amplitudes4> bob_state_corrected;
  double fidelity = 0.0;  // 0 when skipped
  double filter_success_probability = 0.0;
  Verdict verdict = Verdict::Impossible;
};

struct RunStats {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::array<std::uint64_t, 16> outcome_counts{};
  std::uint64_t successes = 0;
  double empirical_success_rate = 0.0;
  double mean_fidelity_on_success = 0.0;  // 0 when there were no successes
};

/// |chi>_12 (x) channel over labels (1,2,3,4,5,6).
StateVector compose_system(const InputState& chi, const Channel& c);

/// Unnormalized receiver state <g_ij| psi over (5,6), obtained by direct
/// projection of the six-qubit state.
Amplitudes4 project_branch(const StateVector& psi, BellIndex i, BellIndex j);

/// p(i,j) = |m_ij chi|^2 / 16, ordered (1,1), (1,2), ..., (4,4).
///
/// Computed both from the transformation operators and from the squared norm
/// of each direct projection; throws InternalError if the two routes differ by
/// more than 1e-10.
std::array<double, 16> outcome_probabilities(const InputState& chi, const Channel& c);

/// Receiver's recovery step for one branch.
///
/// Inverse applies m^-1 to the raw state and requires m to be unitary
/// (NotUnitary otherwise). Filter builds M = s_min m^-1, embeds it with
/// dilation_unitary on |0>_a (x) raw (ancilla most significant), and keeps the
/// ancilla-|0> branch; its probability is |M raw|^2. Filter requires
/// s_min > tol::kSingular (SingularOperator otherwise).
CorrectionResult bob_correction(const TransformOp& op, std::span<const Complex, 4> bob_state_raw,
                                CorrectionMode mode);

/// Enumerates all sixteen measurement branches. Perfect channels are corrected
/// with the inverse, Probabilistic ones with the filter, Impossible ones are
/// left uncorrected.
std::vector<OutcomeRecord> run_deterministic(const InputState& chi, const Channel& c,
                                             double tol = tol::kClassify);

/// Monte Carlo replication: outcomes drawn by inverse CDF over the
/// probability table, then (filter mode only) an ancilla draw that succeeds
/// with the branch's filter probability. A failed ancilla ends the trial.
/// Requires trials >= 1.
RunStats run_sampled(const InputState& chi, const Channel& c, std::uint64_t seed, std::uint64_t trials,
                     double tol = tol::kClassify);

/// Max over the sixteen branches of the distance between the normalized direct
/// projection and the normalized m_ij chi, after removing the relative global
/// phase. Zero-norm branches compare the unnormalized vectors instead.
double oracle_equivalence_defect(const InputState& chi, const Channel& c);

/// |<a|b>|^2, clamped to [0, 1].
double fidelity(std::span<const Complex, 4> a, std::span<const Complex, 4> b);

}  // namespace teleop
