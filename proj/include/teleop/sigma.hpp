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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "teleop/bellkit.hpp"
#include "teleop/channel.hpp"
#include "teleop/qmath.hpp"
#include "teleop/tolerances.hpp"

namespace teleop {

inline const std::vector<QubitLabel> kInputLabels{1, 2};
inline const std::vector<QubitLabel> kReceiverLabels{5, 6};

/// Transformation operator for Bell outcome (i, j): maps the input amplitudes
/// (x0, x1, x2, x3) of qubits (1,2) to the receiver's state on (5,6), scaled
/// so that |chi>|channel> = 1/4 sum_ij |g_ij> (x) m_ij |chi>.
struct TransformOp {
  BellIndex i;
  BellIndex j;
  Matrix m;
};

enum class Verdict { Perfect, Probabilistic, Impossible };

std::string_view to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::Impossible;
  // Maximal conclusive success probability, s_min^2 (1 for Perfect, 0 for Impossible).
  double success_probability = 0.0;
  double det_magnitude = 0.0;
  std::array<double, 4> singular_values{};
  // Set when a deciding quantity sits within a decade of the tolerance.
  bool borderline = false;
};

struct AnalysisReport {
  std::string channel_name;
  Matrix sigma11;
  Classification classification;
  double completeness_defect = 0.0;
  double pauli_relation_defect = 0.0;
};

/// Column k is 4 <g_ij| (|k>_12 (x) channel), expressed over (5,6).
TransformOp extract_sigma(const Channel& c, BellIndex i, BellIndex j);

/// All sixteen operators, ordered (1,1), (1,2), ..., (4,4).
std::vector<TransformOp> extract_all(const Channel& c);

/// Channel-independent right factors W_1..W_4 with m_ij = m_11 (W_i (x) W_j).
///
/// W_i = s_i F_i^dagger where F_i = pauli_factor(i) and s_i = bell_sign(i);
/// this works out to W_i = F_i for all four indices.
const std::array<Matrix, 4>& pauli_assignment();

/// Max entrywise deviation of sum_ij m_ij^dagger m_ij from 16 I.
double completeness_defect(std::span<const TransformOp> ops);

/// Max over (i,j) of the entrywise deviation |m_ij - m_11 (W_i (x) W_j)|.
/// `ops` must come from extract_all.
double pauli_relation_defect(std::span<const TransformOp> ops);

struct RelationCheck {
  double defect = 0.0;
  bool holds = false;
};

RelationCheck verify_pauli_relation(const Channel& c, double tol = tol::kIdentity);

/// Max amplitude deviation between |chi>_12 (x) channel and the resummed
/// series 1/4 sum_ij |g_ij>_1234 (x) (m_ij chi)_56.
double reconstruction_defect(const Channel& c, std::span<const Complex> chi);

/// Verdict from the singular values of a 4x4 operator.
///
/// Perfect when every singular value is strictly within `tol` of 1;
/// Impossible when the smallest is strictly below `tol`; otherwise
/// Probabilistic with success probability s_min^2. A value landing exactly
/// on the tolerance resolves to Probabilistic.
Classification classify_operator(const Matrix& sigma11, double tol = tol::kClassify);

/// Classification of the channel via its (1,1) operator; the other fifteen
/// are right-unitary multiples of it and share its singular values.
Classification classify(const Channel& c, double tol = tol::kClassify);

AnalysisReport analyze(const Channel& c, double tol = tol::kClassify);

}  // namespace teleop
