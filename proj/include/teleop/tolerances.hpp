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

namespace teleop::tol {

// Algebraic identities such as unitarity and completeness.
inline constexpr double kIdentity = 1e-9;

// Smallest singular value below which a matrix is treated as singular.
inline constexpr double kSingular = 1e-10;

// Off-diagonal Frobenius norm of the Gram matrix at which Jacobi sweeps stop.
inline constexpr double kJacobiStop = 1e-14;

inline constexpr int kJacobiMaxSweeps = 100;

// Default tolerance for the perfect / probabilistic / impossible verdict.
inline constexpr double kClassify = 1e-9;

// States declared normalized must have unit squared norm within this.
inline constexpr double kNormalized = 1e-9;

// Looser check applied to user-supplied amplitudes (files, command line).
inline constexpr double kUserNorm = 1e-6;

// Slack allowed on the operator norm of a matrix passed to the dilation.
inline constexpr double kContraction = 1e-10;

}  // namespace teleop::tol
