# Copyright 2026 The teleop Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Transformation-operator analysis of four-qubit teleportation channels."""

from ._teleop import (
    Channel,
    Classification,
    OutcomeRecord,
    RunStats,
    Verdict,
    __version__,
    analyze,
    catalog,
    classify,
    determinant,
    dilation_unitary,
    extract_all,
    extract_sigma,
    fidelity,
    g_state,
    bell_state,
    inverse,
    is_unitary,
    outcome_probabilities,
    parse_channel,
    random_channel,
    random_state,
    run_deterministic,
    run_sampled,
    serialize_channel,
    singular_values,
    verify_pauli_relation,
)

__all__ = [
    "Channel",
    "Classification",
    "OutcomeRecord",
    "RunStats",
    "Verdict",
    "__version__",
    "analyze",
    "bell_state",
    "catalog",
    "classify",
    "determinant",
    "dilation_unitary",
    "extract_all",
    "extract_sigma",
    "fidelity",
    "g_state",
    "inverse",
    "is_unitary",
    "outcome_probabilities",
    "parse_channel",
    "random_channel",
    "random_state",
    "run_deterministic",
    "run_sampled",
    "serialize_channel",
    "singular_values",
    "verify_pauli_relation",
]
