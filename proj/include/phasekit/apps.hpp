// Copyright 2026 The phasekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "phasekit/core_state.hpp"
#include "phasekit/oracles.hpp"

namespace phasekit {

/// Segment names used by the applications.
inline constexpr std::string_view kControlSegment = "control";

struct DJVerdict {
    /// Probability of each control value after the final inverse transform.
    std::vector<double> distribution;
    double p_zero;
    bool constant;  // p_zero >= 1 - 1e-9
    std::size_t oracle_calls;
    /// Overlap of the returned ancilla (plus reference, if mixed) with its input.
    double ancilla_restoration_fidelity;
};

/// Deutsch-Jozsa with k = 1 on a Boolean table, using whatever 2-dim ancilla
/// state is passed. The uniform superposition is prepared as F_N |0>, which
/// fixes the p_zero row exactly like a Walsh-Hadamard wall would.
DJVerdict deutsch_jozsa(const FunctionTable &f, const StateVector &ancilla);
/// Mixed ancilla: purified and carried along with its reference system.
DJVerdict deutsch_jozsa(const FunctionTable &f, const DensityOperator &ancilla);

struct SearchResult {
    double success_probability;
    std::size_t iterations;
    /// Marginal probability of each control value.
    std::vector<double> probabilities;
    std::size_t solution_count;
    /// U_f applications plus those of the diffusion's own tables.
    std::size_t oracle_calls;
    std::size_t phase_transforms;
    /// U_f applications only.
    std::size_t f_evaluations;
    double ancilla_restoration_fidelity;
    std::string notes;
};

/// Grover iterations S_f then D = W S_0 W^dag with W = F_N, both phase flips
/// done by the uninitialized-ancilla phase transform on `ancilla` (dim 2).
/// D differs from the textbook 2|s><s| - I by a global sign.
SearchResult grover(const FunctionTable &f, std::size_t iterations, const StateVector &ancilla);
/// Same, with random_state(2, 0) as the ancilla.
SearchResult grover(const FunctionTable &f, std::size_t iterations);

struct CKParams {
    double gamma = std::numbers::pi;
    double beta = std::numbers::pi;
    /// Pivot l of W_l = F_N T_{-l}, which maps |l> to the uniform superposition.
    std::size_t pivot = 0;
};

/// One conditional gamma-phase transform S_{f,gamma} followed by the
/// beta-phase diffusion D_beta = W_l S_{l,beta} W_l^dag, starting from W_l|l>.
/// Both phases are m-bit approximate phase transforms on an ancilla of
/// dimension 2^bits (random_state(2^bits, 0) unless given).
SearchResult ck_single_query(const FunctionTable &f, const CKParams &params, unsigned bits,
                             const std::optional<StateVector> &ancilla = std::nullopt);

/// The same circuit with the phases e^{i gamma f(x)} and e^{i beta delta_lx}
/// multiplied in exactly; no ancilla, no oracle. Control marginals only.
std::vector<double> ck_exact_phase_probabilities(const FunctionTable &f, const CKParams &params);

/// m-bit table for x -> frac(angle * g(x) / 2pi), g Boolean.
FunctionTable angle_table(const FunctionTable &boolean_f, double angle, unsigned bits);

}  // namespace phasekit
