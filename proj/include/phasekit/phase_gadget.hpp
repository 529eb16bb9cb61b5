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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phasekit/core_state.hpp"
#include "phasekit/oracles.hpp"

namespace phasekit {

/// The five four-step circuits whose net effect on one segment is the global
/// phase omega_M^{kz}. With [A, B] = A B A^-1 B^-1:
///   CommA  [R^dag, T^dag]  (the reference ordering)
///   CommB  [T, R^dag]
///   CommC  [R, T]
///   CommD  [T^dag, R]
///   SForm  S T S T
/// where R = R_{k,I}, T = T_z and S = S_{k,I}.
enum class GadgetVariant { CommA, CommB, CommC, CommD, SForm };

inline constexpr std::array<GadgetVariant, 5> kAllGadgetVariants = {
    GadgetVariant::CommA, GadgetVariant::CommB, GadgetVariant::CommC, GadgetVariant::CommD, GadgetVariant::SForm};

/// "comm-a", "comm-b", "comm-c", "comm-d", "sform".
std::string_view to_string(GadgetVariant variant);
std::optional<GadgetVariant> parse_gadget_variant(std::string_view name);

class GadgetPlan {
  public:
    /// k is reduced into [0, M).
    GadgetPlan(GadgetVariant variant, std::int64_t k, std::size_t modulus);

    GadgetVariant variant() const { return variant_; }
    std::size_t k() const { return k_; }
    std::size_t modulus() const { return modulus_; }

    /// Same variant with k -> -k; realizes the inverse phase.
    GadgetPlan inverse() const;

  private:
    GadgetVariant variant_;
    std::size_t k_;
    std::size_t modulus_;
};

/// One step of a gadget circuit. The translation steps are the only ones that
/// depend on z (or, inside the phase transform, on f).
enum class GadgetStep {
    TranslateForward,     // T_z, or U_f
    TranslateBackward,    // T_z^dag, or U_f^dag
    PhaseByValue,         // R_{k,I}
    PhaseByValueInverse,  // R_{k,I}^dag = R_{-k,I}
    ReflectPhase,         // S_{k,I}
};

/// Steps in application order (the first element acts first).
std::array<GadgetStep, 4> gadget_steps(GadgetVariant variant);

/// Applies J_{k,z} to `segment` step by step on the live state.
StateVector j_gadget(const StateVector &state, std::string_view segment, const GadgetPlan &plan, std::int64_t z);

/// Dense product of the four factor matrices. Intended for M <= 64.
Matrix j_gadget_matrix(const GadgetPlan &plan, std::int64_t z);

struct PhaseTransformResult {
    StateVector state;
    /// Applications of U_f or U_f^dag made by this call.
    std::size_t oracle_calls;
};

/// R_{k,f} on `control` using `ancilla` in whatever state it is in. Any other
/// segment is left untouched, so the ancilla may be entangled with them.
PhaseTransformResult phase_transform(const StateVector &state, std::string_view control, std::string_view ancilla,
                                     const FunctionTable &f, const GadgetPlan &plan);

/// Reference R_{k,f}: multiplies the amplitude at each control value x by
/// omega_M^{k f(x)} directly, with no ancilla. Used to check the pipeline.
StateVector apply_phase_table(const StateVector &state, std::string_view control, const FunctionTable &f,
                              std::int64_t k);

struct MixedTransformReport {
    /// max |out - (R_{k,f}|Phi>) (x) |Psi^AR>|
    double joint_deviation;
    /// max entrywise |Tr_{control,reference}(out) - rho|
    double ancilla_deviation;
    double mutual_information_before;
    double mutual_information_after;
    /// |<expected|out>|^2
    double restoration_fidelity;
    std::size_t reference_dim;
    std::size_t oracle_calls;
    bool joint_restored;    // joint_deviation <= tol::kEigen
    bool ancilla_restored;  // ancilla_deviation <= tol::kEigen
};

struct MixedTransformResult {
    /// Layout [control, "ancilla", "reference"].
    StateVector joint;
    MixedTransformReport report;
};

/// Purifies `rho` and runs phase_transform on control (x) ancilla, leaving the
/// reference alone. `control_state` must have a single segment.
MixedTransformResult phase_transform_mixed(const StateVector &control_state, const DensityOperator &rho,
                                           const FunctionTable &f, const GadgetPlan &plan);

/// F T_{-k} |0> = F |-k mod M>, the eigenvector of every T_z with eigenvalue
/// omega_M^{kz}.
StateVector eigen_ancilla(std::size_t modulus, std::int64_t k);

/// One oracle call. Correct only if the ancilla already holds
/// eigen_ancilla(M, k); that precondition is not checked.
PhaseTransformResult phase_transform_initialized(const StateVector &state, std::string_view control,
                                                 std::string_view ancilla, const FunctionTable &f, std::int64_t k);

struct OptimalitySignReport {
    int sign;  // +1 uses T_z, -1 uses T_{-z}
    /// Smallest and largest max-entry distance between V_{z1} and V_{z2}, z1 != z2.
    double min_separation;
    double max_separation;
    std::size_t pairs_checked;
    bool all_distinct;
};

struct OptimalityReport {
    std::size_t modulus;
    std::size_t k;
    std::array<OptimalitySignReport, 2> signs;
    bool all_distinct;
    std::string note;
};

/// For every z, the unitary V_z that would have to follow a single T_{+-z} to
/// yield omega_M^{kz} I is omega_M^{kz} T_{+-z}^dag. Reports how far apart the
/// V_z are; if they are pairwise distinct, no z-independent V works. This is a
/// demonstration under the translation-only oracle model, not a proof.
OptimalityReport optimality_check(std::size_t modulus, std::int64_t k);

}  // namespace phasekit
