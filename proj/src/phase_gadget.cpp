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

#include "phasekit/phase_gadget.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "phasekit/spectral.hpp"

namespace phasekit {

namespace {

constexpr double kDistinctThreshold = 1e-6;

PrimitiveOp fixed_primitive(GadgetStep step, const GadgetPlan &plan) {
    const auto k = static_cast<std::int64_t>(plan.k());
    switch (step) {
        case GadgetStep::PhaseByValue:
            return PrimitiveOp::phase_by_value(plan.modulus(), k);
        case GadgetStep::PhaseByValueInverse:
            return PrimitiveOp::phase_by_value(plan.modulus(), -k);
        case GadgetStep::ReflectPhase:
            return PrimitiveOp::reflect_phase(plan.modulus(), k);
        default:
            throw std::logic_error("translation steps depend on z");
    }
}

PrimitiveOp step_primitive(GadgetStep step, const GadgetPlan &plan, std::int64_t z) {
    switch (step) {
        case GadgetStep::TranslateForward:
            return PrimitiveOp::translate(plan.modulus(), z);
        case GadgetStep::TranslateBackward:
            return PrimitiveOp::translate(plan.modulus(), -z);
        default:
            return fixed_primitive(step, plan);
    }
}

}  // namespace

std::string_view to_string(GadgetVariant variant) {
    switch (variant) {
        case GadgetVariant::CommA:
            return "comm-a";
        case GadgetVariant::CommB:
            return "comm-b";
        case GadgetVariant::CommC:
            return "comm-c";
        case GadgetVariant::CommD:
            return "comm-d";
        case GadgetVariant::SForm:
            return "sform";
    }
    return "?";
}

std::optional<GadgetVariant> parse_gadget_variant(std::string_view name) {
    for (auto v : kAllGadgetVariants) {
        if (to_string(v) == name) {
            return v;
        }
    }
    return std::nullopt;
}

GadgetPlan::GadgetPlan(GadgetVariant variant, std::int64_t k, std::size_t modulus)
    : variant_(variant), k_(reduce_mod(k, modulus)), modulus_(modulus) {}

GadgetPlan GadgetPlan::inverse() const { return GadgetPlan(variant_, -static_cast<std::int64_t>(k_), modulus_); }

std::array<GadgetStep, 4> gadget_steps(GadgetVariant variant) {
    using S = GadgetStep;
    // [A, B] = A B A^-1 B^-1 acts as B^-1, then A^-1, then B, then A.
    switch (variant) {
        case GadgetVariant::CommA:  // [R^dag, T^dag]
            return {S::TranslateForward, S::PhaseByValue, S::TranslateBackward, S::PhaseByValueInverse};
        case GadgetVariant::CommB:  // [T, R^dag]
            return {S::PhaseByValue, S::TranslateBackward, S::PhaseByValueInverse, S::TranslateForward};
        case GadgetVariant::CommC:  // [R, T]
            return {S::TranslateBackward, S::PhaseByValueInverse, S::TranslateForward, S::PhaseByValue};
        case GadgetVariant::CommD:  // [T^dag, R]
            return {S::PhaseByValueInverse, S::TranslateForward, S::PhaseByValue, S::TranslateBackward};
        case GadgetVariant::SForm:  // S T S T
            return {S::TranslateForward, S::ReflectPhase, S::TranslateForward, S::ReflectPhase};
    }
    throw std::logic_error("unknown gadget variant");
}

StateVector j_gadget(const StateVector &state, std::string_view segment, const GadgetPlan &plan, std::int64_t z) {
    const std::size_t dim = state.layout().dim(segment);
    if (dim != plan.modulus()) {
        throw std::domain_error("gadget modulus " + std::to_string(plan.modulus()) + " does not match segment '" +
                                std::string(segment) + "' of dimension " + std::to_string(dim));
    }
    StateVector current = state;
    for (const auto step : gadget_steps(plan.variant())) {
        current = apply(current, segment, step_primitive(step, plan, z));
    }
    return current;
}

Matrix j_gadget_matrix(const GadgetPlan &plan, std::int64_t z) {
    const auto m = static_cast<Eigen::Index>(plan.modulus());
    Matrix product = Matrix::Identity(m, m);
    for (const auto step : gadget_steps(plan.variant())) {
        product = build(step_primitive(step, plan, z)) * product;
    }
    return product;
}

PhaseTransformResult phase_transform(const StateVector &state, std::string_view control, std::string_view ancilla,
                                     const FunctionTable &f, const GadgetPlan &plan) {
    const auto &layout = state.layout();
    if (layout.dim(ancilla) != plan.modulus() || f.modulus() != plan.modulus()) {
        throw std::domain_error("phase_transform: ancilla dimension, table modulus and plan modulus must agree");
    }
    if (layout.dim(control) != f.domain_size()) {
        throw std::domain_error("phase_transform: control dimension must equal the table's domain size");
    }
    // The gadget circuit with each T_{+-z} replaced by U_{+-f}: per control
    // value x the ancilla sees J_{k, f(x)}.
    CountingOracle oracle(f);
    StateVector current = state;
    for (const auto step : gadget_steps(plan.variant())) {
        switch (step) {
            case GadgetStep::TranslateForward:
                current = oracle.apply(current, control, ancilla, OracleSign::Forward);
                break;
            case GadgetStep::TranslateBackward:
                current = oracle.apply(current, control, ancilla, OracleSign::Inverse);
                break;
            default:
                current = apply(current, ancilla, fixed_primitive(step, plan));
                break;
        }
    }
    return PhaseTransformResult{std::move(current), oracle.calls()};
}

StateVector apply_phase_table(const StateVector &state, std::string_view control, const FunctionTable &f,
                              std::int64_t k) {
    std::vector<Complex> phases(f.domain_size());
    for (std::size_t x = 0; x < phases.size(); ++x) {
        phases[x] = omega(f.modulus(), k * static_cast<std::int64_t>(f(x)));
    }
    return apply_diagonal_on_segment(state, control, phases);
}

MixedTransformResult phase_transform_mixed(const StateVector &control_state, const DensityOperator &rho,
                                           const FunctionTable &f, const GadgetPlan &plan) {
    if (control_state.layout().segment_count() != 1) {
        throw std::domain_error("phase_transform_mixed: control state must have exactly one segment");
    }
    if (rho.dim() != plan.modulus()) {
        throw std::domain_error("phase_transform_mixed: density operator dimension must equal the plan modulus");
    }
    const std::string control = control_state.layout().segment(0).name;
    const auto purification = purify(rho);
    const StateVector &ancilla_reference = purification.joint;
    const StateVector joint_in = tensor_product(control_state, ancilla_reference);

    auto result = phase_transform(joint_in, control, kAncillaSegment, f, plan);

    const auto k = static_cast<std::int64_t>(plan.k());
    const StateVector expected =
        tensor_product(apply_phase_table(control_state, control, f, k), ancilla_reference);

    MixedTransformReport report{};
    report.joint_deviation = max_abs_diff(result.state, expected);
    report.ancilla_deviation = max_abs_diff(partial_trace(result.state, kAncillaSegment).matrix(), rho.matrix());
    report.mutual_information_before = mutual_information(ancilla_reference, kAncillaSegment, kReferenceSegment);
    report.mutual_information_after =
        subsystem_mutual_information(result.state, kAncillaSegment, kReferenceSegment);
    report.restoration_fidelity = std::norm(inner_product(expected, result.state));
    report.reference_dim = ancilla_reference.layout().dim(kReferenceSegment);
    report.oracle_calls = result.oracle_calls;
    report.joint_restored = report.joint_deviation <= tol::kEigen;
    report.ancilla_restored = report.ancilla_deviation <= tol::kEigen;
    return MixedTransformResult{std::move(result.state), report};
}

StateVector eigen_ancilla(std::size_t modulus, std::int64_t k) {
    const RegisterLayout layout({{"ancilla", modulus}});
    const std::size_t minus_k = reduce_mod(-k, modulus);
    // F |-k>: amplitude at z is omega^{-kz} / sqrt(M).
    return apply(basis_state(layout, {minus_k}), "ancilla", PrimitiveOp::fourier(modulus));
}

PhaseTransformResult phase_transform_initialized(const StateVector &state, std::string_view control,
                                                 std::string_view ancilla, const FunctionTable &f,
                                                 [[maybe_unused]] std::int64_t k) {
    // k only fixes which eigenvector the caller must have prepared.
    CountingOracle oracle(f);
    auto out = oracle.apply(state, control, ancilla, OracleSign::Forward);
    return PhaseTransformResult{std::move(out), oracle.calls()};
}

OptimalityReport optimality_check(std::size_t modulus, std::int64_t k) {
    if (modulus < 2) {
        throw std::domain_error("optimality_check needs M >= 2");
    }
    const std::size_t kr = reduce_mod(k, modulus);
    if (kr == 0) {
        throw std::domain_error("optimality_check needs k != 0 mod M");
    }
    OptimalityReport report{modulus, kr, {}, true,
                            "demonstration: assumes z enters only through T_{+-z}; arbitrary z-dependent "
                            "unitaries are not considered"};
    const auto m = static_cast<std::int64_t>(modulus);
    const auto ks = static_cast<std::int64_t>(kr);
    for (std::size_t s = 0; s < 2; ++s) {
        const int sign = s == 0 ? +1 : -1;
        std::vector<Matrix> candidates;
        candidates.reserve(modulus);
        for (std::int64_t z = 0; z < m; ++z) {
            // V_z T_{sign z} = omega^{kz} I  =>  V_z = omega^{kz} T_{sign z}^dag
            candidates.push_back(omega(modulus, ks * z) * translate_matrix(modulus, sign * z).adjoint());
        }
        OptimalitySignReport sr{sign, std::numeric_limits<double>::infinity(), 0.0, 0, true};
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            for (std::size_t b = a + 1; b < candidates.size(); ++b) {
                const double d = max_abs_diff(candidates[a], candidates[b]);
                sr.min_separation = std::min(sr.min_separation, d);
                sr.max_separation = std::max(sr.max_separation, d);
                ++sr.pairs_checked;
            }
        }
        sr.all_distinct = sr.min_separation > kDistinctThreshold;
        report.all_distinct = report.all_distinct && sr.all_distinct;
        report.signs[s] = sr;
    }
    return report;
}

}  // namespace phasekit
