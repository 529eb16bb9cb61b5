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

#include "phasekit/apps.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "phasekit/phase_gadget.hpp"
#include "phasekit/spectral.hpp"

namespace phasekit {

namespace {

constexpr double kConstantThreshold = 1.0 - 1e-9;

void require_boolean(const FunctionTable &f, const char *who) {
    if (f.modulus() != 2) {
        throw std::domain_error(std::string(who) + " needs a Boolean table (M = 2)");
    }
}

std::size_t count_solutions(const FunctionTable &f) {
    std::size_t t = 0;
    for (auto v : f.values()) {
        t += v != 0 ? 1 : 0;
    }
    return t;
}

double success_mass(const FunctionTable &f, const std::vector<double> &probs) {
    double s = 0.0;
    for (std::size_t x = 0; x < probs.size(); ++x) {
        if (f(x) != 0) {
            s += probs[x];
        }
    }
    return s;
}

// Control register in F_N|0> next to an arbitrary single-segment ancilla.
StateVector uniform_with(std::size_t n, const StateVector &ancilla) {
    const RegisterLayout control({{std::string(kControlSegment), n}});
    const auto uniform = apply(basis_state(control, {0}), kControlSegment, PrimitiveOp::fourier(n));
    return tensor_product(uniform, ancilla);
}

StateVector as_ancilla(const StateVector &s) {
    return s.relabeled(RegisterLayout({{std::string(kAncillaSegment), s.size()}}));
}

// Runs R_{1,g} through the uninitialized-ancilla pipeline and tallies calls.
struct PhaseRunner {
    std::size_t oracle_calls = 0;
    std::size_t transforms = 0;

    StateVector run(const StateVector &state, const FunctionTable &g) {
        const GadgetPlan plan(GadgetVariant::CommA, 1, g.modulus());
        auto r = phase_transform(state, kControlSegment, kAncillaSegment, g, plan);
        oracle_calls += r.oracle_calls;
        ++transforms;
        return std::move(r.state);
    }
};

DJVerdict finish_dj(const StateVector &after, std::size_t calls, double fidelity) {
    const std::size_t n = after.layout().dim(kControlSegment);
    const auto out = apply(after, kControlSegment, PrimitiveOp::fourier_inverse(n));
    DJVerdict v;
    v.distribution = marginal_probabilities(out, kControlSegment);
    v.p_zero = v.distribution[0];
    v.constant = v.p_zero >= kConstantThreshold;
    v.oracle_calls = calls;
    v.ancilla_restoration_fidelity = fidelity;
    return v;
}

double angle_fraction(double angle) {
    const double turns = angle / (2.0 * std::numbers::pi);
    double frac = turns - std::floor(turns);
    if (frac >= 1.0) {
        frac = 0.0;
    }
    return frac;
}

}  // namespace

DJVerdict deutsch_jozsa(const FunctionTable &f, const StateVector &ancilla) {
    require_boolean(f, "deutsch_jozsa");
    if (ancilla.size() != 2) {
        throw std::domain_error("deutsch_jozsa needs a 2-dimensional ancilla");
    }
    const StateVector anc = as_ancilla(ancilla);
    PhaseRunner runner;
    const auto after = runner.run(uniform_with(f.domain_size(), anc), f);
    const double fid = fidelity(partial_trace(after, kAncillaSegment), anc);
    return finish_dj(after, runner.oracle_calls, fid);
}

DJVerdict deutsch_jozsa(const FunctionTable &f, const DensityOperator &ancilla) {
    require_boolean(f, "deutsch_jozsa");
    if (ancilla.dim() != 2) {
        throw std::domain_error("deutsch_jozsa needs a 2-dimensional ancilla");
    }
    const auto purification = purify(ancilla);
    PhaseRunner runner;
    const auto after = runner.run(uniform_with(f.domain_size(), purification.joint), f);
    const std::vector<std::string> ar{std::string(kAncillaSegment), std::string(kReferenceSegment)};
    const double fid = fidelity(partial_trace(after, ar), purification.joint);
    return finish_dj(after, runner.oracle_calls, fid);
}

SearchResult grover(const FunctionTable &f, std::size_t iterations, const StateVector &ancilla) {
    require_boolean(f, "grover");
    const std::size_t n = f.domain_size();
    if (n < 2) {
        throw std::domain_error("grover needs N >= 2");
    }
    if (ancilla.size() != 2) {
        throw std::domain_error("grover needs a 2-dimensional ancilla");
    }
    const StateVector anc = as_ancilla(ancilla);
    const FunctionTable zero_marker = delta_table(n, 0);
    PhaseRunner runner;
    std::size_t f_calls = 0;
    StateVector state = uniform_with(n, anc);
    for (std::size_t j = 0; j < iterations; ++j) {
        const std::size_t before = runner.oracle_calls;
        state = runner.run(state, f);
        f_calls += runner.oracle_calls - before;
        state = apply(state, kControlSegment, PrimitiveOp::fourier_inverse(n));
        state = runner.run(state, zero_marker);
        state = apply(state, kControlSegment, PrimitiveOp::fourier(n));
    }
    SearchResult r;
    r.iterations = iterations;
    r.probabilities = marginal_probabilities(state, kControlSegment);
    r.solution_count = count_solutions(f);
    r.success_probability = success_mass(f, r.probabilities);
    r.oracle_calls = runner.oracle_calls;
    r.phase_transforms = runner.transforms;
    r.f_evaluations = f_calls;
    r.ancilla_restoration_fidelity = fidelity(partial_trace(state, kAncillaSegment), anc);
    r.notes = "diffusion applied as W S_0 W^dag = -(2|s><s| - I); global sign only";
    if (r.solution_count == 0) {
        r.notes += "; f has no solutions";
    }
    return r;
}

SearchResult grover(const FunctionTable &f, std::size_t iterations) {
    return grover(f, iterations, random_state(2, 0));
}

FunctionTable angle_table(const FunctionTable &boolean_f, double angle, unsigned bits) {
    require_boolean(boolean_f, "angle_table");
    const double frac = angle_fraction(angle);
    std::vector<double> values(boolean_f.domain_size());
    for (std::size_t x = 0; x < values.size(); ++x) {
        values[x] = boolean_f(x) != 0 ? frac : 0.0;
    }
    return quantize(RealFunctionTable(std::move(values)), bits);
}

SearchResult ck_single_query(const FunctionTable &f, const CKParams &params, unsigned bits,
                             const std::optional<StateVector> &ancilla) {
    require_boolean(f, "ck_single_query");
    const std::size_t n = f.domain_size();
    if (n < 2) {
        throw std::domain_error("ck_single_query needs N >= 2");
    }
    if (bits == 0 || bits > 20) {
        throw std::domain_error("ck_single_query needs 1 <= bits <= 20");
    }
    if (params.pivot >= n) {
        throw std::domain_error("ck_single_query: pivot l must be below N");
    }
    const std::size_t m = std::size_t{1} << bits;
    const StateVector anc = as_ancilla(ancilla ? *ancilla : random_state(m, 0));
    if (anc.size() != m) {
        throw std::domain_error("ck_single_query: ancilla dimension must be 2^bits");
    }
    const auto l = static_cast<std::int64_t>(params.pivot);
    const FunctionTable query = angle_table(f, params.gamma, bits);
    const FunctionTable diffusion = angle_table(delta_table(n, params.pivot), params.beta, bits);

    PhaseRunner runner;
    // W_l |l> = F_N T_{-l} |l> = F_N |0>.
    StateVector state = uniform_with(n, anc);
    state = runner.run(state, query);
    const std::size_t f_calls = runner.oracle_calls;
    // D_beta = W_l S W_l^dag with W_l^dag = T_l F_N^dag.
    state = apply(state, kControlSegment, PrimitiveOp::fourier_inverse(n));
    state = apply(state, kControlSegment, PrimitiveOp::translate(n, l));
    state = runner.run(state, diffusion);
    state = apply(state, kControlSegment, PrimitiveOp::translate(n, -l));
    state = apply(state, kControlSegment, PrimitiveOp::fourier(n));

    SearchResult r;
    r.iterations = 1;
    r.probabilities = marginal_probabilities(state, kControlSegment);
    r.solution_count = count_solutions(f);
    r.success_probability = success_mass(f, r.probabilities);
    r.oracle_calls = runner.oracle_calls;
    r.phase_transforms = runner.transforms;
    r.f_evaluations = f_calls;
    r.ancilla_restoration_fidelity = fidelity(partial_trace(state, kAncillaSegment), anc);
    r.notes = "W_l = F_N T_{-l}; phases quantized to " + std::to_string(bits) + " bits";
    return r;
}

std::vector<double> ck_exact_phase_probabilities(const FunctionTable &f, const CKParams &params) {
    require_boolean(f, "ck_exact_phase_probabilities");
    const std::size_t n = f.domain_size();
    if (params.pivot >= n) {
        throw std::domain_error("ck_exact_phase_probabilities: pivot l must be below N");
    }
    const auto l = static_cast<std::int64_t>(params.pivot);
    const RegisterLayout control({{std::string(kControlSegment), n}});
    auto phases_for = [&](const FunctionTable &g, double angle) {
        std::vector<Complex> p(n);
        for (std::size_t x = 0; x < n; ++x) {
            p[x] = g(x) != 0 ? std::polar(1.0, angle) : Complex(1.0);
        }
        return p;
    };
    StateVector state = apply(basis_state(control, {0}), kControlSegment, PrimitiveOp::fourier(n));
    state = apply_diagonal_on_segment(state, kControlSegment, phases_for(f, params.gamma));
    state = apply(state, kControlSegment, PrimitiveOp::fourier_inverse(n));
    state = apply(state, kControlSegment, PrimitiveOp::translate(n, l));
    state = apply_diagonal_on_segment(state, kControlSegment, phases_for(delta_table(n, params.pivot), params.beta));
    state = apply(state, kControlSegment, PrimitiveOp::translate(n, -l));
    state = apply(state, kControlSegment, PrimitiveOp::fourier(n));
    return marginal_probabilities(state, kControlSegment);
}

}  // namespace phasekit
