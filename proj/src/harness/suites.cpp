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

#include "phasekit/harness/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>

#include "phasekit/apps.hpp"
#include "phasekit/phase_gadget.hpp"
#include "phasekit/rng.hpp"
#include "phasekit/spectral.hpp"

namespace phasekit::harness {

namespace {

using nlohmann::json;

const std::vector<std::size_t> kPowerModuli = {2, 4, 8, 16};

Matrix sigma_x() {
    Matrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

Matrix sigma_z() {
    Matrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

Matrix walsh_hadamard() {
    Matrix m(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
    return m;
}

double unitarity_defect(const Matrix &u) {
    return max_abs_diff(u.adjoint() * u, Matrix::Identity(u.rows(), u.cols()));
}

RegisterLayout control_ancilla(std::size_t n, std::size_t m) {
    return RegisterLayout({{"control", n}, {"ancilla", m}});
}

// (sum_x omega^{k f(x)} alpha_x |x>) (x) |Psi>, amplitude by amplitude.
StateVector brute_force_phase(const StateVector &phi, const StateVector &psi, const FunctionTable &f, std::size_t k) {
    const std::size_t n = phi.size();
    const std::size_t m = psi.size();
    std::vector<Complex> amps(n * m);
    for (std::size_t x = 0; x < n; ++x) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>((k * f(x)) % f.modulus()) /
                             static_cast<double>(f.modulus());
        for (std::size_t y = 0; y < m; ++y) {
            amps[x * m + y] = std::polar(1.0, angle) * phi[x] * psi[y];
        }
    }
    return StateVector(control_ancilla(n, m), std::move(amps));
}

// Picks from {2, 4, 8}.
std::size_t small_power(Rng &rng) { return std::size_t{2} << rng.below(3); }

FunctionTable random_subset_table(std::size_t n, std::size_t t, Rng &rng) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) {
        idx[i] = i;
    }
    for (std::size_t i = n; i-- > 1;) {
        std::swap(idx[i], idx[rng.below(i + 1)]);
    }
    std::vector<std::size_t> values(n, 0);
    for (std::size_t i = 0; i < t; ++i) {
        values[idx[i]] = 1;
    }
    return FunctionTable(2, std::move(values));
}

// ---------------------------------------------------------------- primitives

void primitives_suite(VerificationReport &report, Rng &rng) {
    const auto &tol = report.tolerances();
    {
        double fourier = 0.0, translate = 0.0, phase = 0.0, reflect = 0.0;
        for (std::size_t m = 1; m <= 64; ++m) {
            fourier = std::max(fourier, unitarity_defect(fourier_matrix(m)));
            for (std::size_t p = 0; p < m; ++p) {
                const auto sp = static_cast<std::int64_t>(p);
                translate = std::max(translate, unitarity_defect(translate_matrix(m, sp)));
                phase = std::max(phase, unitarity_defect(phase_by_value_matrix(m, sp)));
                reflect = std::max(reflect, unitarity_defect(reflect_phase_matrix(m, sp)));
            }
        }
        const json params = {{"M", "1..64"}, {"parameter", "all of Z_M"}};
        report.add("unitary/fourier", params, fourier, tol.matrix);
        report.add("unitary/translate", params, translate, tol.matrix);
        report.add("unitary/phase_by_value", params, phase, tol.matrix);
        report.add("unitary/reflect_phase", params, reflect, tol.matrix);
    }
    for (auto m : kPowerModuli) {
        const Matrix f = fourier_matrix(m);
        double r_identity = 0.0, s_identity = 0.0, s_herm = 0.0, s_square = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            const auto sk = static_cast<std::int64_t>(k);
            const Matrix tk_dag = translate_matrix(m, sk).adjoint();
            const Matrix s = reflect_phase_matrix(m, sk);
            r_identity = std::max(r_identity, max_abs_diff(phase_by_value_matrix(m, sk), f.adjoint() * tk_dag * f));
            s_identity = std::max(s_identity, max_abs_diff(s, f * tk_dag * f));
            s_herm = std::max(s_herm, max_abs_diff(s, s.adjoint()));
            s_square = std::max(s_square, max_abs_diff(s * s, Matrix::Identity(s.rows(), s.cols())));
        }
        const json params = {{"M", m}, {"k", "all"}};
        report.add("identity/R=Fdag.Tkdag.F", params, r_identity, tol.matrix);
        report.add("identity/S=F.Tkdag.F", params, s_identity, tol.matrix);
        report.add("identity/S_hermitian", params, s_herm, tol.matrix);
        report.add("identity/S_squared_is_I", params, s_square, tol.matrix);

        double t_group = 0.0, r_group = 0.0;
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                const auto sa = static_cast<std::int64_t>(a);
                const auto sb = static_cast<std::int64_t>(b);
                t_group = std::max(t_group, max_abs_diff(translate_matrix(m, sa) * translate_matrix(m, sb),
                                                         translate_matrix(m, sa + sb)));
                r_group = std::max(r_group, max_abs_diff(phase_by_value_matrix(m, sa) * phase_by_value_matrix(m, sb),
                                                         phase_by_value_matrix(m, sa + sb)));
            }
        }
        report.add("group/translate", {{"M", m}}, t_group, tol.exact);
        report.add("group/phase_by_value", {{"M", m}}, r_group, tol.exact);
    }
    {
        const Matrix f8 = fourier_matrix(8);
        Matrix reflection = Matrix::Zero(8, 8);
        for (std::size_t y = 0; y < 8; ++y) {
            reflection(static_cast<Eigen::Index>(reduce_mod(-static_cast<std::int64_t>(y), 8)),
                       static_cast<Eigen::Index>(y)) = 1.0;
        }
        report.add("fourier/F_squared_is_reflection", {{"M", 8}}, max_abs_diff(f8 * f8, reflection), tol.matrix);
    }
    report.add("pauli/T1=sigma_x", {{"M", 2}}, max_abs_diff(translate_matrix(2, 1), sigma_x()), tol.exact);
    report.add("pauli/R1=sigma_z", {{"M", 2}}, max_abs_diff(phase_by_value_matrix(2, 1), sigma_z()), tol.exact);
    report.add("pauli/F=W", {{"M", 2}}, max_abs_diff(fourier_matrix(2), walsh_hadamard()), tol.exact);

    // Fast paths against the dense definition, on a random state per modulus.
    double fast = 0.0;
    for (std::size_t m = 1; m <= 16; ++m) {
        const auto state = random_state(RegisterLayout({{"pre", 3}, {"s", m}, {"post", 2}}), rng.next());
        for (std::size_t p = 0; p < m; ++p) {
            const auto sp = static_cast<std::int64_t>(p);
            for (const auto &op : {PrimitiveOp::translate(m, sp), PrimitiveOp::phase_by_value(m, sp),
                                   PrimitiveOp::reflect_phase(m, sp), PrimitiveOp::fourier(m)}) {
                fast = std::max(fast, max_abs_diff(apply(state, "s", op), apply_on_segment(state, "s", build(op))));
            }
        }
    }
    report.add("fast_path/matches_dense", {{"M", "1..16"}}, fast, tol.exact);
}

// ---------------------------------------------------------------- gadget

void gadget_suite(VerificationReport &report, Rng &rng) {
    const auto &tol = report.tolerances();
    for (auto m : kPowerModuli) {
        const auto dim = static_cast<Eigen::Index>(m);
        std::map<GadgetVariant, double> identity_dev;
        double pairwise = 0.0, inverse = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t z = 0; z < m; ++z) {
                const auto sk = static_cast<std::int64_t>(k);
                const auto sz = static_cast<std::int64_t>(z);
                const Matrix expected = omega(m, sk * sz) * Matrix::Identity(dim, dim);
                std::vector<Matrix> dense;
                for (auto v : kAllGadgetVariants) {
                    const GadgetPlan plan(v, sk, m);
                    dense.push_back(j_gadget_matrix(plan, sz));
                    identity_dev[v] = std::max(identity_dev[v], max_abs_diff(dense.back(), expected));
                    inverse = std::max(inverse, max_abs_diff(j_gadget_matrix(plan.inverse(), sz), dense.back().adjoint()));
                }
                for (std::size_t a = 0; a < dense.size(); ++a) {
                    for (std::size_t b = a + 1; b < dense.size(); ++b) {
                        pairwise = std::max(pairwise, max_abs_diff(dense[a], dense[b]));
                    }
                }
            }
        }
        for (auto v : kAllGadgetVariants) {
            report.add("identity/" + std::string(to_string(v)), {{"M", m}, {"k", "all"}, {"z", "all"}},
                       identity_dev[v], tol.matrix);
        }
        report.add("variants/pairwise_equal", {{"M", m}}, pairwise, tol.matrix);
        report.add("variants/inverse_is_adjoint", {{"M", m}}, inverse, tol.matrix);
    }
    for (auto v : kAllGadgetVariants) {
        double live = 0.0;
        for (std::size_t m : {2, 4, 8}) {
            const auto state = random_state(RegisterLayout({{"env", 3}, {"reg", m}}), rng.next());
            const auto k = static_cast<std::int64_t>(rng.below(m));
            const auto z = static_cast<std::int64_t>(rng.below(m));
            const auto out = j_gadget(state, "reg", GadgetPlan(v, k, m), z);
            const auto cmp = equal_up_to_global_phase(state, out, tol.matrix);
            const double expected = std::arg(omega(m, k * z));
            double dphase = std::abs(std::remainder(cmp.phase - expected, 2.0 * std::numbers::pi));
            live = std::max({live, 1.0 - cmp.overlap, dphase});
        }
        report.add("live/" + std::string(to_string(v)), {{"M", "2,4,8"}}, live, tol.matrix);
        const auto steps = gadget_steps(v);
        const auto translations = std::count_if(steps.begin(), steps.end(), [](GadgetStep s) {
            return s == GadgetStep::TranslateForward || s == GadgetStep::TranslateBackward;
        });
        report.add("translations/" + std::string(to_string(v)), {{"expected", 2}},
                   std::abs(static_cast<double>(translations) - 2.0), 0.0);
    }
}

// ---------------------------------------------------------------- phase transform

void phase_transform_suite(VerificationReport &report, Rng &rng) {
    const auto &tol = report.tolerances();
    {
        double joint = 0.0, marginal = 0.0, calls = 0.0;
        for (int i = 0; i < 100; ++i) {
            const std::size_t n = small_power(rng);
            const std::size_t m = small_power(rng);
            const auto f = random_table(n, m, rng.next());
            const auto phi = random_state(RegisterLayout({{"control", n}}), rng.next());
            const auto psi = random_state(RegisterLayout({{"ancilla", m}}), rng.next());
            const std::size_t k = rng.below(m);
            const GadgetPlan plan(kAllGadgetVariants[static_cast<std::size_t>(i) % 5], static_cast<std::int64_t>(k), m);
            const auto out = phase_transform(tensor_product(phi, psi), "control", "ancilla", f, plan);
            joint = std::max(joint, max_abs_diff(out.state, brute_force_phase(phi, psi, f, k)));
            marginal = std::max(marginal, max_abs_diff(partial_trace(out.state, "ancilla").matrix(),
                                                       pure_density(psi).matrix()));
            calls = std::max(calls, std::abs(static_cast<double>(out.oracle_calls) - 2.0));
        }
        report.add("restoration/joint_vs_brute_force", {{"instances", 100}, {"N,M", "{2,4,8}"}}, joint, tol.matrix);
        report.add("restoration/ancilla_marginal", {{"instances", 100}}, marginal, tol.matrix);
        report.add("restoration/oracle_calls_equal_2", {{"instances", 100}}, calls, 0.0);
    }
    {
        // The ancilla may be entangled with a segment the transform never touches.
        double dev = 0.0;
        for (int i = 0; i < 10; ++i) {
            const std::size_t n = small_power(rng);
            const std::size_t m = small_power(rng);
            const auto f = random_table(n, m, rng.next());
            const auto k = static_cast<std::int64_t>(rng.below(m));
            const auto state = random_state(RegisterLayout({{"control", n}, {"ancilla", m}, {"other", 3}}), rng.next());
            const auto out = phase_transform(state, "control", "ancilla", f, GadgetPlan(GadgetVariant::CommA, k, m));
            dev = std::max(dev, max_abs_diff(out.state, apply_phase_table(state, "control", f, k)));
        }
        report.add("restoration/entangled_ancilla", {{"instances", 10}}, dev, tol.matrix);
    }
    {
        double dev = 0.0;
        for (int i = 0; i < 20; ++i) {
            const std::size_t n = small_power(rng);
            const std::size_t m = small_power(rng);
            const auto f = random_table(n, m, rng.next());
            const auto state = random_state(control_ancilla(n, m), rng.next());
            const auto k1 = static_cast<std::int64_t>(rng.below(m));
            const auto k2 = static_cast<std::int64_t>(rng.below(m));
            const auto v = kAllGadgetVariants[rng.below(5)];
            const auto twice = phase_transform(
                phase_transform(state, "control", "ancilla", f, GadgetPlan(v, k1, m)).state, "control", "ancilla", f,
                GadgetPlan(v, k2, m));
            const auto once = phase_transform(state, "control", "ancilla", f, GadgetPlan(v, k1 + k2, m));
            dev = std::max(dev, max_abs_diff(twice.state, once.state));
        }
        report.add("group/k1_then_k2", {{"instances", 20}}, dev, tol.matrix);
    }
    {
        double roundtrip = 0.0;
        double bad_columns = 0.0;
        for (int i = 0; i < 20; ++i) {
            const std::size_t n = 1 + rng.below(16);
            const std::size_t m = 1 + rng.below(16);
            const auto f = random_table(n, m, rng.next());
            const auto layout = control_ancilla(n, m);
            const auto state = random_state(layout, rng.next());
            const auto there = apply_oracle(state, "control", "ancilla", f, OracleSign::Forward);
            roundtrip = std::max(roundtrip,
                                 max_abs_diff(apply_oracle(there, "control", "ancilla", f, OracleSign::Inverse), state));
            if (n * m <= 256) {
                const Matrix u = oracle_matrix(layout, "control", "ancilla", f, OracleSign::Forward);
                for (Eigen::Index c = 0; c < u.cols(); ++c) {
                    int nonzero = 0;
                    bool unit = true;
                    for (Eigen::Index r = 0; r < u.rows(); ++r) {
                        if (std::abs(u(r, c)) > 0.0) {
                            ++nonzero;
                            unit = unit && std::abs(std::abs(u(r, c)) - 1.0) <= tol.exact;
                        }
                    }
                    bad_columns += (nonzero == 1 && unit) ? 0.0 : 1.0;
                }
            }
        }
        report.add("oracle/forward_then_inverse", {{"instances", 20}, {"N,M", "1..16"}}, roundtrip, tol.exact);
        report.add("oracle/is_permutation", {{"instances", 20}}, bad_columns, 0.0);
    }
    {
        // (I (x) sigma_z) U_f (I (x) sigma_z) U_f against the pipeline at M = 2.
        double dev = 0.0;
        for (std::size_t n : {2, 4, 8}) {
            const auto f = random_table(n, 2, rng.next());
            const auto state = random_state(control_ancilla(n, 2), rng.next());
            auto s = apply_oracle(state, "control", "ancilla", f, OracleSign::Forward);
            s = apply_on_segment(s, "ancilla", sigma_z());
            s = apply_oracle(s, "control", "ancilla", f, OracleSign::Forward);
            s = apply_on_segment(s, "ancilla", sigma_z());
            const auto pipeline = phase_transform(state, "control", "ancilla", f, GadgetPlan(GadgetVariant::CommA, 1, 2));
            dev = std::max(dev, max_abs_diff(s, pipeline.state));
        }
        report.add("pauli/composed_scheme", {{"M", 2}, {"N", "2,4,8"}}, dev, tol.exact);
    }
    for (auto m : kPowerModuli) {
        double dev = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            const auto psi = eigen_ancilla(m, static_cast<std::int64_t>(k));
            for (std::size_t z = 0; z < m; ++z) {
                const auto sz = static_cast<std::int64_t>(z);
                const auto shifted = apply(psi, "ancilla", PrimitiveOp::translate(m, sz));
                for (std::size_t y = 0; y < m; ++y) {
                    dev = std::max(dev, std::abs(shifted[y] - omega(m, static_cast<std::int64_t>(k) * sz) * psi[y]));
                }
            }
        }
        report.add("initialized/eigen_relation", {{"M", m}}, dev, tol.exact);
    }
    {
        double dev = 0.0, calls = 0.0;
        for (int i = 0; i < 20; ++i) {
            const std::size_t n = small_power(rng);
            const std::size_t m = small_power(rng);
            const auto f = random_table(n, m, rng.next());
            const auto k = static_cast<std::int64_t>(rng.below(m));
            const auto phi = random_state(RegisterLayout({{"control", n}}), rng.next());
            const auto state = tensor_product(phi, eigen_ancilla(m, k));
            const auto one = phase_transform_initialized(state, "control", "ancilla", f, k);
            const auto two = phase_transform(state, "control", "ancilla", f, GadgetPlan(GadgetVariant::CommA, k, m));
            dev = std::max(dev, max_abs_diff(one.state, two.state));
            calls = std::max(calls, std::abs(static_cast<double>(one.oracle_calls) - 1.0));
        }
        report.add("initialized/matches_two_call_pipeline", {{"instances", 20}}, dev, tol.matrix);
        report.add("initialized/oracle_calls_equal_1", {{"instances", 20}}, calls, 0.0);
    }
    for (unsigned bits = 1; bits <= 10; ++bits) {
        double worst = 0.0;
        for (int i = 0; i < 5; ++i) {
            const auto rf = random_real_table(64, rng.next());
            const auto ft = quantize(rf, bits);
            for (std::size_t x = 0; x < rf.domain_size(); ++x) {
                const Complex exact = std::polar(1.0, 2.0 * std::numbers::pi * rf(x));
                worst = std::max(worst, std::abs(omega(ft.modulus(), static_cast<std::int64_t>(ft(x))) - exact));
            }
        }
        report.add("quantize/phase_error_bound", {{"m", bits}, {"tables", 5}, {"N", 64}}, worst,
                   2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(bits)));
    }
}

// ---------------------------------------------------------------- mixed

void mixed_suite(VerificationReport &report, Rng &rng) {
    const auto &tol = report.tolerances();
    {
        double joint = 0.0, ancilla = 0.0, mi = 0.0, fid = 0.0;
        int instance = 0;
        while (instance < 25) {
            for (std::size_t m : {2, 4}) {
                for (std::size_t rank = 1; rank <= m && instance < 25; ++rank, ++instance) {
                    const std::size_t n = small_power(rng);
                    const auto rho = random_density(m, rank, rng.next());
                    const auto f = random_table(n, m, rng.next());
                    const auto phi = random_state(RegisterLayout({{"control", n}}), rng.next());
                    const GadgetPlan plan(kAllGadgetVariants[static_cast<std::size_t>(instance) % 5],
                                          static_cast<std::int64_t>(rng.below(m)), m);
                    const auto r = phase_transform_mixed(phi, rho, f, plan).report;
                    joint = std::max(joint, r.joint_deviation);
                    ancilla = std::max(ancilla, r.ancilla_deviation);
                    mi = std::max(mi, std::abs(r.mutual_information_after - r.mutual_information_before));
                    fid = std::max(fid, 1.0 - r.restoration_fidelity);
                }
            }
        }
        const json params = {{"instances", 25}, {"M", "2,4"}, {"rank", "1..M"}};
        report.add("restoration/joint", params, joint, tol.eigen);
        report.add("restoration/ancilla_marginal", params, ancilla, tol.eigen);
        report.add("restoration/mutual_information_unchanged", params, mi, tol.eigen);
        report.add("restoration/fidelity_defect", params, fid, tol.eigen);
    }
    {
        double dev = 0.0;
        for (std::size_t dim = 1; dim <= 8; ++dim) {
            for (std::size_t rank = 1; rank <= dim; ++rank) {
                const auto rho = random_density(dim, rank, rng.next());
                const auto p = purify(rho);
                dev = std::max(dev, max_abs_diff(partial_trace(p.joint, kAncillaSegment).matrix(), rho.matrix()));
                dev = std::max(dev, std::abs(static_cast<double>(p.joint.layout().dim(kReferenceSegment)) -
                                             static_cast<double>(rank)));
            }
        }
        report.add("purify/round_trip", {{"dim", "1..8"}, {"rank", "1..dim"}}, dev, tol.eigen);
    }
    {
        double dev = 0.0;
        for (int i = 0; i < 10; ++i) {
            const std::size_t m = 2 + rng.below(4);
            const auto joint = purify(random_density(m, std::min<std::size_t>(2, m), rng.next())).joint;
            const double before = mutual_information(joint, kAncillaSegment, kReferenceSegment);
            auto moved = apply_on_segment(joint, kAncillaSegment, random_unitary(m, rng.next()));
            moved = apply_on_segment(moved, kReferenceSegment,
                                     random_unitary(joint.layout().dim(kReferenceSegment), rng.next()));
            dev = std::max(dev, std::abs(mutual_information(moved, kAncillaSegment, kReferenceSegment) - before));
        }
        report.add("mutual_information/local_unitary_invariance", {{"instances", 10}}, dev, tol.eigen);
    }
    {
        const auto product = tensor_product(random_state(RegisterLayout({{"A", 3}}), rng.next()),
                                            random_state(RegisterLayout({{"R", 4}}), rng.next()));
        report.add("mutual_information/product_is_zero", {}, std::abs(mutual_information(product, "A", "R")), tol.eigen);
        const double s = 1.0 / std::sqrt(2.0);
        const StateVector bell(RegisterLayout({{"A", 2}, {"R", 2}}), {s, 0.0, 0.0, s});
        report.add("mutual_information/bell_is_2ln2", {}, std::abs(mutual_information(bell, "A", "R") - 2.0 * std::log(2.0)),
                   tol.eigen);
    }
}

// ---------------------------------------------------------------- optimality

void optimality_suite(VerificationReport &report, Rng &) {
    const auto &tol = report.tolerances();
    for (std::size_t m = 2; m <= 16; ++m) {
        for (std::size_t k = 1; k < m; ++k) {
            const auto r = optimality_check(m, static_cast<std::int64_t>(k));
            const double min_sep = std::min(r.signs[0].min_separation, r.signs[1].min_separation);
            report.add("distinct/M" + std::to_string(m) + "_k" + std::to_string(k),
                       {{"M", m},
                        {"k", k},
                        {"min_separation_plus", r.signs[0].min_separation},
                        {"min_separation_minus", r.signs[1].min_separation},
                        {"max_separation", std::max(r.signs[0].max_separation, r.signs[1].max_separation)},
                        {"pairs", r.signs[0].pairs_checked + r.signs[1].pairs_checked},
                        {"note", r.note}},
                       min_sep, tol.distinct, Relation::Above);
        }
    }
}

// ---------------------------------------------------------------- apps

void apps_suite(VerificationReport &report, Rng &rng) {
    const auto &tol = report.tolerances();
    {
        std::vector<FunctionTable> tables = {FunctionTable(2, {0, 0, 0, 0}), FunctionTable(2, {1, 1, 1, 1})};
        for (std::size_t a = 0; a < 4; ++a) {
            for (std::size_t b = a + 1; b < 4; ++b) {
                std::vector<std::size_t> v(4, 0);
                v[a] = v[b] = 1;
                tables.emplace_back(2, std::move(v));
            }
        }
        double exact = 0.0, verdict_errors = 0.0, independence = 0.0, restoration = 0.0;
        for (const auto &f : tables) {
            const bool constant = f.values()[0] == f.values()[1] && f.values()[1] == f.values()[2] &&
                                  f.values()[2] == f.values()[3];
            const double expected_p0 = constant ? 1.0 : 0.0;
            std::vector<DJVerdict> runs;
            for (int i = 0; i < 10; ++i) {
                runs.push_back(deutsch_jozsa(f, random_state(2, rng.next())));
            }
            for (int i = 0; i < 3; ++i) {
                runs.push_back(deutsch_jozsa(f, random_density(2, 2, rng.next())));
            }
            for (const auto &r : runs) {
                exact = std::max(exact, std::abs(r.p_zero - expected_p0));
                verdict_errors += r.constant == constant ? 0.0 : 1.0;
                restoration = std::max(restoration, 1.0 - r.ancilla_restoration_fidelity);
                for (std::size_t x = 0; x < r.distribution.size(); ++x) {
                    independence = std::max(independence, std::abs(r.distribution[x] - runs.front().distribution[x]));
                }
            }
        }
        const json params = {{"N", 4}, {"tables", 8}, {"pure_ancillas", 10}, {"mixed_ancillas", 3}};
        report.add("dj/p_zero_exact", params, exact, tol.eigen);
        report.add("dj/verdict_errors", params, verdict_errors, 0.0);
        report.add("dj/ancilla_independent", params, independence, tol.matrix);
        report.add("dj/ancilla_restoration_defect", params, restoration, tol.eigen);
    }
    {
        double accounting = 0.0;
        for (std::size_t n : {4, 8, 16, 64}) {
            std::vector<std::size_t> ts = {1, n / 4, n / 2};
            std::sort(ts.begin(), ts.end());
            ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
            for (auto t : ts) {
                const auto f = random_subset_table(n, t, rng);
                const auto ancilla = random_state(2, rng.next());
                const double theta = std::asin(std::sqrt(static_cast<double>(t) / static_cast<double>(n)));
                double dev = 0.0;
                for (std::size_t j = 0; j <= 5; ++j) {
                    const auto r = grover(f, j, ancilla);
                    const double closed = std::pow(std::sin((2.0 * static_cast<double>(j) + 1.0) * theta), 2);
                    dev = std::max(dev, std::abs(r.success_probability - closed));
                    accounting = std::max(accounting, std::abs(static_cast<double>(r.oracle_calls) -
                                                               2.0 * static_cast<double>(r.phase_transforms)));
                }
                report.add("grover/closed_form", {{"N", n}, {"t", t}, {"iterations", "0..5"}}, dev, tol.eigen);
            }
        }
        report.add("grover/oracle_calls_are_2_per_transform", {}, accounting, 0.0);
    }
    for (std::size_t n : {4, 8, 16}) {
        const auto f = random_subset_table(n, n / 4, rng);
        const auto r = ck_single_query(f, CKParams{}, 4);
        report.add("ck/quarter_single_query", {{"N", n}, {"t", n / 4}, {"gamma", "pi"}, {"beta", "pi"}, {"m_bits", 4}},
                   std::abs(r.success_probability - 1.0), tol.eigen);
        for (double angle : {std::numbers::pi, 2.0}) {
            const CKParams p{angle, angle, rng.below(n)};
            const auto q = ck_single_query(f, p, 4);
            const auto exact = ck_exact_phase_probabilities(f, p);
            double exact_success = 0.0;
            for (std::size_t x = 0; x < n; ++x) {
                exact_success += f(x) != 0 ? exact[x] : 0.0;
            }
            report.add("ck/quantized_vs_exact", {{"N", n}, {"gamma", angle}, {"beta", angle}, {"m_bits", 4}},
                       std::abs(q.success_probability - exact_success), 0.05);
        }
        const auto none = ck_single_query(f, CKParams{0.0, 0.0, 0}, 2);
        report.add("ck/zero_angles_no_amplification", {{"N", n}},
                   std::abs(none.success_probability - 0.25), tol.eigen);
    }
}

using SuiteFn = std::function<void(VerificationReport &, Rng &)>;

const std::vector<std::pair<std::string, SuiteFn>> &suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"primitives", primitives_suite}, {"gadget", gadget_suite},         {"phase-transform", phase_transform_suite},
        {"mixed", mixed_suite},           {"optimality", optimality_suite}, {"apps", apps_suite},
    };
    return table;
}

std::uint64_t suite_seed(std::uint64_t seed, std::string_view name) {
    // FNV-1a of the suite name, mixed with the run seed.
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : name) {
        h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ULL;
    }
    return h ^ (seed * 0x9E3779B97F4A7C15ULL);
}

}  // namespace

const std::vector<std::string> &known_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &[name, fn] : suite_table()) {
            out.push_back(name);
        }
        out.push_back("all");
        return out;
    }();
    return names;
}

VerificationReport run_suite(std::string_view suite, std::uint64_t seed, const Tolerances &tolerances) {
    if (suite == "all") {
        VerificationReport all("all", seed, tolerances);
        for (const auto &[name, fn] : suite_table()) {
            all.absorb(run_suite(name, seed, tolerances));
        }
        return all;
    }
    for (const auto &[name, fn] : suite_table()) {
        if (name == suite) {
            VerificationReport report(name, seed, tolerances);
            Rng rng(suite_seed(seed, name));
            fn(report, rng);
            return report;
        }
    }
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace phasekit::harness
