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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "../support/bridge.hpp"

using namespace phasekit;

namespace {

FunctionTable boolean(std::vector<std::size_t> v) { return FunctionTable(2, std::move(v)); }

double closed_form(std::size_t n, std::size_t t, std::size_t j) {
    const double theta = std::asin(std::sqrt(static_cast<double>(t) / static_cast<double>(n)));
    return std::pow(std::sin((2.0 * static_cast<double>(j) + 1.0) * theta), 2);
}

// Textbook single-query circuit with exact phases:
// |s> -> e^{i gamma f} -> W_l (I + (e^{i beta} - 1)|l><l|) W_l^dag, W_l = F T_{-l}.
double reference_ck(const std::vector<std::size_t> &f, double gamma, double beta, std::size_t l) {
    const std::size_t n = f.size();
    const auto ln = static_cast<long long>(l);
    const ref::Mat w = ref::fourier(n) * ref::translate(n, -ln);
    ref::Mat sf = ref::Mat::Identity(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        if (f[x] != 0) {
            sf(x, x) = std::polar(1.0, gamma);
        }
    }
    ref::Mat sl = ref::Mat::Identity(n, n);
    sl(l, l) = std::polar(1.0, beta);
    ref::Vec start = ref::Vec::Zero(n);
    start(l) = 1.0;
    const ref::Vec out = w * sl * w.adjoint() * sf * w * start;
    double p = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        p += f[x] != 0 ? std::norm(out(x)) : 0.0;
    }
    return p;
}

std::vector<std::vector<std::size_t>> all_n4_promise_tables() {
    std::vector<std::vector<std::size_t>> out = {{0, 0, 0, 0}, {1, 1, 1, 1}};
    for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = a + 1; b < 4; ++b) {
            std::vector<std::size_t> v(4, 0);
            v[a] = v[b] = 1;
            out.push_back(v);
        }
    }
    return out;
}

}  // namespace

TEST(DeutschJozsa, constant_one_any_ancilla) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto v = deutsch_jozsa(boolean({1, 1, 1, 1}), random_state(2, seed));
        EXPECT_TRUE(v.constant);
        EXPECT_NEAR(v.p_zero, 1.0, 1e-9);
        EXPECT_EQ(v.oracle_calls, 2u);
    }
}

TEST(DeutschJozsa, balanced_0110) {
    const auto v = deutsch_jozsa(boolean({0, 1, 1, 0}), random_state(2, 4));
    EXPECT_FALSE(v.constant);
    EXPECT_NEAR(v.p_zero, 0.0, 1e-9);
    double total = 0.0;
    for (double p : v.distribution) {
        total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
    EXPECT_GE(v.ancilla_restoration_fidelity, 1.0 - 1e-9);
}

TEST(DeutschJozsa, mixed_ancilla_n2) {
    const auto v = deutsch_jozsa(boolean({0, 1}), DensityOperator(Matrix::Identity(2, 2) / 2.0));
    EXPECT_FALSE(v.constant);
    EXPECT_NEAR(v.p_zero, 0.0, 1e-9);
    EXPECT_GE(v.ancilla_restoration_fidelity, 1.0 - 1e-9);
}

TEST(DeutschJozsa, exact_and_ancilla_independent_property) {
    for (const auto &table : all_n4_promise_tables()) {
        const auto f = boolean(table);
        // p_zero = |N^-1 sum_x (-1)^f(x)|^2
        double s = 0.0;
        for (auto b : table) {
            s += b != 0 ? -1.0 : 1.0;
        }
        const double expected = (s / 4.0) * (s / 4.0);
        std::vector<DJVerdict> runs;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            runs.push_back(deutsch_jozsa(f, random_state(2, seed + 17)));
        }
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            runs.push_back(deutsch_jozsa(f, random_density(2, 1 + seed % 2, seed + 3)));
        }
        runs.push_back(deutsch_jozsa(f, basis_state(RegisterLayout({{"a", 2}}), {0})));
        for (const auto &r : runs) {
            EXPECT_NEAR(r.p_zero, expected, 1e-9);
            EXPECT_EQ(r.constant, expected > 0.5);
            for (std::size_t x = 0; x < 4; ++x) {
                EXPECT_NEAR(r.distribution[x], runs.front().distribution[x], 1e-10);
            }
        }
    }
}

TEST(DeutschJozsa, errors) {
    EXPECT_THROW(deutsch_jozsa(FunctionTable(3, {0, 1}), random_state(2, 1)), std::domain_error);
    EXPECT_THROW(deutsch_jozsa(boolean({0, 1}), random_state(3, 1)), std::domain_error);
    EXPECT_THROW(deutsch_jozsa(boolean({0, 1}), random_density(3, 1, 1)), std::domain_error);
}

TEST(Grover, n4_single_solution_one_iteration) {
    const auto r = grover(delta_table(4, 2), 1);
    EXPECT_NEAR(r.success_probability, 1.0, 1e-10);
    EXPECT_EQ(r.oracle_calls, 4u);
    EXPECT_EQ(r.phase_transforms, 2u);
    EXPECT_EQ(r.f_evaluations, 2u);
    EXPECT_FALSE(r.notes.empty());
}

TEST(Grover, all_solutions_at_iteration_zero) {
    const auto r = grover(boolean({1, 1, 1, 1}), 0);
    EXPECT_NEAR(r.success_probability, 1.0, 1e-12);
    EXPECT_EQ(r.oracle_calls, 0u);
}

TEST(Grover, n8_two_iterations) {
    const auto r = grover(delta_table(8, 5), 2);
    EXPECT_NEAR(r.success_probability, 0.9453, 1e-3);
    EXPECT_NEAR(r.success_probability, closed_form(8, 1, 2), 1e-9);
}

TEST(Grover, closed_form_property) {
    ref::Gen gen(1);
    for (std::size_t n : {2u, 4u, 8u, 16u, 32u, 64u}) {
        for (std::size_t t = 1; t <= n / 2; t = t < 4 ? t + 1 : 2 * t) {
            std::vector<std::size_t> v(n, 0);
            std::size_t placed = 0;
            while (placed < t) {
                const auto x = gen.below(n);
                placed += v[x] == 0 ? 1 : 0;
                v[x] = 1;
            }
            const auto anc = random_state(2, n + t);
            for (std::size_t j = 0; j <= 5; ++j) {
                const auto r = grover(boolean(v), j, anc);
                EXPECT_NEAR(r.success_probability, closed_form(n, t, j), 1e-9) << n << " " << t << " " << j;
                EXPECT_EQ(r.oracle_calls, 2 * r.phase_transforms);
                EXPECT_EQ(r.phase_transforms, 2 * j);
                EXPECT_GE(r.ancilla_restoration_fidelity, 1.0 - 1e-9);
            }
        }
    }
}

TEST(Grover, no_solutions_reported) {
    const auto r = grover(boolean({0, 0, 0, 0}), 1);
    EXPECT_EQ(r.solution_count, 0u);
    EXPECT_EQ(r.success_probability, 0.0);
    EXPECT_NE(r.notes.find("no solutions"), std::string::npos);
    double total = 0.0;
    for (double p : r.probabilities) {
        total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
}

TEST(Grover, errors) {
    EXPECT_THROW(grover(boolean({1}), 1), std::domain_error);
    EXPECT_THROW(grover(FunctionTable(3, {0, 1}), 1), std::domain_error);
    EXPECT_THROW(grover(boolean({0, 1}), 1, random_state(4, 1)), std::domain_error);
}

TEST(ChiKim, quarter_claim) {
    for (std::size_t n : {4u, 8u, 16u}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            std::vector<std::size_t> v(n, 0);
            for (std::size_t i = 0; i < n / 4; ++i) {
                v[(i * 5 + seed) % n] = 1;
            }
            for (unsigned bits : {1u, 4u}) {
                const auto r = ck_single_query(boolean(v), CKParams{}, bits);
                EXPECT_NEAR(r.success_probability, 1.0, 1e-9) << n << " bits " << bits;
                EXPECT_EQ(r.f_evaluations, 2u);
                EXPECT_EQ(r.oracle_calls, 4u);
                EXPECT_GE(r.ancilla_restoration_fidelity, 1.0 - 1e-9);
            }
        }
    }
}

TEST(ChiKim, zero_angles_no_amplification) {
    const auto v = std::vector<std::size_t>{0, 1, 0, 0, 1, 0, 0, 1};
    const auto r = ck_single_query(boolean(v), CKParams{0.0, 0.0, 3}, 3);
    EXPECT_NEAR(r.success_probability, 3.0 / 8.0, 1e-10);
}

TEST(ChiKim, n8_t2_quantized_close_to_exact) {
    const std::vector<std::size_t> v{0, 0, 1, 0, 0, 0, 1, 0};
    const CKParams p{};
    const auto r = ck_single_query(boolean(v), p, 4);
    EXPECT_NEAR(r.success_probability, reference_ck(v, p.gamma, p.beta, p.pivot), 0.05);
}

TEST(ChiKim, exact_phase_matches_reference_property) {
    ref::Gen gen(2);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + gen.below(15);
        std::vector<std::size_t> v(n);
        for (auto &b : v) {
            b = gen.below(2);
        }
        const CKParams p{gen.unit() * 7.0 - 1.0, gen.unit() * 7.0 - 1.0, gen.below(n)};
        const auto probs = ck_exact_phase_probabilities(boolean(v), p);
        double success = 0.0;
        for (std::size_t x = 0; x < n; ++x) {
            success += v[x] != 0 ? probs[x] : 0.0;
        }
        EXPECT_NEAR(success, reference_ck(v, p.gamma, p.beta, p.pivot), 1e-10);
    }
}

TEST(ChiKim, quantized_phases_exact_on_dyadic_angles) {
    // gamma = beta = pi/2 is a quarter turn, exactly representable with 2 bits.
    const std::vector<std::size_t> v{1, 0, 0, 1, 0, 1, 0, 0};
    const CKParams p{std::numbers::pi / 2, std::numbers::pi / 2, 2};
    const auto r = ck_single_query(boolean(v), p, 2);
    EXPECT_NEAR(r.success_probability, reference_ck(v, p.gamma, p.beta, p.pivot), 1e-10);
}

TEST(ChiKim, errors) {
    EXPECT_THROW(ck_single_query(boolean({0, 1}), CKParams{}, 0), std::domain_error);
    EXPECT_THROW(ck_single_query(boolean({0, 1}), CKParams{}, 21), std::domain_error);
    EXPECT_THROW(ck_single_query(boolean({0, 1}), CKParams{1.0, 1.0, 2}, 2), std::domain_error);
    EXPECT_THROW(ck_single_query(boolean({0, 1}), CKParams{}, 2, random_state(2, 1)), std::domain_error);
    EXPECT_THROW(ck_single_query(boolean({1}), CKParams{}, 2), std::domain_error);
}

TEST(AngleTable, reduces_angle_into_one_turn) {
    const auto f = boolean({0, 1});
    EXPECT_EQ(angle_table(f, std::numbers::pi, 3).values(), (std::vector<std::size_t>{0, 4}));
    EXPECT_EQ(angle_table(f, -std::numbers::pi / 2, 2).values(), (std::vector<std::size_t>{0, 3}));
    EXPECT_EQ(angle_table(f, 2 * std::numbers::pi, 4).values(), (std::vector<std::size_t>{0, 0}));
}
