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

#include "phasekit/core_state.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "../support/bridge.hpp"
#include "phasekit/errors.hpp"

using namespace phasekit;

namespace {

RegisterLayout two(std::size_t a, std::size_t b) { return RegisterLayout({{"A", a}, {"R", b}}); }

StateVector bell() {
    const double s = 1.0 / std::sqrt(2.0);
    return StateVector(two(2, 2), {s, 0.0, 0.0, s});
}

}  // namespace

TEST(RegisterLayout, mixed_radix_first_segment_most_significant) {
    const RegisterLayout l({{"c", 4}, {"a", 2}});
    EXPECT_EQ(l.total_dim(), 8u);
    const std::vector<std::size_t> v{3, 1};
    EXPECT_EQ(l.flat_index(v), 7u);
    for (std::size_t i = 0; i < l.total_dim(); ++i) {
        EXPECT_EQ(l.flat_index(l.values_of(i)), i);
    }
}

TEST(RegisterLayout, rejects_duplicate_names_and_zero_dims) {
    EXPECT_THROW(RegisterLayout({{"a", 2}, {"a", 3}}), std::domain_error);
    EXPECT_THROW(RegisterLayout({{"a", 0}}), std::domain_error);
    EXPECT_THROW(RegisterLayout({{"a", 2}}).position("b"), std::domain_error);
    EXPECT_THROW(RegisterLayout({{"a", 2}}) + RegisterLayout({{"a", 2}}), std::domain_error);
}

TEST(RegisterLayout, strides) {
    const RegisterLayout l({{"x", 3}, {"y", 4}, {"z", 5}});
    EXPECT_EQ(l.stride(0), 20u);
    EXPECT_EQ(l.stride(1), 5u);
    EXPECT_EQ(l.stride(2), 1u);
}

TEST(StateVector, validates_norm_and_length) {
    EXPECT_THROW(StateVector(RegisterLayout({{"a", 2}}), {1.0}), std::domain_error);
    EXPECT_THROW(StateVector(RegisterLayout({{"a", 2}}), {1.0, 1.0}), NumericError);
    EXPECT_THROW(StateVector(RegisterLayout({{"a", 1}}), {std::nan("")}), NumericError);
    EXPECT_THROW(StateVector::normalized(RegisterLayout({{"a", 2}}), {0.0, 0.0}), NumericError);
    const auto s = StateVector::normalized(RegisterLayout({{"a", 2}}), {3.0, 4.0});
    EXPECT_NEAR(s[0].real(), 0.6, 1e-15);
    EXPECT_NEAR(s[1].real(), 0.8, 1e-15);
}

TEST(BasisState, examples) {
    const RegisterLayout l({{"c", 4}, {"a", 2}});
    auto s = basis_state(l, {0, 0});
    EXPECT_EQ(s[0], Complex(1.0));
    for (std::size_t i = 1; i < 8; ++i) {
        EXPECT_EQ(s[i], Complex(0.0));
    }
    s = basis_state(l, {3, 1});
    EXPECT_EQ(s[7], Complex(1.0));
    s = basis_state(RegisterLayout({{"a", 8}}), {5});
    EXPECT_EQ(s[5], Complex(1.0));
    EXPECT_THROW(basis_state(l, {4, 0}), std::domain_error);
    EXPECT_THROW(basis_state(l, {0}), std::domain_error);
}

TEST(RandomState, deterministic_and_normalized) {
    const auto a = random_state(4, 7);
    const auto b = random_state(4, 7);
    EXPECT_EQ(max_abs_diff(a, b), 0.0);
    EXPECT_NEAR(a.norm(), 1.0, 1e-12);
    EXPECT_GT(max_abs_diff(a, random_state(4, 8)), 1e-3);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        EXPECT_NEAR(std::abs(random_state(1, seed)[0]), 1.0, 1e-15);
    }
}

TEST(RandomDensity, examples) {
    EXPECT_NEAR(random_density(4, 1, 1).purity(), 1.0, 1e-10);
    EXPECT_NEAR(random_density(4, 4, 2).matrix().trace().real(), 1.0, 1e-10);
    const auto ev = random_density(2, 2, 3).eigenvalues();
    EXPECT_NEAR(ev[0] + ev[1], 1.0, 1e-10);
    EXPECT_GE(ev[1], 0.0);
    EXPECT_THROW(random_density(2, 3, 1), std::domain_error);
    EXPECT_THROW(random_density(2, 0, 1), std::domain_error);
}

TEST(RandomDensity, rank_matches_request) {
    for (std::size_t dim = 1; dim <= 6; ++dim) {
        for (std::size_t rank = 1; rank <= dim; ++rank) {
            const auto ev = random_density(dim, rank, 100 * dim + rank).eigenvalues();
            for (std::size_t i = 0; i < dim; ++i) {
                if (i < rank) {
                    EXPECT_GT(ev[i], 1e-3);
                } else {
                    EXPECT_NEAR(ev[i], 0.0, 1e-12);
                }
            }
        }
    }
}

TEST(RandomUnitary, is_unitary) {
    for (std::size_t d = 1; d <= 9; ++d) {
        const auto u = random_unitary(d, d);
        EXPECT_LE(ref::max_diff(u.adjoint() * u, ref::Mat::Identity(u.rows(), u.cols())), 1e-12);
    }
}

TEST(DensityOperator, rejects_invalid_matrices) {
    Matrix m(2, 2);
    m << 0.5, 0.1, 0.2, 0.5;
    EXPECT_THROW(DensityOperator{m}, NumericError);
    m << 0.7, 0.0, 0.0, 0.7;
    EXPECT_THROW(DensityOperator{m}, NumericError);
    m << 1.5, 0.0, 0.0, -0.5;
    EXPECT_THROW(DensityOperator{m}, NumericError);
    EXPECT_THROW(DensityOperator{Matrix(2, 3)}, std::domain_error);
}

TEST(Purify, pure_input) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    const auto p = purify(DensityOperator(m));
    EXPECT_EQ(p.joint.layout().dim(kReferenceSegment), 1u);
    ASSERT_EQ(p.schmidt_coeffs.size(), 1u);
    EXPECT_NEAR(std::abs(p.joint[0]), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(p.joint[1]), 0.0, 1e-12);
}

TEST(Purify, maximally_mixed) {
    const auto p = purify(DensityOperator(0.5 * Matrix::Identity(2, 2)));
    EXPECT_EQ(p.joint.layout().dim(kReferenceSegment), 2u);
    ASSERT_EQ(p.schmidt_coeffs.size(), 2u);
    EXPECT_NEAR(p.schmidt_coeffs[0], 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(p.schmidt_coeffs[1], 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(mutual_information(p.joint, kAncillaSegment, kReferenceSegment), 2.0 * std::log(2.0), 1e-9);
}

TEST(Purify, round_trip_property) {
    const auto rho = random_density(4, 3, 5);
    const auto p = purify(rho);
    EXPECT_EQ(p.joint.layout().dim(kReferenceSegment), 3u);
    EXPECT_LE(max_abs_diff(partial_trace(p.joint, kAncillaSegment).matrix(), rho.matrix()), 1e-9);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t dim = 1 + seed % 7;
        const std::size_t rank = 1 + (seed / 7) % dim;
        const auto r = random_density(dim, rank, seed);
        const auto q = purify(r);
        EXPECT_EQ(q.joint.layout().dim(kReferenceSegment), rank);
        EXPECT_LE(max_abs_diff(partial_trace(q.joint, kAncillaSegment).matrix(), r.matrix()), 1e-9);
        for (std::size_t i = 1; i < q.schmidt_coeffs.size(); ++i) {
            EXPECT_GE(q.schmidt_coeffs[i - 1], q.schmidt_coeffs[i]);
        }
    }
}

TEST(PartialTrace, product_state) {
    const auto s = tensor_product(basis_state(RegisterLayout({{"A", 3}}), {2}), basis_state(RegisterLayout({{"R", 2}}), {1}));
    const auto rho = partial_trace(s, "A").matrix();
    Matrix expected = Matrix::Zero(3, 3);
    expected(2, 2) = 1.0;
    EXPECT_LE(max_abs_diff(rho, expected), 1e-15);
}

TEST(PartialTrace, bell_reduces_to_half_identity) {
    for (const char *keep : {"A", "R"}) {
        EXPECT_LE(max_abs_diff(partial_trace(bell(), keep).matrix(), 0.5 * Matrix::Identity(2, 2)), 1e-15);
    }
    EXPECT_THROW(partial_trace(bell(), "Z"), std::domain_error);
}

TEST(PartialTrace, matches_reference_contraction) {
    // Reference: reshape |psi> as a (dA x dB) matrix and form Psi Psi^dag.
    ref::Gen gen(11);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t da = 1 + gen.below(5);
        const std::size_t db = 1 + gen.below(5);
        const ref::Vec v = gen.unit_vector(da * db);
        const auto s = ref::to_state(two(da, db), v);
        ref::Mat psi(da, db);
        for (std::size_t a = 0; a < da; ++a) {
            for (std::size_t b = 0; b < db; ++b) {
                psi(a, b) = v(a * db + b);
            }
        }
        EXPECT_LE(max_abs_diff(partial_trace(s, "A").matrix(), psi * psi.adjoint()), 1e-12);
        EXPECT_LE(max_abs_diff(partial_trace(s, "R").matrix(), (psi.transpose() * psi.conjugate()).eval()), 1e-12);
    }
}

TEST(PartialTrace, multiple_segments_in_layout_order) {
    const auto s = random_state(RegisterLayout({{"x", 2}, {"y", 3}, {"z", 2}}), 4);
    const std::vector<std::string> keep{"z", "x"};
    const auto rho = partial_trace(s, keep);
    EXPECT_EQ(rho.dim(), 4u);
    const std::vector<std::string> all{"x", "y", "z"};
    EXPECT_LE(max_abs_diff(partial_trace(s, all).matrix(), pure_density(s).matrix()), 1e-12);
}

TEST(MutualInformation, examples) {
    const auto product = tensor_product(random_state(RegisterLayout({{"A", 3}}), 1), random_state(RegisterLayout({{"R", 4}}), 2));
    EXPECT_NEAR(mutual_information(product, "A", "R"), 0.0, 1e-10);
    EXPECT_NEAR(mutual_information(bell(), "A", "R"), 2.0 * std::log(2.0), 1e-9);

    const auto p = purify(random_density(4, 2, 9));
    double s = 0.0;
    for (double c : p.schmidt_coeffs) {
        s -= c * c * std::log(c * c);
    }
    EXPECT_NEAR(mutual_information(p.joint, kAncillaSegment, kReferenceSegment), 2.0 * s, 1e-9);

    const auto three = random_state(RegisterLayout({{"A", 2}, {"B", 2}, {"C", 2}}), 3);
    EXPECT_THROW(mutual_information(three, "A", "B"), std::domain_error);
    EXPECT_GE(subsystem_mutual_information(three, "A", "B"), -1e-12);
}

TEST(MutualInformation, local_unitary_invariance_property) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t m = 2 + seed % 4;
        const auto joint = purify(random_density(m, 1 + seed % m, seed)).joint;
        const double before = mutual_information(joint, kAncillaSegment, kReferenceSegment);
        const auto after = apply_on_segment(joint, kAncillaSegment, random_unitary(m, seed + 1000));
        EXPECT_NEAR(mutual_information(after, kAncillaSegment, kReferenceSegment), before, 1e-9);
        EXPECT_GE(before, -1e-12);
    }
}

TEST(Entropy, known_values) {
    EXPECT_NEAR(von_neumann_entropy(DensityOperator(Matrix::Identity(4, 4) / 4.0)), std::log(4.0), 1e-12);
    EXPECT_NEAR(von_neumann_entropy(pure_density(random_state(5, 1))), 0.0, 1e-10);
}

TEST(GlobalPhase, examples) {
    const auto v = random_state(6, 3);
    const double theta = 0.7;
    std::vector<Complex> rotated(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        rotated[i] = std::polar(1.0, theta) * v[i];
    }
    const auto cmp = equal_up_to_global_phase(v, StateVector(v.layout(), rotated), 1e-10);
    EXPECT_TRUE(cmp.equal);
    EXPECT_NEAR(cmp.phase, theta, 1e-12);

    const RegisterLayout l({{"a", 2}});
    EXPECT_FALSE(equal_up_to_global_phase(basis_state(l, {0}), basis_state(l, {1}), 1e-10).equal);

    std::vector<Complex> nudged(v.amplitudes().begin(), v.amplitudes().end());
    nudged[0] += 1e-13;
    EXPECT_TRUE(equal_up_to_global_phase(v, StateVector::normalized(v.layout(), nudged), 1e-10).equal);
    EXPECT_THROW(equal_up_to_global_phase(v, random_state(RegisterLayout({{"b", 6}}), 1), 1e-10), std::domain_error);
}

TEST(GlobalPhase, reflexive_and_symmetric_property) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = random_state(1 + seed % 8, seed);
        const auto b = random_state(RegisterLayout({{"a", a.size()}}), seed + 99);
        EXPECT_TRUE(equal_up_to_global_phase(a, a, 1e-10).equal);
        const auto ab = equal_up_to_global_phase(a, b, 1e-10);
        const auto ba = equal_up_to_global_phase(b, a, 1e-10);
        EXPECT_EQ(ab.equal, ba.equal);
        EXPECT_NEAR(ab.overlap, ba.overlap, 1e-15);
    }
}

TEST(ApplyOnSegment, examples) {
    const auto s = random_state(RegisterLayout({{"x", 3}, {"a", 2}}), 5);
    EXPECT_LE(max_abs_diff(apply_on_segment(s, "a", Matrix::Identity(2, 2)), s), 0.0);

    Matrix sx(2, 2);
    sx << 0.0, 1.0, 1.0, 0.0;
    const RegisterLayout l({{"x", 3}, {"a", 2}});
    for (std::size_t x = 0; x < 3; ++x) {
        const auto flipped = apply_on_segment(basis_state(l, {x, 0}), "a", sx);
        EXPECT_LE(max_abs_diff(flipped, basis_state(l, {x, 1})), 0.0);
    }

    const auto f = ref::fourier(3);
    const auto back = apply_on_segment(apply_on_segment(s, "x", f), "x", f.adjoint());
    EXPECT_LE(max_abs_diff(back, s), 1e-12);
}

TEST(ApplyOnSegment, errors) {
    const auto s = random_state(RegisterLayout({{"x", 3}, {"a", 2}}), 5);
    EXPECT_THROW(apply_on_segment(s, "a", Matrix::Identity(3, 3)), std::domain_error);
    EXPECT_THROW(apply_on_segment(s, "nope", Matrix::Identity(2, 2)), std::domain_error);
    EXPECT_THROW(apply_on_segment(s, "a", 2.0 * Matrix::Identity(2, 2)), NumericError);
}

TEST(ApplyOnSegment, matches_kronecker_product_property) {
    ref::Gen gen(21);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d0 = 1 + gen.below(3), d1 = 1 + gen.below(4), d2 = 1 + gen.below(3);
        const RegisterLayout l({{"p", d0}, {"q", d1}, {"r", d2}});
        const ref::Vec v = gen.unit_vector(d0 * d1 * d2);
        const Matrix u = random_unitary(d1, static_cast<std::uint64_t>(trial));
        const ref::Mat full = ref::kron(ref::kron(ref::Mat::Identity(d0, d0), u), ref::Mat::Identity(d2, d2));
        const auto out = apply_on_segment(ref::to_state(l, v), "q", u);
        EXPECT_LE(ref::max_diff(out, full * v), 1e-12);
        EXPECT_NEAR(out.norm(), 1.0, 1e-12);
    }
}

TEST(ApplyMonomial, validates_and_matches_dense) {
    const auto s = random_state(RegisterLayout({{"x", 2}, {"a", 3}}), 8);
    const std::vector<std::size_t> perm{2, 0, 1};
    const std::vector<Complex> phases{Complex(0, 1), Complex(-1), Complex(1)};
    Matrix dense = Matrix::Zero(3, 3);
    for (std::size_t y = 0; y < 3; ++y) {
        dense(static_cast<Eigen::Index>(perm[y]), static_cast<Eigen::Index>(y)) = phases[y];
    }
    EXPECT_LE(max_abs_diff(apply_monomial_on_segment(s, "a", perm, phases), apply_on_segment(s, "a", dense)), 1e-15);

    const std::vector<std::size_t> bad{0, 0, 1};
    EXPECT_THROW(apply_monomial_on_segment(s, "a", bad, phases), std::domain_error);
    const std::vector<Complex> not_unit{Complex(2), Complex(1), Complex(1)};
    EXPECT_THROW(apply_monomial_on_segment(s, "a", perm, not_unit), NumericError);
}

TEST(TensorProduct, matches_kron) {
    ref::Gen gen(3);
    const ref::Vec a = gen.unit_vector(3), b = gen.unit_vector(4);
    const auto t = tensor_product(ref::to_state(RegisterLayout({{"a", 3}}), a), ref::to_state(RegisterLayout({{"b", 4}}), b));
    EXPECT_LE(ref::max_diff(t, ref::kron(a, b)), 1e-15);
    EXPECT_EQ(t.layout().segment(0).name, "a");
}

TEST(Fidelity, pure_and_mixed) {
    const auto psi = random_state(3, 4);
    EXPECT_NEAR(fidelity(pure_density(psi), psi), 1.0, 1e-12);
    EXPECT_NEAR(fidelity(DensityOperator(Matrix::Identity(3, 3) / 3.0), psi), 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(std::abs(inner_product(psi, psi)), 1.0, 1e-12);
}
