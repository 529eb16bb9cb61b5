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

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "phasekit/errors.hpp"
#include "phasekit/rng.hpp"

namespace phasekit {

namespace {

// Index arithmetic for touching one segment while leaving the rest alone:
// flat = outer * (dim * stride) + value * stride + inner.
struct SegmentView {
    std::size_t dim;
    std::size_t stride;
    std::size_t outer;

    SegmentView(const RegisterLayout &layout, std::size_t pos)
        : dim(layout.segment(pos).dim),
          stride(layout.stride(pos)),
          outer(layout.total_dim() / (layout.segment(pos).dim * layout.stride(pos))) {}

    std::size_t base(std::size_t o, std::size_t i) const { return o * dim * stride + i; }
};

Matrix to_dense(std::span<const Complex> v) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        out(static_cast<Eigen::Index>(i)) = v[i];
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const Matrix &m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

double entropy_of(std::span<const double> eigenvalues) {
    double s = 0.0;
    for (double lambda : eigenvalues) {
        if (lambda > 0.0) {
            s -= lambda * std::log(lambda);
        }
    }
    return s;
}

}  // namespace

// ---------------------------------------------------------------- layout

RegisterLayout::RegisterLayout(std::vector<Segment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) {
        throw std::domain_error("register layout needs at least one segment");
    }
    std::set<std::string_view> seen;
    for (const auto &s : segments_) {
        if (s.dim == 0) {
            throw std::domain_error("segment '" + s.name + "' has dimension 0");
        }
        if (!seen.insert(s.name).second) {
            throw std::domain_error("duplicate segment name '" + s.name + "'");
        }
    }
    strides_.assign(segments_.size(), 1);
    for (std::size_t i = segments_.size(); i-- > 0;) {
        strides_[i] = total_dim_;
        if (total_dim_ > SIZE_MAX / segments_[i].dim) {
            throw std::domain_error("register layout dimension overflows");
        }
        total_dim_ *= segments_[i].dim;
    }
}

std::size_t RegisterLayout::position(std::string_view name) const {
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        if (segments_[i].name == name) {
            return i;
        }
    }
    throw std::domain_error("unknown segment '" + std::string(name) + "'");
}

bool RegisterLayout::contains(std::string_view name) const {
    return std::any_of(segments_.begin(), segments_.end(), [&](const Segment &s) { return s.name == name; });
}

std::size_t RegisterLayout::flat_index(std::span<const std::size_t> values) const {
    if (values.size() != segments_.size()) {
        throw std::domain_error("expected one value per segment");
    }
    std::size_t flat = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= segments_[i].dim) {
            throw std::domain_error("value " + std::to_string(values[i]) + " out of range for segment '" +
                                    segments_[i].name + "' of dimension " + std::to_string(segments_[i].dim));
        }
        flat += values[i] * strides_[i];
    }
    return flat;
}

std::vector<std::size_t> RegisterLayout::values_of(std::size_t flat) const {
    if (flat >= total_dim_) {
        throw std::domain_error("flat index out of range");
    }
    std::vector<std::size_t> out(segments_.size());
    for (std::size_t i = 0; i < segments_.size(); ++i) {
        out[i] = (flat / strides_[i]) % segments_[i].dim;
    }
    return out;
}

RegisterLayout RegisterLayout::operator+(const RegisterLayout &other) const {
    auto joined = segments_;
    joined.insert(joined.end(), other.segments_.begin(), other.segments_.end());
    return RegisterLayout(std::move(joined));
}

// ---------------------------------------------------------------- states

StateVector::StateVector(RegisterLayout layout, std::vector<Complex> amps)
    : layout_(std::move(layout)), amps_(std::move(amps)) {
    if (amps_.size() != layout_.total_dim()) {
        throw std::domain_error("amplitude count " + std::to_string(amps_.size()) + " does not match layout dimension " +
                                std::to_string(layout_.total_dim()));
    }
    for (const auto &a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw NumericError("non-finite amplitude");
        }
    }
    if (std::abs(norm() - 1.0) > tol::kMatrix) {
        throw NumericError("state vector is not normalized (norm " + std::to_string(norm()) + ")");
    }
}

StateVector StateVector::normalized(RegisterLayout layout, std::vector<Complex> amps) {
    double n2 = 0.0;
    for (const auto &a : amps) {
        n2 += std::norm(a);
    }
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
        throw NumericError("cannot normalize a zero or non-finite vector");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto &a : amps) {
        a *= inv;
    }
    return StateVector(std::move(layout), std::move(amps));
}

double StateVector::norm() const {
    double n2 = 0.0;
    for (const auto &a : amps_) {
        n2 += std::norm(a);
    }
    return std::sqrt(n2);
}

StateVector StateVector::relabeled(RegisterLayout layout) const {
    if (layout.total_dim() != layout_.total_dim()) {
        throw std::domain_error("relabeled layout must keep the total dimension");
    }
    return StateVector(std::move(layout), amps_);
}

// ---------------------------------------------------------------- density operators

DensityOperator::DensityOperator(Matrix mat) : mat_(std::move(mat)) {
    if (mat_.rows() == 0 || mat_.rows() != mat_.cols()) {
        throw std::domain_error("density operator must be a nonempty square matrix");
    }
    if (!mat_.allFinite()) {
        throw NumericError("density operator has non-finite entries");
    }
    if ((mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() > tol::kMatrix) {
        throw NumericError("density operator is not Hermitian");
    }
    if (std::abs(mat_.trace() - Complex(1.0)) > tol::kMatrix) {
        throw NumericError("density operator trace is not 1");
    }
    const auto ev = hermitian_eigenvalues(mat_);
    if (ev.back() < -tol::kMatrix) {
        throw NumericError("density operator has negative eigenvalue " + std::to_string(ev.back()));
    }
}

std::vector<double> DensityOperator::eigenvalues() const { return hermitian_eigenvalues(mat_); }

double DensityOperator::purity() const { return (mat_ * mat_).trace().real(); }

// ---------------------------------------------------------------- constructors

StateVector basis_state(const RegisterLayout &layout, std::span<const std::size_t> values) {
    std::vector<Complex> amps(layout.total_dim());
    amps[layout.flat_index(values)] = 1.0;
    return StateVector(layout, std::move(amps));
}

StateVector basis_state(const RegisterLayout &layout, std::initializer_list<std::size_t> values) {
    return basis_state(layout, std::span<const std::size_t>(values.begin(), values.size()));
}

StateVector random_state(const RegisterLayout &layout, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Complex> amps(layout.total_dim());
    for (auto &a : amps) {
        a = rng.gaussian_pair();
    }
    return StateVector::normalized(layout, std::move(amps));
}

StateVector random_state(std::size_t dim, std::uint64_t seed) {
    if (dim == 0) {
        throw std::domain_error("random_state needs dim >= 1");
    }
    return random_state(RegisterLayout({{"a", dim}}), seed);
}

namespace {

// First `cols` columns of a Haar unitary: Gaussian columns, modified
// Gram-Schmidt run twice.
Matrix random_orthonormal_columns(Rng &rng, std::size_t dim, std::size_t cols) {
    const auto d = static_cast<Eigen::Index>(dim);
    Matrix basis(d, static_cast<Eigen::Index>(cols));
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
        for (Eigen::Index r = 0; r < d; ++r) {
            basis(r, c) = rng.gaussian_pair();
        }
    }
    for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index c = 0; c < basis.cols(); ++c) {
            for (Eigen::Index p = 0; p < c; ++p) {
                const Complex proj = basis.col(p).dot(basis.col(c));
                basis.col(c) -= proj * basis.col(p);
            }
            basis.col(c).normalize();
        }
    }
    return basis;
}

}  // namespace

Matrix random_unitary(std::size_t dim, std::uint64_t seed) {
    if (dim == 0) {
        throw std::domain_error("random_unitary needs dim >= 1");
    }
    Rng rng(seed);
    return random_orthonormal_columns(rng, dim, dim);
}

DensityOperator random_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
    if (dim == 0 || rank == 0 || rank > dim) {
        throw std::domain_error("random_density needs 1 <= rank <= dim");
    }
    Rng rng(seed);
    const Matrix basis = random_orthonormal_columns(rng, dim, rank);
    std::vector<double> weights(rank);
    for (auto &w : weights) {
        w = 0.5 + rng.uniform();
    }
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    const auto d = static_cast<Eigen::Index>(dim);
    Matrix rho = Matrix::Zero(d, d);
    for (std::size_t c = 0; c < rank; ++c) {
        const auto v = basis.col(static_cast<Eigen::Index>(c));
        rho += (weights[c] / total) * (v * v.adjoint());
    }
    // Remove the rounding asymmetry so the Hermitian check is exact.
    Matrix herm = 0.5 * (rho + rho.adjoint());
    return DensityOperator(std::move(herm));
}

DensityOperator pure_density(const StateVector &state) {
    const Matrix v = to_dense(state.amplitudes());
    return DensityOperator(v * v.adjoint());
}

Purification purify(const DensityOperator &rho) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rho.matrix());
    if (solver.info() != Eigen::Success) {
        throw NumericError("eigendecomposition failed");
    }
    const auto &values = solver.eigenvalues();
    const auto &vectors = solver.eigenvectors();
    if (values.minCoeff() < -tol::kMatrix) {
        throw NumericError("cannot purify: density operator has a negative eigenvalue");
    }
    // Eigen returns ascending order; walk it backwards for descending Schmidt coefficients.
    std::vector<Eigen::Index> kept;
    for (Eigen::Index i = values.size(); i-- > 0;) {
        if (values(i) > tol::kRank) {
            kept.push_back(i);
        }
    }
    const std::size_t m = rho.dim();
    const std::size_t r = kept.size();
    std::vector<Complex> amps(m * r);
    std::vector<double> coeffs;
    coeffs.reserve(r);
    for (std::size_t j = 0; j < r; ++j) {
        const double c = std::sqrt(values(kept[j]));
        coeffs.push_back(c);
        for (std::size_t y = 0; y < m; ++y) {
            amps[y * r + j] = c * vectors(static_cast<Eigen::Index>(y), kept[j]);
        }
    }
    RegisterLayout layout({{std::string(kAncillaSegment), m}, {std::string(kReferenceSegment), r}});
    auto joint = StateVector::normalized(std::move(layout), std::move(amps));
    const double scale = 1.0 / std::sqrt(std::inner_product(coeffs.begin(), coeffs.end(), coeffs.begin(), 0.0));
    for (auto &c : coeffs) {
        c *= scale;
    }
    return Purification{std::move(joint), std::move(coeffs)};
}

// ---------------------------------------------------------------- reductions

DensityOperator partial_trace(const StateVector &state, std::string_view keep) {
    const auto &layout = state.layout();
    if (layout.segment_count() < 2) {
        throw std::domain_error("partial_trace needs a layout with at least two segments");
    }
    const SegmentView seg(layout, layout.position(keep));
    const auto amps = state.amplitudes();
    const auto d = static_cast<Eigen::Index>(seg.dim);
    Matrix rho = Matrix::Zero(d, d);
    for (std::size_t o = 0; o < seg.outer; ++o) {
        for (std::size_t i = 0; i < seg.stride; ++i) {
            const std::size_t base = seg.base(o, i);
            for (std::size_t r = 0; r < seg.dim; ++r) {
                const Complex ar = amps[base + r * seg.stride];
                if (ar == Complex(0.0)) {
                    continue;
                }
                for (std::size_t c = r; c < seg.dim; ++c) {
                    rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) +=
                        ar * std::conj(amps[base + c * seg.stride]);
                }
            }
        }
    }
    for (Eigen::Index r = 0; r < d; ++r) {
        rho(r, r) = rho(r, r).real();
        for (Eigen::Index c = r + 1; c < d; ++c) {
            rho(c, r) = std::conj(rho(r, c));
        }
    }
    return DensityOperator(std::move(rho));
}

DensityOperator partial_trace(const StateVector &state, std::span<const std::string> keep) {
    const auto &layout = state.layout();
    std::vector<bool> kept(layout.segment_count(), false);
    for (const auto &name : keep) {
        kept[layout.position(name)] = true;
    }
    // Split each flat index into a kept part and a traced part, both mixed-radix.
    std::size_t kept_dim = 1;
    std::size_t traced_dim = 1;
    for (std::size_t s = 0; s < layout.segment_count(); ++s) {
        (kept[s] ? kept_dim : traced_dim) *= layout.segment(s).dim;
    }
    const auto amps = state.amplitudes();
    Matrix psi = Matrix::Zero(static_cast<Eigen::Index>(kept_dim), static_cast<Eigen::Index>(traced_dim));
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
        std::size_t ki = 0;
        std::size_t ti = 0;
        for (std::size_t s = 0; s < layout.segment_count(); ++s) {
            const std::size_t v = (flat / layout.stride(s)) % layout.segment(s).dim;
            if (kept[s]) {
                ki = ki * layout.segment(s).dim + v;
            } else {
                ti = ti * layout.segment(s).dim + v;
            }
        }
        psi(static_cast<Eigen::Index>(ki), static_cast<Eigen::Index>(ti)) = amps[flat];
    }
    Matrix rho = psi * psi.adjoint();
    Matrix herm = 0.5 * (rho + rho.adjoint());
    return DensityOperator(std::move(herm));
}

std::vector<double> marginal_probabilities(const StateVector &state, std::string_view segment) {
    const SegmentView seg(state.layout(), state.layout().position(segment));
    const auto amps = state.amplitudes();
    std::vector<double> probs(seg.dim, 0.0);
    for (std::size_t o = 0; o < seg.outer; ++o) {
        for (std::size_t i = 0; i < seg.stride; ++i) {
            const std::size_t base = seg.base(o, i);
            for (std::size_t y = 0; y < seg.dim; ++y) {
                probs[y] += std::norm(amps[base + y * seg.stride]);
            }
        }
    }
    return probs;
}

double von_neumann_entropy(const DensityOperator &rho) {
    const auto ev = rho.eigenvalues();
    return entropy_of(ev);
}

double mutual_information(const StateVector &state, std::string_view a, std::string_view b) {
    const auto &layout = state.layout();
    if (layout.segment_count() != 2) {
        throw std::domain_error("mutual_information needs a state over exactly two segments");
    }
    if (a == b || !layout.contains(a) || !layout.contains(b)) {
        throw std::domain_error("mutual_information split must name both segments");
    }
    // The joint state is pure, so S(AB) = 0.
    return von_neumann_entropy(partial_trace(state, a)) + von_neumann_entropy(partial_trace(state, b));
}

double subsystem_mutual_information(const StateVector &state, std::string_view a, std::string_view b) {
    if (a == b) {
        throw std::domain_error("subsystem_mutual_information needs two distinct segments");
    }
    const std::vector<std::string> both{std::string(a), std::string(b)};
    const std::vector<std::string> only_a{std::string(a)};
    const std::vector<std::string> only_b{std::string(b)};
    return von_neumann_entropy(partial_trace(state, only_a)) + von_neumann_entropy(partial_trace(state, only_b)) -
           von_neumann_entropy(partial_trace(state, both));
}

// ---------------------------------------------------------------- comparisons

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw std::domain_error("inner product of states with different dimensions");
    }
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

PhaseComparison equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tolerance) {
    if (!(a.layout() == b.layout())) {
        throw std::domain_error("equal_up_to_global_phase needs identical layouts");
    }
    const Complex ip = inner_product(a, b);
    const double overlap = std::abs(ip);
    return PhaseComparison{overlap >= 1.0 - tolerance, std::arg(ip), overlap};
}

double fidelity(const DensityOperator &rho, const StateVector &psi) {
    if (rho.dim() != psi.size()) {
        throw std::domain_error("fidelity: dimension mismatch");
    }
    const Matrix v = to_dense(psi.amplitudes());
    return (v.adjoint() * rho.matrix() * v)(0, 0).real();
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw std::domain_error("max_abs_diff: dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::domain_error("max_abs_diff: shape mismatch");
    }
    return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

StateVector tensor_product(const StateVector &a, const StateVector &b) {
    auto layout = a.layout() + b.layout();
    std::vector<Complex> amps(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            amps[i * b.size() + j] = a[i] * b[j];
        }
    }
    return StateVector(std::move(layout), std::move(amps));
}

// ---------------------------------------------------------------- segment operators

bool is_unitary(const Matrix &m, double tolerance) {
    if (m.rows() != m.cols()) {
        return false;
    }
    const Matrix id = Matrix::Identity(m.rows(), m.cols());
    return max_abs_diff(m.adjoint() * m, id) <= tolerance;
}

StateVector apply_on_segment(const StateVector &state, std::string_view segment, const Matrix &op) {
    const std::size_t dim = state.layout().dim(segment);
    if (static_cast<std::size_t>(op.rows()) != dim || static_cast<std::size_t>(op.cols()) != dim) {
        throw std::domain_error("operator size does not match segment '" + std::string(segment) + "' of dimension " +
                                std::to_string(dim));
    }
    if (!is_unitary(op, tol::kMatrix)) {
        throw NumericError("operator applied to segment '" + std::string(segment) + "' is not unitary");
    }
    return detail::apply_dense_unchecked(state, segment, op);
}

namespace detail {

StateVector apply_dense_unchecked(const StateVector &state, std::string_view segment, const Matrix &op) {
    const SegmentView seg(state.layout(), state.layout().position(segment));
    if (static_cast<std::size_t>(op.rows()) != seg.dim || static_cast<std::size_t>(op.cols()) != seg.dim) {
        throw std::domain_error("operator size does not match segment '" + std::string(segment) + "'");
    }
    const auto in = state.amplitudes();
    std::vector<Complex> out(in.size());
    std::vector<Complex> column(seg.dim);
    for (std::size_t o = 0; o < seg.outer; ++o) {
        for (std::size_t i = 0; i < seg.stride; ++i) {
            const std::size_t base = seg.base(o, i);
            for (std::size_t y = 0; y < seg.dim; ++y) {
                column[y] = in[base + y * seg.stride];
            }
            for (std::size_t r = 0; r < seg.dim; ++r) {
                Complex acc = 0.0;
                for (std::size_t c = 0; c < seg.dim; ++c) {
                    acc += op(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * column[c];
                }
                out[base + r * seg.stride] = acc;
            }
        }
    }
    return StateVector(state.layout(), std::move(out));
}

}  // namespace detail

StateVector apply_monomial_on_segment(const StateVector &state, std::string_view segment,
                                      std::span<const std::size_t> targets, std::span<const Complex> phases) {
    const SegmentView seg(state.layout(), state.layout().position(segment));
    if (targets.size() != seg.dim || phases.size() != seg.dim) {
        throw std::domain_error("monomial operator size does not match segment '" + std::string(segment) + "'");
    }
    std::vector<bool> hit(seg.dim, false);
    for (std::size_t y = 0; y < seg.dim; ++y) {
        if (targets[y] >= seg.dim || hit[targets[y]]) {
            throw std::domain_error("monomial operator targets are not a permutation");
        }
        hit[targets[y]] = true;
        if (std::abs(std::abs(phases[y]) - 1.0) > tol::kMatrix) {
            throw NumericError("monomial operator phase does not have unit modulus");
        }
    }
    const auto in = state.amplitudes();
    std::vector<Complex> out(in.size());
    for (std::size_t o = 0; o < seg.outer; ++o) {
        for (std::size_t i = 0; i < seg.stride; ++i) {
            const std::size_t base = seg.base(o, i);
            for (std::size_t y = 0; y < seg.dim; ++y) {
                out[base + targets[y] * seg.stride] = phases[y] * in[base + y * seg.stride];
            }
        }
    }
    return StateVector(state.layout(), std::move(out));
}

StateVector apply_diagonal_on_segment(const StateVector &state, std::string_view segment,
                                      std::span<const Complex> phases) {
    std::vector<std::size_t> identity(phases.size());
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    return apply_monomial_on_segment(state, segment, identity, phases);
}

}  // namespace phasekit
