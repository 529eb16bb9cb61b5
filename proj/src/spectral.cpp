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

#include "phasekit/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace phasekit {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_modulus(std::size_t modulus) {
    if (modulus == 0) {
        throw std::domain_error("modulus must be >= 1");
    }
}

// Monomial form of the three permutation-like primitives: |y> -> phase[y] |target[y]>.
struct Monomial {
    std::vector<std::size_t> targets;
    std::vector<Complex> phases;
};

Monomial monomial_of(const PrimitiveOp &op) {
    const std::size_t m = op.dim();
    Monomial out{std::vector<std::size_t>(m), std::vector<Complex>(m, Complex(1.0))};
    const auto p = static_cast<std::int64_t>(op.param());
    for (std::size_t y = 0; y < m; ++y) {
        const auto sy = static_cast<std::int64_t>(y);
        switch (op.kind()) {
            case PrimitiveOp::Kind::Translate:
                out.targets[y] = reduce_mod(sy + p, m);
                break;
            case PrimitiveOp::Kind::PhaseByValue:
                out.targets[y] = y;
                out.phases[y] = omega(m, p * sy);
                break;
            case PrimitiveOp::Kind::ReflectPhase:
                out.targets[y] = reduce_mod(-sy, m);
                out.phases[y] = omega(m, p * sy);
                break;
            default:
                throw std::logic_error("primitive has no monomial form");
        }
    }
    return out;
}

Matrix dense_of(const Monomial &mono) {
    const std::size_t m = mono.targets.size();
    Matrix out = Matrix::Zero(idx(m), idx(m));
    for (std::size_t y = 0; y < m; ++y) {
        out(idx(mono.targets[y]), idx(y)) = mono.phases[y];
    }
    return out;
}

}  // namespace

std::size_t reduce_mod(std::int64_t v, std::size_t modulus) {
    require_modulus(modulus);
    const auto m = static_cast<std::int64_t>(modulus);
    const std::int64_t r = v % m;
    return static_cast<std::size_t>(r < 0 ? r + m : r);
}

Complex omega(std::size_t modulus, std::int64_t exponent) {
    const std::size_t e = reduce_mod(exponent, modulus);
    if ((4 * e) % modulus == 0) {
        static constexpr Complex kQuarterTurns[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
        return kQuarterTurns[(4 * e) / modulus];
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(modulus);
    return {std::cos(angle), std::sin(angle)};
}

Matrix fourier_matrix(std::size_t modulus) {
    require_modulus(modulus);
    const double scale = 1.0 / std::sqrt(static_cast<double>(modulus));
    Matrix f(idx(modulus), idx(modulus));
    for (std::size_t z = 0; z < modulus; ++z) {
        for (std::size_t y = 0; y < modulus; ++y) {
            f(idx(z), idx(y)) = scale * omega(modulus, static_cast<std::int64_t>((y * z) % modulus));
        }
    }
    return f;
}

Matrix fourier_inverse_matrix(std::size_t modulus) { return fourier_matrix(modulus).adjoint(); }

Matrix translate_matrix(std::size_t modulus, std::int64_t shift) {
    return build(PrimitiveOp::translate(modulus, shift));
}

Matrix phase_by_value_matrix(std::size_t modulus, std::int64_t k) {
    return build(PrimitiveOp::phase_by_value(modulus, k));
}

Matrix reflect_phase_matrix(std::size_t modulus, std::int64_t k) {
    return build(PrimitiveOp::reflect_phase(modulus, k));
}

PrimitiveOp::PrimitiveOp(Kind kind, std::int64_t param, std::size_t dim)
    : kind_(kind), param_(reduce_mod(param, dim)), dim_(dim) {}

PrimitiveOp PrimitiveOp::adjoint() const {
    const auto p = static_cast<std::int64_t>(param_);
    switch (kind_) {
        case Kind::Fourier:
            return fourier_inverse(dim_);
        case Kind::FourierInverse:
            return fourier(dim_);
        case Kind::Translate:
            return translate(dim_, -p);
        case Kind::PhaseByValue:
            return phase_by_value(dim_, -p);
        case Kind::ReflectPhase:
            return *this;
    }
    throw std::logic_error("unknown primitive kind");
}

std::string PrimitiveOp::describe() const {
    const std::string m = std::to_string(dim_);
    const std::string p = std::to_string(param_);
    switch (kind_) {
        case Kind::Fourier:
            return "F[" + m + "]";
        case Kind::FourierInverse:
            return "F^dag[" + m + "]";
        case Kind::Translate:
            return "T_" + p + "[" + m + "]";
        case Kind::PhaseByValue:
            return "R_" + p + "[" + m + "]";
        case Kind::ReflectPhase:
            return "S_" + p + "[" + m + "]";
    }
    return "?";
}

Matrix build(const PrimitiveOp &op) {
    switch (op.kind()) {
        case PrimitiveOp::Kind::Fourier:
            return fourier_matrix(op.dim());
        case PrimitiveOp::Kind::FourierInverse:
            return fourier_inverse_matrix(op.dim());
        default:
            return dense_of(monomial_of(op));
    }
}

StateVector apply(const StateVector &state, std::string_view segment, const PrimitiveOp &op) {
    const std::size_t dim = state.layout().dim(segment);
    if (dim != op.dim()) {
        throw std::domain_error("primitive " + op.describe() + " does not fit segment '" + std::string(segment) +
                                "' of dimension " + std::to_string(dim));
    }
    switch (op.kind()) {
        case PrimitiveOp::Kind::Fourier:
        case PrimitiveOp::Kind::FourierInverse:
            return detail::apply_dense_unchecked(state, segment, build(op));
        default: {
            const auto mono = monomial_of(op);
            return apply_monomial_on_segment(state, segment, mono.targets, mono.phases);
        }
    }
}

}  // namespace phasekit
