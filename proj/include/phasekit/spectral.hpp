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
#include <cstdint>
#include <string>
#include <string_view>

#include "phasekit/core_state.hpp"

namespace phasekit {

/// Representative of v in [0, M).
std::size_t reduce_mod(std::int64_t v, std::size_t modulus);

/// exp(2 pi i e / M) with e reduced mod M first. Multiples of a quarter turn
/// are returned exactly.
Complex omega(std::size_t modulus, std::int64_t exponent);

// Dense builders. Every one of them is unitary; the Fourier sign convention is
// F|y> = M^{-1/2} sum_z omega^{+yz} |z>.

Matrix fourier_matrix(std::size_t modulus);
Matrix fourier_inverse_matrix(std::size_t modulus);
/// T_z : |y> -> |y + z mod M>
Matrix translate_matrix(std::size_t modulus, std::int64_t shift);
/// R_{k,I} : |y> -> omega^{ky} |y>
Matrix phase_by_value_matrix(std::size_t modulus, std::int64_t k);
/// S_{k,I} : |y> -> omega^{ky} |-y mod M>
Matrix reflect_phase_matrix(std::size_t modulus, std::int64_t k);

/// One of the single-segment primitives, with its parameter reduced mod dim.
class PrimitiveOp {
  public:
    enum class Kind { Fourier, FourierInverse, Translate, PhaseByValue, ReflectPhase };

    static PrimitiveOp fourier(std::size_t dim) { return {Kind::Fourier, 0, dim}; }
    static PrimitiveOp fourier_inverse(std::size_t dim) { return {Kind::FourierInverse, 0, dim}; }
    static PrimitiveOp translate(std::size_t dim, std::int64_t z) { return {Kind::Translate, z, dim}; }
    static PrimitiveOp phase_by_value(std::size_t dim, std::int64_t k) { return {Kind::PhaseByValue, k, dim}; }
    static PrimitiveOp reflect_phase(std::size_t dim, std::int64_t k) { return {Kind::ReflectPhase, k, dim}; }

    Kind kind() const { return kind_; }
    std::size_t param() const { return param_; }
    std::size_t dim() const { return dim_; }

    /// The operator's inverse as another primitive.
    PrimitiveOp adjoint() const;
    std::string describe() const;

    bool operator==(const PrimitiveOp &) const = default;

  private:
    PrimitiveOp(Kind kind, std::int64_t param, std::size_t dim);

    Kind kind_;
    std::size_t param_;
    std::size_t dim_;
};

Matrix build(const PrimitiveOp &op);

/// Applies `op` to one segment. Translate, PhaseByValue and ReflectPhase go
/// through the monomial fast path; the Fourier pair is applied densely.
StateVector apply(const StateVector &state, std::string_view segment, const PrimitiveOp &op);

}  // namespace phasekit
