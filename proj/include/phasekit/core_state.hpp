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

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phasekit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Tolerances shared across the library.
namespace tol {
inline constexpr double kExact = 1e-12;   // exact-algebra checks
inline constexpr double kMatrix = 1e-10;  // matrix identities, state invariants
inline constexpr double kEigen = 1e-9;    // anything going through an eigensolver
inline constexpr double kRank = 1e-12;    // eigenvalues at or below this are dropped
}  // namespace tol

struct Segment {
    std::string name;
    std::size_t dim;

    bool operator==(const Segment &) const = default;
};

/// Ordered list of named register segments.
///
/// Flat indices are mixed-radix with the first segment most significant, so a
/// layout [(c, 4), (a, 2)] puts (c=3, a=1) at index 3*2 + 1 = 7.
class RegisterLayout {
  public:
    explicit RegisterLayout(std::vector<Segment> segments);

    std::size_t total_dim() const { return total_dim_; }
    std::size_t segment_count() const { return segments_.size(); }
    const std::vector<Segment> &segments() const { return segments_; }
    const Segment &segment(std::size_t i) const { return segments_.at(i); }

    /// Position of the named segment; throws std::domain_error if absent.
    std::size_t position(std::string_view name) const;
    bool contains(std::string_view name) const;
    std::size_t dim(std::string_view name) const { return segments_[position(name)].dim; }
    /// Product of the dims of every segment after `pos`.
    std::size_t stride(std::size_t pos) const { return strides_[pos]; }

    std::size_t flat_index(std::span<const std::size_t> values) const;
    std::vector<std::size_t> values_of(std::size_t flat) const;

    /// Concatenation; names must stay unique.
    RegisterLayout operator+(const RegisterLayout &other) const;
    bool operator==(const RegisterLayout &other) const { return segments_ == other.segments_; }

  private:
    std::vector<Segment> segments_;
    std::vector<std::size_t> strides_;
    std::size_t total_dim_ = 1;
};

/// Unit-norm amplitude vector over a RegisterLayout. Immutable.
class StateVector {
  public:
    /// Throws std::domain_error on length mismatch and NumericError when the
    /// norm is off by more than tol::kMatrix or an amplitude is not finite.
    StateVector(RegisterLayout layout, std::vector<Complex> amps);

    /// Rescales `amps` to unit norm first. Throws NumericError on a zero vector.
    static StateVector normalized(RegisterLayout layout, std::vector<Complex> amps);

    const RegisterLayout &layout() const { return layout_; }
    std::span<const Complex> amplitudes() const { return amps_; }
    std::size_t size() const { return amps_.size(); }
    Complex operator[](std::size_t i) const { return amps_[i]; }
    double norm() const;

    /// Same amplitudes under a layout with identical dims but different names/split.
    StateVector relabeled(RegisterLayout layout) const;

  private:
    RegisterLayout layout_;
    std::vector<Complex> amps_;
};

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityOperator {
  public:
    /// Validates the invariants at tol::kMatrix; throws NumericError otherwise.
    explicit DensityOperator(Matrix mat);

    std::size_t dim() const { return static_cast<std::size_t>(mat_.rows()); }
    const Matrix &matrix() const { return mat_; }
    /// Eigenvalues in descending order.
    std::vector<double> eigenvalues() const;
    double purity() const;

  private:
    Matrix mat_;
};

struct Purification {
    /// Layout [("ancilla", M), ("reference", r)] with r = rank of the source.
    StateVector joint;
    /// Square roots of the nonzero eigenvalues, descending.
    std::vector<double> schmidt_coeffs;
};

/// Segment names used by purify().
inline constexpr std::string_view kAncillaSegment = "ancilla";
inline constexpr std::string_view kReferenceSegment = "reference";

StateVector basis_state(const RegisterLayout &layout, std::span<const std::size_t> values);
StateVector basis_state(const RegisterLayout &layout, std::initializer_list<std::size_t> values);

/// Normalized i.i.d. complex Gaussians over a single segment named "a".
StateVector random_state(std::size_t dim, std::uint64_t seed);
StateVector random_state(const RegisterLayout &layout, std::uint64_t seed);

/// Mixture of `rank` random orthonormal pure states with weights drawn from
/// [0.5, 1.5) and normalized.
DensityOperator random_density(std::size_t dim, std::size_t rank, std::uint64_t seed);

/// Haar-distributed unitary: Gram-Schmidt on i.i.d. complex Gaussian columns.
Matrix random_unitary(std::size_t dim, std::uint64_t seed);

DensityOperator pure_density(const StateVector &state);

Purification purify(const DensityOperator &rho);

/// Reduced operator on one segment.
DensityOperator partial_trace(const StateVector &state, std::string_view keep);
/// Reduced operator on several segments, ordered as they appear in the layout.
DensityOperator partial_trace(const StateVector &state, std::span<const std::string> keep);

/// Probability of each value of one segment.
std::vector<double> marginal_probabilities(const StateVector &state, std::string_view segment);

/// Entropy in nats; 0 log 0 = 0.
double von_neumann_entropy(const DensityOperator &rho);

/// S(A) + S(B) - S(AB) for a pure state over exactly the two named segments.
double mutual_information(const StateVector &state, std::string_view a, std::string_view b);

/// S(A) + S(B) - S(AB) for two segments of a larger pure state.
double subsystem_mutual_information(const StateVector &state, std::string_view a, std::string_view b);

struct PhaseComparison {
    bool equal;
    /// arg <a|b>, in (-pi, pi].
    double phase;
    /// |<a|b>|
    double overlap;
};

PhaseComparison equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tolerance);

Complex inner_product(const StateVector &a, const StateVector &b);

/// <psi| rho |psi>
double fidelity(const DensityOperator &rho, const StateVector &psi);

/// max_i |a_i - b_i|
double max_abs_diff(const StateVector &a, const StateVector &b);
double max_abs_diff(const Matrix &a, const Matrix &b);

StateVector tensor_product(const StateVector &a, const StateVector &b);

/// Applies a dense unitary to one segment. Throws std::domain_error on a size
/// mismatch and NumericError when `op` is not unitary within tol::kMatrix.
StateVector apply_on_segment(const StateVector &state, std::string_view segment, const Matrix &op);

/// Applies |y> -> phases[y] |targets[y]> on one segment. `targets` must be a
/// permutation and every phase must have unit modulus.
StateVector apply_monomial_on_segment(const StateVector &state, std::string_view segment,
                                      std::span<const std::size_t> targets, std::span<const Complex> phases);

/// Multiplies the amplitude at each value y of `segment` by phases[y].
StateVector apply_diagonal_on_segment(const StateVector &state, std::string_view segment,
                                      std::span<const Complex> phases);

bool is_unitary(const Matrix &m, double tolerance);

namespace detail {
/// apply_on_segment without the unitarity check, for operators built in-library.
StateVector apply_dense_unchecked(const StateVector &state, std::string_view segment, const Matrix &op);
}  // namespace detail

}  // namespace phasekit
