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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "phasekit/core_state.hpp"

namespace phasekit {

/// Tabulated f : Z_N -> Z_M.
class FunctionTable {
  public:
    /// N is values.size(); every entry must lie in [0, M).
    FunctionTable(std::size_t modulus, std::vector<std::size_t> values);

    std::size_t domain_size() const { return values_.size(); }
    std::size_t modulus() const { return modulus_; }
    std::size_t operator()(std::size_t x) const { return values_.at(x); }
    const std::vector<std::size_t> &values() const { return values_; }

    bool operator==(const FunctionTable &) const = default;

  private:
    std::size_t modulus_;
    std::vector<std::size_t> values_;
};

/// Tabulated f : Z_N -> [0, 1).
class RealFunctionTable {
  public:
    explicit RealFunctionTable(std::vector<double> values);

    std::size_t domain_size() const { return values_.size(); }
    double operator()(std::size_t x) const { return values_.at(x); }
    const std::vector<double> &values() const { return values_; }

    bool operator==(const RealFunctionTable &) const = default;

  private:
    std::vector<double> values_;
};

enum class OracleSign : int { Forward = 1, Inverse = -1 };

/// U_f (Forward) or U_f^dag = U_{-f} (Inverse): moves the amplitude at
/// (x, y) to (x, y + sign f(x) mod M), leaving other segments alone.
StateVector apply_oracle(const StateVector &state, std::string_view control, std::string_view ancilla,
                         const FunctionTable &f, OracleSign sign);

/// Dense realization of apply_oracle over a whole layout. Only for cross-checks;
/// refuses layouts larger than 4096.
Matrix oracle_matrix(const RegisterLayout &layout, std::string_view control, std::string_view ancilla,
                     const FunctionTable &f, OracleSign sign);

/// Wraps a table and counts how many times the oracle is applied. One instance
/// per pipeline invocation; not shared.
class CountingOracle {
  public:
    explicit CountingOracle(const FunctionTable &f) : f_(f) {}

    StateVector apply(const StateVector &state, std::string_view control, std::string_view ancilla, OracleSign sign) {
        ++calls_;
        return apply_oracle(state, control, ancilla, f_, sign);
    }

    const FunctionTable &table() const { return f_; }
    std::size_t calls() const { return calls_; }

  private:
    const FunctionTable &f_;
    std::size_t calls_ = 0;
};

/// m-bit truncation f~(x) = floor(f(x) 2^m) into Z_{2^m}.
FunctionTable quantize(const RealFunctionTable &rf, unsigned bits);

/// Boolean table with a single 1 at `marked`.
FunctionTable delta_table(std::size_t domain_size, std::size_t marked);

FunctionTable random_table(std::size_t domain_size, std::size_t modulus, std::uint64_t seed);
RealFunctionTable random_real_table(std::size_t domain_size, std::uint64_t seed);

/// Text format: first non-comment line "N M", then N lines "x y" in any order.
/// '#' starts a comment. Errors carry the 1-based line number.
FunctionTable parse_table(std::string_view text);
/// Same layout with header "N real" and values in [0, 1).
RealFunctionTable parse_real_table(std::string_view text);

std::string serialize_table(const FunctionTable &f);
std::string serialize_table(const RealFunctionTable &f);

/// Reads and parses a file; ParseError messages are prefixed with the path.
FunctionTable load_table(const std::filesystem::path &path);

}  // namespace phasekit
