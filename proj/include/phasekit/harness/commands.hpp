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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace phasekit::harness {

/// Process exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Where a report goes and how it is formatted.
struct OutputOptions {
    /// Empty means the stdout stream passed to the command.
    std::string out_path;
    /// Single-line JSON instead of indented.
    bool compact = false;
};

struct VerifyOptions {
    std::string suite = "all";
    std::uint64_t seed = 1;
    /// "key=value" tolerance overrides.
    std::vector<std::string> tolerances;
    OutputOptions output;
};

struct DemoOptions {
    std::string app;  // dj, grover, ck
    std::string table_path;
    /// log2 of the domain size for generated tables.
    unsigned n = 2;
    /// constant0, constant1 or balanced (dj only).
    std::string function = "balanced";
    std::optional<std::size_t> target;
    std::size_t solutions = 1;
    std::optional<std::size_t> iterations;
    std::string ancilla = "random";  // random, zero, mixed
    std::string gamma = "pi";
    std::string beta = "pi";
    std::size_t pivot = 0;
    unsigned mbits = 4;
    std::uint64_t seed = 1;
    OutputOptions output;
};

struct GadgetOptions {
    std::size_t modulus = 4;
    std::int64_t k = 1;
    std::int64_t z = 1;
    std::string variant = "comm-a";
    std::uint64_t seed = 1;
    OutputOptions output;
};

struct BenchOptions {
    unsigned max_n = 10;
    unsigned max_m = 4;
    unsigned reps = 3;
    std::uint64_t seed = 1;
    /// Amplitude budget; 0 means PHASEKIT_MEM_BUDGET or 2^24.
    std::uint64_t budget = 0;
    OutputOptions output;
};

/// Default amplitude budget for bench.
inline constexpr std::uint64_t kDefaultAmplitudeBudget = std::uint64_t{1} << 24;

/// Each command writes its JSON to options.output (or `out`) and a one-line
/// summary to `err`, and returns an exit code.
int cmd_verify(const VerifyOptions &options, std::ostream &out, std::ostream &err);
int cmd_demo(const DemoOptions &options, std::ostream &out, std::ostream &err);
int cmd_gadget(const GadgetOptions &options, std::ostream &out, std::ostream &err);
int cmd_bench(const BenchOptions &options, std::ostream &out, std::ostream &err);

/// Parses "pi", "-pi", "pi/2", "2*pi", "3pi/4" or a plain number, in radians.
/// Throws std::invalid_argument.
double parse_angle(const std::string &text);

/// Full command line entry point.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace phasekit::harness
