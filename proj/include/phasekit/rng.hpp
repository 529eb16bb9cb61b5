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

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace phasekit {

/// Seeded generator "phasekit-rng-v1".
///
/// Only the raw std::mt19937_64 stream is used; every derived distribution is
/// spelled out here so another implementation can reproduce it bit for bit:
///   uniform()        (x >> 11) * 2^-53, in [0, 1)
///   below(n)         rejection sampling on x against the largest multiple of n
///   gaussian_pair()  Box-Muller on (1 - u1, u2), returns (r cos t, r sin t)
class Rng {
  public:
    static constexpr const char *kName = "phasekit-rng-v1";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = next();
        while (x >= limit) {
            x = next();
        }
        return x % n;
    }

    std::complex<double> gaussian_pair() {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace phasekit
