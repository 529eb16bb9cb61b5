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
#include <string>
#include <string_view>
#include <vector>

#include "phasekit/harness/report.hpp"

namespace phasekit::harness {

/// primitives, gadget, phase-transform, mixed, optimality, apps, all
const std::vector<std::string> &known_suites();

/// Runs one suite. Throws std::invalid_argument for an unknown name.
VerificationReport run_suite(std::string_view suite, std::uint64_t seed, const Tolerances &tolerances);

}  // namespace phasekit::harness
