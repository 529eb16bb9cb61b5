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

#include <string>

#include <json.hpp>

namespace phasekit::harness {

/// Deterministic JSON text: keys sorted, every floating-point number printed
/// with 17 significant digits ("%.17g"), non-finite numbers as null.
/// `indent < 0` gives a single line.
std::string dump_canonical(const nlohmann::json &value, int indent = 2);

}  // namespace phasekit::harness
