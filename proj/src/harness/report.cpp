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

#include "phasekit/harness/report.hpp"

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>

#include "phasekit/rng.hpp"

namespace phasekit::harness {

void Tolerances::set(std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) {
        throw std::invalid_argument("tolerance override must be key=value, got '" + std::string(assignment) + "'");
    }
    const std::string key(assignment.substr(0, eq));
    const std::string text(assignment.substr(eq + 1));
    char *end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(value) || value < 0.0) {
        throw std::invalid_argument("bad tolerance value '" + text + "'");
    }
    if (key == "exact") {
        exact = value;
    } else if (key == "matrix") {
        matrix = value;
    } else if (key == "eigen") {
        eigen = value;
    } else if (key == "distinct") {
        distinct = value;
    } else {
        throw std::invalid_argument("unknown tolerance '" + key + "' (expected exact, matrix, eigen or distinct)");
    }
}

nlohmann::json Tolerances::to_json() const {
    return {{"exact", exact}, {"matrix", matrix}, {"eigen", eigen}, {"distinct", distinct}};
}

const CaseResult &VerificationReport::add(std::string name, nlohmann::json parameters, double measured, double bound,
                                          Relation relation) {
    const bool pass = std::isfinite(measured) && (relation == Relation::AtMost ? measured <= bound : measured > bound);
    cases_.push_back(CaseResult{std::move(name), std::move(parameters), measured, bound, relation, pass});
    return cases_.back();
}

void VerificationReport::absorb(const VerificationReport &other) {
    for (const auto &c : other.cases_) {
        auto copy = c;
        copy.name = other.suite_ + "/" + c.name;
        cases_.push_back(std::move(copy));
    }
}

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    std::size_t n = 0;
    for (const auto &c : cases_) {
        n += c.pass ? 0 : 1;
    }
    return n;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto &c : cases_) {
        cases.push_back({{"name", c.name},
                         {"parameters", c.parameters.is_null() ? nlohmann::json::object() : c.parameters},
                         {"measured", c.measured},
                         {"bound", c.bound},
                         {"relation", c.relation == Relation::AtMost ? "<=" : ">"},
                         {"pass", c.pass}});
    }
    return {{"suite", suite_},
            {"seed", seed_},
            {"tolerances", tolerances_.to_json()},
            {"versions", version_info()},
            {"cases", std::move(cases)},
            {"case_count", cases_.size()},
            {"failures", failures()},
            {"pass", passed()}};
}

nlohmann::json version_info() {
    return {{"phasekit", "0.1.0"},
            {"rng", Rng::kName},
            {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                          std::to_string(EIGEN_MINOR_VERSION)},
            {"report_format", 1}};
}

}  // namespace phasekit::harness
