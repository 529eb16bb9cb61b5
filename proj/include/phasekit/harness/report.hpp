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

#include <json.hpp>

namespace phasekit::harness {

/// Named tolerances a verification run uses; overridable from the command line.
struct Tolerances {
    double exact = 1e-12;
    double matrix = 1e-10;
    double eigen = 1e-9;
    /// Minimum separation that counts as "distinct" in the optimality check.
    double distinct = 1e-6;

    /// Applies "key=value"; throws std::invalid_argument on a bad key or value.
    void set(std::string_view assignment);
    nlohmann::json to_json() const;
};

/// How a case's measured value is compared to its bound.
enum class Relation { AtMost, Above };

struct CaseResult {
    std::string name;
    nlohmann::json parameters;
    double measured;
    double bound;
    Relation relation;
    bool pass;
};

class VerificationReport {
  public:
    VerificationReport(std::string suite, std::uint64_t seed, Tolerances tolerances)
        : suite_(std::move(suite)), seed_(seed), tolerances_(tolerances) {}

    /// Records a case; pass is measured <= bound (AtMost) or measured > bound (Above).
    const CaseResult &add(std::string name, nlohmann::json parameters, double measured, double bound,
                          Relation relation = Relation::AtMost);
    /// Appends another report's cases, prefixing their names with its suite.
    void absorb(const VerificationReport &other);

    const std::string &suite() const { return suite_; }
    std::uint64_t seed() const { return seed_; }
    const Tolerances &tolerances() const { return tolerances_; }
    const std::vector<CaseResult> &cases() const { return cases_; }
    bool passed() const;
    std::size_t failures() const;

    nlohmann::json to_json() const;

  private:
    std::string suite_;
    std::uint64_t seed_;
    Tolerances tolerances_;
    std::vector<CaseResult> cases_;
};

/// Tool metadata included in every report.
nlohmann::json version_info();

}  // namespace phasekit::harness
