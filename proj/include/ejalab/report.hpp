// Copyright 2026 The ejalab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ejalab/core.hpp"

namespace ejalab::report {

enum class Status { pass, fail, skipped };

inline std::string status_name(Status s) {
    switch (s) {
        case Status::pass:
            return "pass";
        case Status::fail:
            return "fail";
        default:
            return "skipped";
    }
}

struct CheckResult {
    std::string name;
    std::string anchor;
    Status status = Status::skipped;
    double residual = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    std::string detail;
};

struct VerificationReport {
    inline static constexpr int kVersion = 1;

    std::string suite;
    std::uint64_t seed = 0;
    Tolerances tolerances;
    std::vector<CheckResult> checks;
    std::optional<double> wall_time;

    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void append(const VerificationReport &other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    bool passed() const {
        return std::none_of(checks.begin(), checks.end(), [](const auto &c) { return c.status == Status::fail; });
    }
    int count(Status s) const {
        return (int)std::count_if(checks.begin(), checks.end(), [&](const auto &c) { return c.status == s; });
    }

    std::vector<CheckResult> sorted() const {
        auto out = checks;
        std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.name < b.name; });
        return out;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["report_version"] = kVersion;
        j["suite"] = suite;
        j["seed"] = seed;
        j["tolerances"] = {{"alg", tolerances.alg}, {"eig", tolerances.eig}, {"lp", tolerances.lp}};
        j["passed"] = passed();
        j["summary"] = {{"pass", count(Status::pass)}, {"fail", count(Status::fail)},
                        {"skipped", count(Status::skipped)}};
        auto arr = nlohmann::ordered_json::array();
        for (const auto &c : sorted()) {
            arr.push_back({{"name", c.name},
                           {"anchor", c.anchor},
                           {"status", status_name(c.status)},
                           {"residual", c.residual},
                           {"samples", c.samples},
                           {"seed", c.seed},
                           {"detail", c.detail}});
        }
        j["checks"] = arr;
        if (wall_time) {
            j["wall_time_s"] = *wall_time;
        }
        return j;
    }

    std::string to_markdown() const {
        std::ostringstream os;
        os << "# " << suite << "\n\n";
        os << "seed " << seed << ", tolerances alg " << tolerances.alg << " / eig " << tolerances.eig << " / lp "
           << tolerances.lp << "\n\n";
        os << "| check | anchor | status | residual | samples | detail |\n";
        os << "|---|---|---|---|---|---|\n";
        for (const auto &c : sorted()) {
            os << "| " << c.name << " | " << c.anchor << " | " << status_name(c.status) << " | " << c.residual
               << " | " << c.samples << " | " << c.detail << " |\n";
        }
        os << "\n" << count(Status::pass) << " passed, " << count(Status::fail) << " failed, "
           << count(Status::skipped) << " skipped\n";
        if (wall_time) {
            os << "wall time " << *wall_time << " s\n";
        }
        return os.str();
    }
};

/// Per-check seed: FNV-1a of the check name mixed with the run seed.
inline std::uint64_t derive_seed(std::uint64_t seed, const std::string &name) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : name) {
        h = (h ^ c) * 1099511628211ull;
    }
    return h ^ (seed * 0x9E3779B97F4A7C15ull);
}

}  // namespace ejalab::report
