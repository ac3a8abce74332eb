// Copyright 2026 The ccsurf Authors
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

#include "ccsurf/report.h"

#include <algorithm>

#include "json.hpp"

namespace ccsurf {

void ValidationReport::add(std::string name, bool passed, std::string detail) {
    checks_.push_back({std::move(name), passed, std::move(detail)});
}

void ValidationReport::append(const ValidationReport& other, const std::string& prefix) {
    for (const auto& c : other.checks_) {
        checks_.push_back({prefix + c.name, c.passed, c.detail});
    }
}

bool ValidationReport::all_passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks_) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

std::vector<std::string> ValidationReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks_) {
        if (!c.passed) {
            out.push_back(c.name + ": " + c.detail);
        }
    }
    return out;
}

std::string ValidationReport::to_text() const {
    std::string s;
    for (const auto& c : checks_) {
        s += c.passed ? "PASS " : "FAIL ";
        s += c.name;
        if (!c.detail.empty()) {
            s += "  (" + c.detail + ")";
        }
        s += '\n';
    }
    s += all_passed() ? "all checks pass\n" : std::to_string(failures().size()) + " check(s) failed\n";
    return s;
}

std::string ValidationReport::to_json() const {
    nlohmann::ordered_json j;
    j["all_passed"] = all_passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks_) {
        j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return j.dump(2) + "\n";
}

}  // namespace ccsurf
