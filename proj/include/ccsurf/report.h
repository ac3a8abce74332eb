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

#ifndef CCSURF_REPORT_H
#define CCSURF_REPORT_H

#include <string>
#include <vector>

namespace ccsurf {

struct CheckResult {
    std::string name;
    bool passed = true;
    /// First offending element on failure, or a short summary on success.
    std::string detail;
};

/// Ordered list of named pass/fail checks. Failures are data, not faults.
class ValidationReport {
   public:
    void add(std::string name, bool passed, std::string detail = {});
    void append(const ValidationReport& other, const std::string& prefix = {});

    const std::vector<CheckResult>& checks() const { return checks_; }
    bool all_passed() const;
    /// nullptr when absent.
    const CheckResult* find(const std::string& name) const;
    std::vector<std::string> failures() const;

    std::string to_text() const;
    std::string to_json() const;

   private:
    std::vector<CheckResult> checks_;
};

}  // namespace ccsurf

#endif
