/*
   Copyright 2026 brauer-fusion contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BRAUER_REPORT_HPP
#define BRAUER_REPORT_HPP

#include <string>
#include <vector>

namespace brauer {

/// One verification check: name, parameter string, outcome.  residual holds
/// the max absolute residual numerator for matrix checks (must be "0").
struct CheckResult {
    std::string name;
    std::string params;
    bool pass = false;
    std::string residual;
};

struct Report {
    std::vector<CheckResult> checks;
    void add(std::string name, std::string params, bool pass, std::string residual = "") {
        checks.push_back({std::move(name), std::move(params), pass, std::move(residual)});
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void merge(const Report& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }
};

} // namespace brauer

#endif
