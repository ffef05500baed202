// Copyright (c) 2026 The cmhl authors
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

#ifndef CMHL_TOOLS_VERIFY_SUITES_HPP
#define CMHL_TOOLS_VERIFY_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace cmhl::verify {

struct CaseResult {
    std::string name;
    bool pass = false;
    std::string detail; // residuals, recovered constants, ...
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CaseResult> cases;
    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
};

struct SuiteParams {
    long prec = 256;
    std::uint64_t seed = 1;
    int trials = 0;                     // 0: suite default
    std::vector<std::uint64_t> moduli;  // empty: suite default
};

// The identity suites behind `cmhl verify <name>`.  Tolerances are pinned
// here, not configurable.
SuiteReport run_functional_equation(const SuiteParams& p);
SuiteReport run_cotangent(const SuiteParams& p);
SuiteReport run_half_sum(const SuiteParams& p);
SuiteReport run_waslem(const SuiteParams& p);
SuiteReport run_system_vs_character(const SuiteParams& p);
SuiteReport run_torsion(const SuiteParams& p);
SuiteReport run_invariance(const SuiteParams& p);

// planted-relation recovery (used by the acceptance gate)
SuiteReport run_pslq_planted(const SuiteParams& p);

const std::vector<std::string>& suite_names(); // CLI-selectable names
SuiteReport run_suite(const std::string& name, const SuiteParams& p);

} // namespace cmhl::verify

#endif
