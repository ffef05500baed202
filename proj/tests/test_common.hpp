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

#ifndef CMHL_TESTS_COMMON_HPP
#define CMHL_TESTS_COMMON_HPP

#include "doctest.h"

#include "cmhl/bigcomplex.hpp"

namespace cmhl_tests {

inline const cmhl::PrecisionContext& C() {
    static cmhl::PrecisionContext ctx(256);
    return ctx;
}

// decimal tolerance literal at the shared context
inline cmhl::BigReal T(const char* s) { return cmhl::BigReal::parse(s, C()); }

inline void check_near(const cmhl::BigReal& a, const cmhl::BigReal& b,
                       const char* tol) {
    CHECK(cmhl::abs(a - b) < T(tol));
}

inline void check_near(const cmhl::BigComplex& a, const cmhl::BigComplex& b,
                       const char* tol) {
    CHECK(cmhl::abs(a - b) < T(tol));
}

} // namespace cmhl_tests

#endif
