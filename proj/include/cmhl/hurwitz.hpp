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

#ifndef CMHL_HURWITZ_HPP
#define CMHL_HURWITZ_HPP

#include "cmhl/bigcomplex.hpp"

namespace cmhl {

// Hurwitz zeta(s, a) for s != 1, a in (0, 1], by Euler-Maclaurin:
// N = max(ceil(0.35 * bits), ceil(|s|) + 10) initial terms, Bernoulli
// corrections added until the first omitted term drops below
// 2^-(bits + guard).  The s-derivative comes from differentiating the
// same expansion termwise, never from finite differences.
BigComplex hurwitz_zeta(const BigComplex& s, const BigReal& a,
                        const PrecisionContext& ctx);
BigComplex hurwitz_zeta_ds(const BigComplex& s, const BigReal& a,
                           const PrecisionContext& ctx);

// Both in one Euler-Maclaurin pass (the evaluators above share this).
struct HurwitzPair {
    BigComplex value;
    BigComplex ds;
};
HurwitzPair hurwitz_zeta_pair(const BigComplex& s, const BigReal& a,
                              const PrecisionContext& ctx);

} // namespace cmhl

#endif
