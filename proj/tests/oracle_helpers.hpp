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

// Independent oracles for the test suites.  Everything here deliberately
// avoids the library's own evaluation paths: pi comes from fixed-point
// integer Machin, alternating sums from CVZ acceleration on raw series.

#ifndef CMHL_TESTS_ORACLE_HELPERS_HPP
#define CMHL_TESTS_ORACLE_HELPERS_HPP

#include <functional>

#include "cmhl/bigreal.hpp"

namespace cmhl::oracle {

// pi by Machin's formula in scaled integer arithmetic (no MPFR
// transcendentals involved).
BigReal machin_pi(const PrecisionContext& ctx);

// CVZ acceleration of sum_{k>=0} (-1)^k a(k).
BigReal alternating_sum(const std::function<BigReal(long)>& a,
                        const PrecisionContext& ctx);

// eta(s) = sum (-1)^{k-1} k^{-s} and its s-derivative, both via the
// accelerated raw series (valid at s = 0 as the Abel value).
BigReal eta(const BigReal& s, const PrecisionContext& ctx);
BigReal eta_ds(const BigReal& s, const PrecisionContext& ctx);

// 4 sum (-1)^k / (2k+1), the Leibniz value of pi.
BigReal leibniz_pi(const PrecisionContext& ctx);

} // namespace cmhl::oracle

#endif
