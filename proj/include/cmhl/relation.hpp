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

#ifndef CMHL_RELATION_HPP
#define CMHL_RELATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "cmhl/bigreal.hpp"

namespace cmhl {

struct PslqResult {
    bool found = false;
    std::vector<BigInt> coeffs; // when found: |sum m_i v_i| < threshold
    BigReal dot;                // the achieved |sum m_i v_i|
    // when not found: certified lower bound on the Euclidean norm of any
    // relation (no relation smaller than this exists)
    BigReal exclusion_bound;
    long iterations = 0;
};

// Standard PSLQ with gamma = 2/sqrt(3), detection threshold 2^-(bits/2),
// iteration cap 10 * len * bits.  Requires >= 2 values and bits >= 128.
// A candidate whose coefficients exceed 2^max_coeff_bits signals that the
// precision budget is spent chasing pseudo-relations; the run stops and
// reports NONE together with the certified exclusion bound.
PslqResult pslq(const std::vector<BigReal>& values, const PrecisionContext& ctx,
                long max_coeff_bits = 0 /* 0: bits/8 */);

// Continued-fraction convergent p/q with q <= den_bound and
// |x - p/q| < 1 / (2^(bits/3) q^2), or nullopt.
std::optional<BigRat> rational_recover(const BigReal& x, const BigInt& den_bound,
                                       const PrecisionContext& ctx);

struct LogSpanResult {
    bool member = false;
    // label -> rational coefficient, in basis order
    std::vector<std::pair<std::string, BigRat>> coeffs;
    BigReal residual;
    BigReal exclusion_bound; // certified when member == false
};

// Membership of x in the span over Q of {log p} and {sin(2 pi j / n) log p}
// for p in `primes`, with the sine set pruned of Q-linear dependencies.
LogSpanResult logspan_member(const BigReal& x, std::uint64_t n,
                             const std::vector<std::uint64_t>& primes,
                             const PrecisionContext& ctx,
                             long coeff_bound = 10000);

} // namespace cmhl

#endif
