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

#include "cmhl/special.hpp"

#include "cmhl/bernoulli.hpp"

namespace cmhl {

namespace {

// Stirling needs x >= roughly work_bits * ln(2) / (2*pi) before the
// asymptotic terms can reach 2^-work_bits; 0.12 * bits + 8 leaves margin.
long shift_threshold(const PrecisionContext& ctx) {
    return static_cast<long>(0.12 * static_cast<double>(ctx.work_bits())) + 8;
}

struct StirlingPair {
    BigReal log_gamma;
    BigReal digamma;
};

// Both Stirling series at large argument z >= threshold:
//   log Gamma(z) = (z - 1/2) log z - z + log(2 pi)/2
//                  + sum_j B_{2j} / (2j (2j-1) z^{2j-1})
//   psi(z)       = log z - 1/(2z) - sum_j B_{2j} / (2j z^{2j})
StirlingPair stirling(const BigReal& z, const PrecisionContext& ctx) {
    const BigReal tiny = BigReal::pow2(-(ctx.work_bits() + 8), ctx);
    BigReal z2inv = BigReal::of(1, ctx) / (z * z);

    BigReal lg_sum = BigReal::of(0, ctx);
    BigReal dg_sum = BigReal::of(0, ctx);
    BigReal zpow = BigReal::of(1, ctx) / z; // z^{-(2j-1)}
    const unsigned max_terms = 4 * static_cast<unsigned>(ctx.work_bits());
    bool converged = false;
    for (unsigned j = 1; j <= max_terms; ++j) {
        BigReal b = BigReal::of(bernoulli_even(j), ctx);
        BigReal lg_term = b * zpow / BigReal::of(2L * j * (2L * j - 1), ctx);
        BigReal dg_term = b * zpow / (z * BigReal::of(2L * j, ctx));
        lg_sum += lg_term;
        dg_sum += dg_term;
        if (abs(lg_term) < tiny && abs(dg_term) < tiny) {
            converged = true;
            break;
        }
        zpow *= z2inv;
    }
    if (!converged) throw DomainError("Stirling series failed to converge");

    BigReal lz = log(z);
    BigReal half = BigReal::ratio(1, 2, ctx);
    BigReal log_2pi = log(mul_2si(const_pi(ctx), 1));
    StirlingPair out{
        (z - half) * lz - z + mul_2si(log_2pi, -1) + lg_sum,
        lz - half / z - dg_sum,
    };
    return out;
}

} // namespace

BigReal log_gamma(const BigReal& x, const PrecisionContext& ctx) {
    if (x.sgn() <= 0) throw DomainError("log_gamma requires x > 0");
    long t = shift_threshold(ctx);
    BigReal thr = BigReal::of(t, ctx);
    long m = 0;
    if (x < thr) m = t - floor(x).to_long(); // x + m >= threshold
    BigReal shifted = x + BigReal::of(m, ctx);
    BigReal lg = stirling(shifted, ctx).log_gamma;
    // log Gamma(x) = log Gamma(x + m) - sum log(x + i)
    BigReal corr = BigReal::of(0, ctx);
    for (long i = 0; i < m; ++i) corr += log(x + BigReal::of(i, ctx));
    return lg - corr;
}

BigReal digamma(const BigReal& x, const PrecisionContext& ctx) {
    if (x.sgn() <= 0) throw DomainError("digamma requires x > 0");
    long t = shift_threshold(ctx);
    BigReal thr = BigReal::of(t, ctx);
    long m = 0;
    if (x < thr) m = t - floor(x).to_long();
    BigReal shifted = x + BigReal::of(m, ctx);
    BigReal dg = stirling(shifted, ctx).digamma;
    // psi(x) = psi(x + m) - sum 1/(x + i)
    BigReal corr = BigReal::of(0, ctx);
    for (long i = 0; i < m; ++i) corr += BigReal::of(1, ctx) / (x + BigReal::of(i, ctx));
    return dg - corr;
}

BigReal gamma(const BigReal& x, const PrecisionContext& ctx) {
    return exp(log_gamma(x, ctx));
}

BigReal gamma_recurrence(const BigReal& x, const PrecisionContext& ctx) {
    if (x.sgn() > 0) return gamma(x, ctx);
    if (x == floor(x)) throw DomainError("gamma at a non-positive integer pole");
    // climb to positive territory
    long m = 1 - x.to_long();
    if (m < 1) m = 1;
    BigReal shifted = x + BigReal::of(m, ctx);
    while (shifted.sgn() <= 0) {
        ++m;
        shifted = x + BigReal::of(m, ctx);
    }
    BigReal g = gamma(shifted, ctx);
    BigReal denom = BigReal::of(1, ctx);
    for (long i = 0; i < m; ++i) denom *= x + BigReal::of(i, ctx);
    return g / denom;
}

} // namespace cmhl
