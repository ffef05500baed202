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

#include "cmhl/hurwitz.hpp"

#include <cmath>

#include "cmhl/bernoulli.hpp"

namespace cmhl {

namespace {

// (base)^{-s} together with its s-derivative -log(base) * base^{-s}.
struct PowDs {
    BigComplex value;
    BigComplex ds;
};

PowDs pow_neg_s(const BigReal& base, const BigComplex& s, const PrecisionContext& ctx) {
    BigReal lb = log(base);
    BigComplex v = exp(BigComplex(-(s.re * lb), -(s.im * lb)));
    return {v, BigComplex(-lb) * v};
}

} // namespace

HurwitzPair hurwitz_zeta_pair(const BigComplex& s, const BigReal& a,
                              const PrecisionContext& ctx) {
    if (a.sgn() <= 0 || a > BigReal::of(1, ctx))
        throw DomainError("hurwitz_zeta requires a in (0, 1]");
    if (s.im.is_zero() && s.re == BigReal::of(1, ctx))
        throw PoleError("hurwitz_zeta pole at s = 1");

    const BigReal one = BigReal::of(1, ctx);
    const BigReal tiny = BigReal::pow2(-ctx.work_bits(), ctx);

    double smod = abs(s).to_double();
    long n_initial = std::max<long>(static_cast<long>(0.35 * ctx.bits) + 1,
                                    static_cast<long>(std::ceil(smod)) + 10);

    BigComplex sum = BigComplex::of(0, ctx);
    BigComplex sum_ds = BigComplex::of(0, ctx);
    for (long k = 0; k < n_initial; ++k) {
        PowDs t = pow_neg_s(a + BigReal::of(k, ctx), s, ctx);
        sum += t.value;
        sum_ds += t.ds;
    }

    BigReal na = a + BigReal::of(n_initial, ctx);
    BigReal log_na = log(na);
    PowDs na_pow = pow_neg_s(na, s, ctx); // (N+a)^{-s}, d/ds

    // (N+a)^{1-s} / (s-1) and its derivative
    BigComplex s_minus_1 = s - BigComplex::of(1, ctx);
    BigComplex na_1ms = na * na_pow.value;
    BigComplex tail = na_1ms / s_minus_1;
    BigComplex tail_ds = (BigComplex(-log_na) * na_1ms) / s_minus_1
                         - na_1ms / (s_minus_1 * s_minus_1);

    sum += tail + mul_2si(one, -1) * na_pow.value;
    sum_ds += tail_ds + mul_2si(one, -1) * na_pow.ds;

    // Bernoulli corrections: T_j = B_{2j}/(2j)! * poch(s, 2j-1) * (N+a)^{-s-2j+1}
    // with the Pochhammer pair (P, P') advanced by P <- P * (s+k).
    BigComplex poch = BigComplex::of(1, ctx);
    BigComplex poch_ds = BigComplex::of(0, ctx);
    BigReal fact = BigReal::of(1, ctx); // (2j)!
    BigReal na_inv = one / na;
    BigComplex base_pow = na_pow.value;         // will hold (N+a)^{-s-2j+1}
    BigComplex base_pow_ds = na_pow.ds;
    const unsigned max_j = 4 * static_cast<unsigned>(ctx.work_bits());
    bool converged = false;
    for (unsigned j = 1; j <= max_j; ++j) {
        // advance (s)_{2j-1}: multiply the two factors (s+2j-3), (s+2j-2)
        if (j == 1) {
            poch = s;
            poch_ds = BigComplex::of(1, ctx);
        } else {
            for (long off = 2 * static_cast<long>(j) - 3;
                 off <= 2 * static_cast<long>(j) - 2; ++off) {
                BigComplex f = s + BigComplex::of(off, ctx);
                poch_ds = poch_ds * f + poch;
                poch = poch * f;
            }
        }
        fact *= BigReal::of(2L * j, ctx) * BigReal::of(2L * j - 1, ctx);
        // exponent goes -s, -s-1, -s-3, -s-5, ...
        if (j == 1) {
            base_pow = base_pow * na_inv;
            base_pow_ds = base_pow_ds * na_inv;
        } else {
            BigReal na_inv2 = na_inv * na_inv;
            base_pow = base_pow * na_inv2;
            base_pow_ds = base_pow_ds * na_inv2;
        }
        BigReal coeff = BigReal::of(bernoulli_even(j), ctx) / fact;
        BigComplex term = coeff * (poch * base_pow);
        BigComplex term_ds = coeff * (poch_ds * base_pow + poch * base_pow_ds);
        sum += term;
        sum_ds += term_ds;
        if (abs(term) < tiny && abs(term_ds) < tiny) {
            converged = true;
            break;
        }
    }
    if (!converged) throw DomainError("Euler-Maclaurin tail failed to converge");
    return {sum, sum_ds};
}

BigComplex hurwitz_zeta(const BigComplex& s, const BigReal& a,
                        const PrecisionContext& ctx) {
    return hurwitz_zeta_pair(s, a, ctx).value;
}

BigComplex hurwitz_zeta_ds(const BigComplex& s, const BigReal& a,
                           const PrecisionContext& ctx) {
    return hurwitz_zeta_pair(s, a, ctx).ds;
}

} // namespace cmhl
