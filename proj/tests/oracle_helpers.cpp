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

#include "oracle_helpers.hpp"

namespace cmhl::oracle {

namespace {

// floor(scale / x^(2k+1) / (2k+1)) alternating sum, all in integers
BigInt atan_inv_scaled(long x, long scale_bits) {
    BigInt scale(1);
    mpz_mul_2exp(scale.raw(), scale.raw(), scale_bits);
    BigInt xc(x);
    BigInt x2 = xc * xc;
    BigInt t = scale / xc;
    BigInt acc(0);
    long k = 0;
    while (!t.is_zero()) {
        BigInt term = t / BigInt(2 * k + 1);
        if (term.is_zero()) break;
        if (k % 2 == 0)
            acc += term;
        else
            acc -= term;
        t = t / x2;
        ++k;
    }
    return acc;
}

} // namespace

BigReal machin_pi(const PrecisionContext& ctx) {
    long sbits = ctx.work_bits() + 64;
    // pi = 16 atan(1/5) - 4 atan(1/239)
    BigInt v = BigInt(16) * atan_inv_scaled(5, sbits) -
               BigInt(4) * atan_inv_scaled(239, sbits);
    return mul_2si(BigReal::of(v, PrecisionContext(ctx.bits, ctx.guard_bits + 64)),
                   -sbits);
}

BigReal alternating_sum(const std::function<BigReal(long)>& a,
                        const PrecisionContext& ctx) {
    // n terms give error ~ (3 + sqrt(8))^-n
    long n = static_cast<long>(ctx.work_bits() / 2.54) + 8;
    BigReal sqrt8 = sqrt(BigReal::of(8, ctx));
    BigReal three = BigReal::of(3, ctx);
    BigReal dn = pow_si(three + sqrt8, n);
    BigReal d = mul_2si(dn + BigReal::of(1, ctx) / dn, -1);
    BigReal b = BigReal::of(-1, ctx);
    BigReal c = -d;
    BigReal s = BigReal::of(0, ctx);
    for (long k = 0; k < n; ++k) {
        c = b - c;
        s += c * a(k);
        BigReal kk = BigReal::of(k, ctx);
        BigReal nn = BigReal::of(n, ctx);
        b = (kk + nn) * (kk - nn) * b /
            ((kk + BigReal::ratio(1, 2, ctx)) * (kk + BigReal::of(1, ctx)));
    }
    return s / d;
}

BigReal eta(const BigReal& s, const PrecisionContext& ctx) {
    return alternating_sum(
        [&](long k) {
            return pow(BigReal::of(k + 1, ctx), -s);
        },
        ctx);
}

BigReal eta_ds(const BigReal& s, const PrecisionContext& ctx) {
    return alternating_sum(
        [&](long k) {
            BigReal base = BigReal::of(k + 1, ctx);
            return -(log(base) * pow(base, -s));
        },
        ctx);
}

BigReal leibniz_pi(const PrecisionContext& ctx) {
    return mul_2si(alternating_sum(
                       [&](long k) {
                           return BigReal::ratio(1, 2 * k + 1, ctx);
                       },
                       ctx),
                   2);
}

} // namespace cmhl::oracle
