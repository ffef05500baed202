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

#include "cmhl/bigreal.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace cmhl {

BigReal operator/(const BigReal& a, const BigReal& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    BigReal r(std::max(a.prec(), b.prec()));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

namespace {
BigReal unary(const BigReal& x, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
    BigReal r(x.prec());
    fn(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
} // namespace

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }

BigReal sqrt(const BigReal& x) {
    if (x.sgn() < 0) throw DomainError("sqrt of negative value");
    return unary(x, mpfr_sqrt);
}

BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }

BigReal log(const BigReal& x) {
    if (x.sgn() <= 0) throw DomainError("log of non-positive value");
    return unary(x, mpfr_log);
}

BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }

BigReal cot(const BigReal& x) {
    BigReal r(x.prec());
    mpfr_cot(r.raw(), x.raw(), MPFR_RNDN);
    if (!r.is_finite()) throw DomainError("cot at a pole");
    return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
    if (x.is_zero() && y.is_zero()) throw DomainError("atan2(0, 0)");
    BigReal r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigReal pow(const BigReal& base, const BigReal& e) {
    if (base.sgn() <= 0) throw DomainError("pow requires positive base");
    BigReal r(std::max(base.prec(), e.prec()));
    mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
    return r;
}

BigReal pow_si(const BigReal& base, long e) {
    BigReal r(base.prec());
    mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
    if (!r.is_finite()) throw DomainError("pow_si overflow or pole");
    return r;
}

BigReal floor(const BigReal& x) {
    BigReal r(x.prec());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

BigReal mul_2si(const BigReal& x, long e) {
    BigReal r(x.prec());
    mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

BigReal const_pi(const PrecisionContext& ctx) {
    BigReal r(ctx.work_bits());
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

BigReal const_euler_gamma(const PrecisionContext& ctx) {
    BigReal r(ctx.work_bits());
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

BigReal min(const BigReal& a, const BigReal& b) { return a <= b ? a : b; }
BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }

bool within_ulps(const BigReal& a, const BigReal& b, long k) {
    if (a == b) return true;
    long prec = std::min(a.prec(), b.prec());
    BigReal diff = abs(a - b);
    // ulp of the larger magnitude at the coarser precision
    BigReal m = max(abs(a), abs(b));
    if (m.is_zero()) return true;
    mpfr_exp_t e = mpfr_get_exp(m.raw());
    BigReal ulp(prec);
    mpfr_set_si(ulp.raw(), 1, MPFR_RNDN);
    mpfr_mul_2si(ulp.raw(), ulp.raw(), e - prec, MPFR_RNDN);
    return diff <= BigReal::of(k, PrecisionContext(std::max(64L, prec), 0)) * ulp;
}

BigReal round_to(const BigReal& x, long bits) {
    BigReal r(bits);
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

std::string to_decimal_string(const BigReal& x) {
    if (x.is_zero()) return "0";
    if (!x.is_finite()) throw DomainError("cannot serialize a non-finite value");
    // ceil(prec * log10(2)) + 2 digits round-trips the mantissa.
    size_t digits = static_cast<size_t>(x.prec() * 0.30103) + 2;
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, x.raw(), MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant = mant.substr(1);
    }
    // strip trailing zeros, keep at least one digit
    size_t last = mant.find_last_not_of('0');
    mant = mant.substr(0, std::max<size_t>(last + 1, 1));
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    long ee = static_cast<long>(e) - 1; // mpfr: 0.mant * 10^e
    char buf[32];
    std::snprintf(buf, sizeof(buf), "e%+ld", ee);
    return out + buf;
}

} // namespace cmhl
