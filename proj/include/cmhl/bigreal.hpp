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

#ifndef CMHL_BIGREAL_HPP
#define CMHL_BIGREAL_HPP

#include <mpfr.h>

#include <string>

#include "cmhl/gmp_val.hpp"
#include "cmhl/precision.hpp"

namespace cmhl {

// Arbitrary-precision real scalar.  Backed by MPFR with round-to-nearest;
// every value carries its own mantissa precision and binary operations
// round at the larger operand precision, so results are deterministic
// functions of (inputs, precision).
class BigReal {
public:
    BigReal() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit BigReal(long prec_bits) {
        mpfr_init2(v_, prec_bits);
        mpfr_set_zero(v_, 1);
    }
    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    long prec() const { return mpfr_get_prec(v_); }

    static BigReal of(long x, const PrecisionContext& ctx) {
        BigReal r(ctx.work_bits());
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static BigReal of(const BigInt& x, const PrecisionContext& ctx) {
        BigReal r(ctx.work_bits());
        mpfr_set_z(r.v_, x.raw(), MPFR_RNDN);
        return r;
    }
    static BigReal of(const BigRat& x, const PrecisionContext& ctx) {
        BigReal r(ctx.work_bits());
        mpfr_set_q(r.v_, x.raw(), MPFR_RNDN);
        return r;
    }
    static BigReal ratio(long num, long den, const PrecisionContext& ctx) {
        BigReal r = of(num, ctx);
        mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
        return r;
    }
    static BigReal parse(const std::string& s, const PrecisionContext& ctx) {
        BigReal r(ctx.work_bits());
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw DomainError("unparsable decimal literal: " + s);
        return r;
    }
    // 2^e at context precision.
    static BigReal pow2(long e, const PrecisionContext& ctx) {
        BigReal r = of(1, ctx);
        mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sgn() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    BigInt round_to_int() const {
        BigInt z;
        mpfr_get_z(z.raw(), v_, MPFR_RNDN);
        return z;
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a) {
        BigReal r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    BigReal& operator+=(const BigReal& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigReal& operator-=(const BigReal& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigReal& operator*=(const BigReal& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend bool operator==(const BigReal& a, const BigReal& b) {
        return mpfr_cmp(a.v_, b.v_) == 0;
    }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
    friend bool operator<(const BigReal& a, const BigReal& b) {
        return mpfr_cmp(a.v_, b.v_) < 0;
    }
    friend bool operator<=(const BigReal& a, const BigReal& b) {
        return mpfr_cmp(a.v_, b.v_) <= 0;
    }
    friend bool operator>(const BigReal& a, const BigReal& b) { return b < a; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return b <= a; }

private:
    mpfr_t v_;
};

BigReal operator/(const BigReal& a, const BigReal& b);

// Elementary functions.  Results are computed at the argument's precision
// and are correct to well under 4 ulp (MPFR rounds each to nearest).
BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal cot(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow(const BigReal& base, const BigReal& e);
BigReal pow_si(const BigReal& base, long e);
BigReal floor(const BigReal& x);
BigReal mul_2si(const BigReal& x, long e);

BigReal const_pi(const PrecisionContext& ctx);
BigReal const_euler_gamma(const PrecisionContext& ctx);

BigReal min(const BigReal& a, const BigReal& b);
BigReal max(const BigReal& a, const BigReal& b);

// a and b agree to within k units in the last place of the coarser operand.
bool within_ulps(const BigReal& a, const BigReal& b, long k);

// Rounds a copy of x to `bits` of mantissa.
BigReal round_to(const BigReal& x, long bits);

// Deterministic full-precision decimal rendering, used verbatim in JSON
// and CSV output.  Format: -d.ddd...e[+-]xx (or "0").
std::string to_decimal_string(const BigReal& x);

} // namespace cmhl

#endif
