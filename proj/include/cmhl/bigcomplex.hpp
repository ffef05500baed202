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

#ifndef CMHL_BIGCOMPLEX_HPP
#define CMHL_BIGCOMPLEX_HPP

#include "cmhl/bigreal.hpp"

namespace cmhl {

// Complex scalar as a (re, im) pair of BigReal.
struct BigComplex {
    BigReal re;
    BigReal im;

    BigComplex() = default;
    explicit BigComplex(BigReal r) : re(std::move(r)), im(BigReal(re.prec())) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

    static BigComplex of(long r, const PrecisionContext& ctx) {
        return BigComplex(BigReal::of(r, ctx), BigReal::of(0, ctx));
    }
    static BigComplex i_unit(const PrecisionContext& ctx) {
        return BigComplex(BigReal::of(0, ctx), BigReal::of(1, ctx));
    }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigReal& a, const BigComplex& b) {
        return {a * b.re, a * b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigReal& b) { return b * a; }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator/(const BigComplex& a, const BigReal& b) {
        return {a.re / b, a.im / b};
    }
    BigComplex& operator+=(const BigComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    BigComplex& operator-=(const BigComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
};

BigComplex conj(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigReal norm(const BigComplex& z); // |z|^2
BigComplex exp(const BigComplex& z);
// Principal branch.
BigComplex log(const BigComplex& z);
// base^z for a positive real base: exp(z * log(base)).
BigComplex pow(const BigReal& base, const BigComplex& z);
// e^{2*pi*i*t} for an exact rational turn t.
BigComplex unit_root(const BigRat& turns, const PrecisionContext& ctx);

} // namespace cmhl

#endif
