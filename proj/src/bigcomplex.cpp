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

#include "cmhl/bigcomplex.hpp"

namespace cmhl {

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal d = norm(b);
    if (d.is_zero()) throw DomainError("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigReal abs(const BigComplex& z) {
    BigReal r(std::max(z.re.prec(), z.im.prec()));
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

BigComplex exp(const BigComplex& z) {
    BigReal m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

BigComplex log(const BigComplex& z) {
    if (z.is_zero()) throw DomainError("log of zero");
    return {log(abs(z)), atan2(z.im, z.re)};
}

BigComplex pow(const BigReal& base, const BigComplex& z) {
    BigReal lb = log(base); // requires base > 0
    return exp(BigComplex(z.re * lb, z.im * lb));
}

BigComplex unit_root(const BigRat& turns, const PrecisionContext& ctx) {
    BigRat t = turns.frac_mod1();
    BigReal angle = BigReal::of(t, ctx) * mul_2si(const_pi(ctx), 1);
    return {cos(angle), sin(angle)};
}

} // namespace cmhl
