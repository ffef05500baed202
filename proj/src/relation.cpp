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

#include "cmhl/relation.hpp"

#include <algorithm>

#include "cmhl/cyclotomic.hpp"

namespace cmhl {

namespace {

BigReal dot_product(const std::vector<BigReal>& v, const std::vector<BigInt>& m,
                    const PrecisionContext& ctx) {
    BigReal acc = BigReal::of(0, ctx);
    for (size_t i = 0; i < v.size(); ++i) acc += BigReal::of(m[i], ctx) * v[i];
    return acc;
}

} // namespace

PslqResult pslq(const std::vector<BigReal>& values, const PrecisionContext& ctx,
                long max_coeff_bits) {
    const size_t n = values.size();
    if (n < 2) throw DomainError("pslq needs at least 2 values");
    if (ctx.bits < 128) throw PrecisionTooLow("pslq requires >= 128 bits");
    if (max_coeff_bits <= 0) max_coeff_bits = ctx.bits / 8;
    for (const auto& v : values)
        if (!v.is_finite()) throw DomainError("pslq input must be finite");

    const BigReal zero = BigReal::of(0, ctx);
    const BigReal one = BigReal::of(1, ctx);
    const BigReal threshold = BigReal::pow2(-(ctx.bits / 2), ctx);
    const long max_iter = 10 * static_cast<long>(n) * ctx.bits;
    // gamma = 2/sqrt(3)
    const BigReal gamma = BigReal::of(2, ctx) / sqrt(BigReal::of(3, ctx));

    // working copies
    std::vector<BigReal> x;
    x.reserve(n);
    for (const auto& v : values) x.push_back(round_to(v, ctx.work_bits()));

    BigReal xnorm = zero;
    for (const auto& v : x) xnorm += v * v;
    xnorm = sqrt(xnorm);
    if (xnorm.is_zero()) throw DomainError("pslq input is identically zero");

    // partial norms s_k
    std::vector<BigReal> s(n, zero);
    for (size_t k = n; k-- > 0;) {
        BigReal acc = (k + 1 < n) ? s[k + 1] * s[k + 1] : zero;
        acc += x[k] * x[k];
        s[k] = sqrt(acc);
    }
    std::vector<BigReal> y(n);
    for (size_t k = 0; k < n; ++k) y[k] = x[k] / s[0];
    BigReal s0 = s[0];
    for (size_t k = 0; k < n; ++k) s[k] = s[k] / s0;

    // H: n x (n-1) lower trapezoidal
    std::vector<std::vector<BigReal>> H(n, std::vector<BigReal>(n - 1, zero));
    for (size_t j = 0; j < n - 1; ++j) {
        H[j][j] = s[j + 1] / s[j];
        for (size_t i = j + 1; i < n; ++i) H[i][j] = -(y[i] * y[j]) / (s[j] * s[j + 1]);
    }

    std::vector<std::vector<BigInt>> B(n, std::vector<BigInt>(n, BigInt(0)));
    for (size_t i = 0; i < n; ++i) B[i][i] = BigInt(1);

    auto reduce_row = [&](size_t i, size_t j_from) {
        for (size_t j = std::min(i - 1, j_from) + 1; j-- > 0;) {
            if (H[j][j].is_zero()) continue;
            BigReal t = H[i][j] / H[j][j];
            BigInt ti = t.round_to_int();
            if (ti.is_zero()) continue;
            BigReal tr = BigReal::of(ti, ctx);
            y[j] += tr * y[i];
            for (size_t k = 0; k <= j; ++k) H[i][k] -= tr * H[j][k];
            for (size_t k = 0; k < n; ++k) B[k][j].addmul(ti, B[k][i]);
        }
    };

    // initial full reduction
    for (size_t i = 1; i < n; ++i) reduce_row(i, n - 2);

    PslqResult res;
    res.dot = zero;
    res.exclusion_bound = zero;

    // 0: keep going, 1: relation accepted, -1: precision exhausted
    auto detect = [&]() -> int {
        size_t jmin = 0;
        BigReal amin = abs(y[0]);
        for (size_t j = 1; j < n; ++j) {
            BigReal a = abs(y[j]);
            if (a < amin) {
                amin = a;
                jmin = j;
            }
        }
        if (!(amin * xnorm < threshold)) return 0;
        std::vector<BigInt> rel(n);
        for (size_t i = 0; i < n; ++i) rel[i] = B[i][jmin];
        BigReal d = abs(dot_product(values, rel, ctx));
        if (!(d < threshold)) return 0;
        BigReal cap = BigReal::pow2(max_coeff_bits, ctx);
        for (const auto& m : rel)
            if (cap < abs(BigReal::of(m, ctx))) return -1; // pseudo-relation
        res.found = true;
        res.coeffs = std::move(rel);
        res.dot = d;
        return 1;
    };

    if (int st = detect(); st != 0) return res;

    for (long iter = 0; iter < max_iter; ++iter) {
        ++res.iterations;
        // pivot: maximize gamma^i |H_ii|
        size_t m = 0;
        BigReal best = zero;
        BigReal g = one;
        for (size_t i = 0; i + 1 < n; ++i) {
            g *= gamma;
            BigReal v = g * abs(H[i][i]);
            if (v > best) {
                best = v;
                m = i;
            }
        }

        std::swap(y[m], y[m + 1]);
        std::swap(H[m], H[m + 1]);
        for (size_t k = 0; k < n; ++k) std::swap(B[k][m], B[k][m + 1]);

        if (m + 2 < n) {
            BigReal t0 = sqrt(H[m][m] * H[m][m] + H[m][m + 1] * H[m][m + 1]);
            if (!t0.is_zero()) {
                BigReal t1 = H[m][m] / t0;
                BigReal t2 = H[m][m + 1] / t0;
                for (size_t i = m; i < n; ++i) {
                    BigReal a = H[i][m];
                    BigReal b = H[i][m + 1];
                    H[i][m] = t1 * a + t2 * b;
                    H[i][m + 1] = t1 * b - t2 * a;
                }
            }
        }

        for (size_t i = m + 1; i < n; ++i) reduce_row(i, std::min(i - 1, m + 1));

        // certified bound: 1 / max |H_jj|
        BigReal hmax = zero;
        for (size_t j = 0; j + 1 < n; ++j) hmax = max(hmax, abs(H[j][j]));
        if (!hmax.is_zero()) res.exclusion_bound = max(res.exclusion_bound, one / hmax);

        if (int st = detect(); st != 0) return res;
    }
    res.found = false;
    return res;
}

std::optional<BigRat> rational_recover(const BigReal& x, const BigInt& den_bound,
                                       const PrecisionContext& ctx) {
    if (den_bound < BigInt(1)) throw DomainError("rational_recover needs bound >= 1");
    // continued-fraction convergents
    BigInt p_prev(1), q_prev(0), p(0), q(1); // p/q starts as the a0 step below
    BigReal t = x;
    BigInt a0 = floor(t).round_to_int();
    p = a0;
    q = BigInt(1);
    BigReal frac = t - BigReal::of(a0, ctx);
    BigInt best_p = p, best_q = q;
    const BigReal eps = BigReal::pow2(-(2 * ctx.work_bits()) / 3, ctx);
    for (int it = 0; it < 10000; ++it) {
        if (den_bound < q) break;
        best_p = p;
        best_q = q;
        if (abs(frac) < eps) break;
        t = BigReal::of(1, ctx) / frac;
        BigInt a = floor(t).round_to_int();
        frac = t - BigReal::of(a, ctx);
        BigInt p_next = a * p + p_prev;
        BigInt q_next = a * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
    }
    BigRat cand(best_p, best_q);
    // acceptance: |x - p/q| < 1 / (2^(bits/3) q^2)
    BigReal diff = abs(x - BigReal::of(cand, ctx));
    BigReal qr = BigReal::of(best_q, ctx);
    BigReal tol = BigReal::of(1, ctx) / (BigReal::pow2(ctx.bits / 3, ctx) * qr * qr);
    if (diff < tol) return cand;
    return std::nullopt;
}

LogSpanResult logspan_member(const BigReal& x, std::uint64_t n,
                             const std::vector<std::uint64_t>& primes,
                             const PrecisionContext& ctx, long coeff_bound) {
    LogSpanResult out;
    out.residual = BigReal::of(0, ctx);
    out.exclusion_bound = BigReal::of(0, ctx);

    // basis: {log p} then {sin(2 pi j / n) log p} over the pruned j set
    std::vector<std::string> labels;
    std::vector<BigReal> basis;
    for (std::uint64_t p : primes) {
        labels.push_back("log" + std::to_string(p));
        basis.push_back(log(BigReal::of(static_cast<long>(p), ctx)));
    }
    BigReal two_pi = mul_2si(const_pi(ctx), 1);
    for (std::uint64_t j : independent_sine_indices(n)) {
        BigReal sj = sin(two_pi * BigReal::ratio(static_cast<long>(j),
                                                 static_cast<long>(n), ctx));
        for (size_t pi_ = 0; pi_ < primes.size(); ++pi_) {
            labels.push_back("sin(2pi*" + std::to_string(j) + "/" + std::to_string(n) +
                             ")*log" + std::to_string(primes[pi_]));
            basis.push_back(sj * basis[pi_]);
        }
    }

    const BigReal threshold = BigReal::pow2(-(ctx.bits / 2), ctx);
    if (abs(x) < threshold) {
        out.member = true;
        for (const auto& l : labels) out.coeffs.emplace_back(l, BigRat(0));
        out.residual = abs(x);
        return out;
    }

    std::vector<BigReal> vec;
    vec.push_back(x);
    for (const auto& b : basis) vec.push_back(b);
    PslqResult pr = pslq(vec, ctx);
    out.exclusion_bound = pr.exclusion_bound;
    if (!pr.found) return out;
    if (pr.coeffs[0].is_zero()) return out; // relation among basis elements only

    const BigInt bound(coeff_bound);
    BigRat m0(pr.coeffs[0]);
    std::vector<BigRat> cs;
    for (size_t i = 1; i < pr.coeffs.size(); ++i) {
        BigRat c = -(BigRat(pr.coeffs[i]) / m0);
        BigInt cn = c.num();
        if (cn.sgn() < 0) cn = -cn;
        if (bound < cn || bound < c.den()) return out; // spurious relation
        cs.push_back(std::move(c));
    }
    // recheck the representation at full precision
    BigReal recon = BigReal::of(0, ctx);
    for (size_t i = 0; i < basis.size(); ++i) recon += BigReal::of(cs[i], ctx) * basis[i];
    BigReal resid = abs(x - recon);
    if (!(resid < BigReal::pow2(-(ctx.bits / 3), ctx))) return out;
    out.member = true;
    out.residual = resid;
    for (size_t i = 0; i < basis.size(); ++i) out.coeffs.emplace_back(labels[i], cs[i]);
    return out;
}

} // namespace cmhl
