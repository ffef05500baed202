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

#include "cmhl/torsion.hpp"

#include <functional>

#include "cmhl/lfunctions.hpp"
#include "cmhl/special.hpp"

namespace cmhl {

namespace {

struct AngleParts {
    std::uint64_t a;
    std::uint64_t n;
};

AngleParts angle_of(const BigRat& turns) {
    BigRat t = turns.frac_mod1();
    if (t.is_zero())
        throw DomainError("torsion angle must be nonzero mod 2 pi");
    return {static_cast<std::uint64_t>(t.num().to_long()),
            static_cast<std::uint64_t>(t.den().to_long())};
}

} // namespace

BigComplex torsion_closed_form(const TorsionInstance& inst, const PrecisionContext& ctx,
                               bool theorem_sign) {
    BigComplex acc = BigComplex::of(0, ctx);
    if (inst.trace_h0.is_zero()) return acc;
    BigReal two_pi = mul_2si(const_pi(ctx), 1);
    BigReal log_2pi = log(two_pi);
    BigReal gamma_prime_1 = -const_euler_gamma(ctx); // Gamma'(1)

    for (const auto& ep : inst.eigenpairs) {
        int sign = ep.nu.sgn();
        if (sign == 0) continue; // a nu = 0 block contributes nothing
        AngleParts ang = angle_of(ep.angle_turns);
        BigRat abs_nu = sign < 0 ? -ep.nu : ep.nu;

        // -log(2 pi |nu|) / (e^{-i phi} - 1)   [+ under the printed sign]
        BigComplex denom = unit_root(-ep.angle_turns, ctx) - BigComplex::of(1, ctx);
        BigReal lognu = log(two_pi * BigReal::of(abs_nu, ctx));
        BigComplex first = BigComplex(theorem_sign ? lognu : -lognu) / denom;

        BigComplex rot(BigReal::of(0, ctx), r_rot(ang.a, ang.n, ctx));

        BigRat frac = ep.angle_turns.frac_mod1(); // {phi / 2pi} in (0, 1)
        BigReal psi_sum = digamma(BigReal::of(frac, ctx), ctx) +
                          digamma(BigReal::of(BigRat(1) - frac, ctx), ctx);
        BigReal const_block = mul_2si(
            mul_2si(log_2pi, 1) - mul_2si(gamma_prime_1, 1) + psi_sum, -2);

        BigComplex bracket = first + rot - BigComplex(const_block);
        if (sign < 0) bracket = -bracket;
        acc += bracket;
    }
    return acc * inst.trace_h0;
}

BigComplex torsion_spectral_oracle(const TorsionInstance& inst,
                                   const PrecisionContext& ctx) {
    BigComplex acc = BigComplex::of(0, ctx);
    BigReal two_pi = mul_2si(const_pi(ctx), 1);
    BigComplex s0 = BigComplex::of(0, ctx);
    for (const auto& ep : inst.eigenpairs) {
        if (ep.nu.sgn() <= 0)
            throw DomainError("spectral oracle requires nu > 0");
        AngleParts ang = angle_of(ep.angle_turns);
        // Z'(0) per block: -log(2 pi nu) L(z, 0) + L'(z, 0)
        BigComplex l0 = periodic_zeta(ang.a, ang.n, s0, ctx);
        BigComplex l0d = periodic_zeta_ds(ang.a, ang.n, s0, ctx);
        BigReal lognu = log(two_pi * BigReal::of(ep.nu, ctx));
        acc += BigComplex(-lognu) * l0 + l0d;
    }
    return acc * inst.trace_h0;
}

BigComplex eigenspace_trace(const std::vector<unsigned>& multi_index, unsigned q,
                            const std::vector<BigRat>& angle_turns,
                            const BigComplex& trace_h0, const PrecisionContext& ctx) {
    if (multi_index.size() != angle_turns.size())
        throw DomainError("multi-index and angle list differ in length");
    unsigned k = 0;
    BigRat total_turns(0);
    for (size_t j = 0; j < multi_index.size(); ++j) {
        if (multi_index[j] != 0) ++k;
        total_turns += BigRat(static_cast<long>(multi_index[j])) * angle_turns[j];
    }
    if (q > k) return BigComplex::of(0, ctx);
    BigReal binom = BigReal::of(BigInt::binomial(k, q), ctx);
    return binom * (unit_root(total_turns, ctx) * trace_h0);
}

long binom_alternating(unsigned k) {
    BigInt acc(0);
    for (unsigned q = 0; q <= k; ++q) {
        BigInt term = BigInt(static_cast<long>(q)) * BigInt::binomial(k, q);
        if (q % 2 == 0) term = -term;
        acc += term;
    }
    return acc.to_long();
}

bool zeta_collapse_check(unsigned d, const std::vector<BigRat>& angle_turns,
                         unsigned depth) {
    if (d == 0 || d > 6 || angle_turns.size() != d || depth < 2)
        throw DomainError("zeta_collapse_check needs 1 <= d <= 6 and depth >= 2");

    // exact arithmetic: each trace is C(k, q) * zeta^e with the common
    // exponent e = sum n_j a_j N / n_j, so the alternating q-sum is the
    // symbolic pair (m, e) with m = sum_q (-1)^{q+1} q C(k, q), computed
    // inline so the check does not lean on binom_alternating
    std::vector<unsigned> idx(d, 0);
    std::function<bool(size_t, unsigned)> walk = [&](size_t pos,
                                                     unsigned remaining) -> bool {
        if (pos == d) {
            unsigned k = 0;
            BigRat turns(0);
            for (size_t j = 0; j < d; ++j) {
                if (idx[j] != 0) ++k;
                turns += BigRat(static_cast<long>(idx[j])) * angle_turns[j];
            }
            turns = turns.frac_mod1();
            BigInt msum(0);
            for (unsigned q = 0; q <= d; ++q) {
                if (q > k) break; // C(k, q) = 0
                BigInt term = BigInt(static_cast<long>(q)) * BigInt::binomial(k, q);
                if (q % 2 == 0) term = -term;
                msum += term;
            }
            // expected: zeta^{turns} when exactly one n_j != 0, else 0
            BigInt expected_m(k == 1 ? 1 : 0);
            BigRat expected_turns = turns; // same root-of-unity factor
            return msum == expected_m && turns == expected_turns;
        }
        for (unsigned v = 0; v <= remaining; ++v) {
            idx[pos] = v;
            if (!walk(pos + 1, remaining - v)) return false;
        }
        idx[pos] = 0;
        return true;
    };
    return walk(0, depth);
}

} // namespace cmhl
