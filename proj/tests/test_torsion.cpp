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

#include <random>

#include "cmhl/lfunctions.hpp"
#include "cmhl/torsion.hpp"
#include "oracle_helpers.hpp"
#include "test_common.hpp"

using namespace cmhl;
using namespace cmhl_tests;

namespace {

TorsionInstance one_block(long nu_num, long nu_den, long a, long n,
                          const PrecisionContext& ctx) {
    return TorsionInstance{{{BigRat(nu_num, nu_den), BigRat(a, n)}},
                           BigComplex::of(1, ctx)};
}

} // namespace

TEST_CASE("torsion at (nu = 1, phi = pi) equals log 2 by the eta oracle") {
    const auto& ctx = C();
    TorsionInstance inst = one_block(1, 1, 1, 2, ctx);
    // hand value via eta: Z'(0) = log(2pi)/2 - eta'(0) = log 2
    BigReal hand = mul_2si(log(mul_2si(const_pi(ctx), 1)), -1) -
                   oracle::eta_ds(BigReal::of(0, ctx), ctx);
    check_near(hand, log(BigReal::of(2, ctx)), "1e-70");
    check_near(torsion_closed_form(inst, ctx), BigComplex(log(BigReal::of(2, ctx))),
               "1e-68");
    check_near(torsion_spectral_oracle(inst, ctx),
               BigComplex(log(BigReal::of(2, ctx))), "1e-68");
}

TEST_CASE("torsion is linear in the trace input") {
    const auto& ctx = C();
    TorsionInstance inst = one_block(1, 1, 1, 2, ctx);
    inst.trace_h0 = BigComplex::of(0, ctx);
    CHECK(torsion_closed_form(inst, ctx).is_zero());
    inst.trace_h0 = BigComplex(BigReal::of(3, ctx), BigReal::of(-2, ctx));
    check_near(torsion_closed_form(inst, ctx),
               inst.trace_h0 * log(BigReal::of(2, ctx)), "1e-68");
}

TEST_CASE("zero-curvature blocks contribute nothing") {
    const auto& ctx = C();
    TorsionInstance inst{{{BigRat(0), BigRat(1, 3)}, {BigRat(0), BigRat(1, 7)}},
                         BigComplex::of(1, ctx)};
    CHECK(torsion_closed_form(inst, ctx).is_zero());
    CHECK_THROWS_AS(torsion_spectral_oracle(inst, ctx), DomainError);
    // angle = 0 is rejected
    TorsionInstance bad{{{BigRat(1), BigRat(0)}}, BigComplex::of(1, ctx)};
    CHECK_THROWS_AS(torsion_closed_form(bad, ctx), DomainError);
}

TEST_CASE("closed form vs spectral oracle at (1, pi/2) and (3, 2pi/3)") {
    const auto& ctx = C();
    TorsionInstance i1 = one_block(1, 1, 1, 4, ctx);
    BigComplex z1 = torsion_spectral_oracle(i1, ctx);
    check_near(torsion_closed_form(i1, ctx), z1, "1e-60");
    // Im Z'(0) + log(2pi)/2 = R^rot(pi/2), the r_rot cross-check
    check_near(z1.im + mul_2si(log(mul_2si(const_pi(ctx), 1)), -1), r_rot(1, 4, ctx),
               "1e-68");

    TorsionInstance i2 = one_block(3, 1, 1, 3, ctx);
    check_near(torsion_closed_form(i2, ctx), torsion_spectral_oracle(i2, ctx),
               "1e-60");
}

TEST_CASE("theorem-printed sign fails the eta anchor by exactly log(2 pi)") {
    const auto& ctx = C();
    TorsionInstance inst = one_block(1, 1, 1, 2, ctx);
    BigComplex flipped = torsion_closed_form(inst, ctx, /*theorem_sign=*/true);
    BigComplex oracle_val = torsion_spectral_oracle(inst, ctx);
    check_near(abs(flipped - oracle_val), log(mul_2si(const_pi(ctx), 1)), "1e-68");
}

TEST_CASE("seeded duel: closed form vs oracle on 20 random instances") {
    const auto& ctx = C();
    std::mt19937_64 rng(90210); // seed recorded
    const long nus_num[] = {1, 1, 2, 7};
    const long nus_den[] = {3, 1, 1, 1};
    for (int trial = 0; trial < 20; ++trial) {
        size_t blocks = 1 + rng() % 4;
        TorsionInstance inst;
        inst.trace_h0 = BigComplex(BigReal::ratio(static_cast<long>(rng() % 9) + 1, 2, ctx),
                                   BigReal::ratio(static_cast<long>(rng() % 7), 3, ctx));
        for (size_t b = 0; b < blocks; ++b) {
            size_t pick = rng() % 4;
            long n = 2 + static_cast<long>(rng() % 23); // angle denominator <= 24
            long a = 1 + static_cast<long>(rng() % (n - 1));
            inst.eigenpairs.push_back(
                {BigRat(nus_num[pick], nus_den[pick]), BigRat(a, n)});
        }
        INFO("trial=", trial);
        check_near(torsion_closed_form(inst, ctx), torsion_spectral_oracle(inst, ctx),
                   "1e-52");
    }
}

TEST_CASE("conjugation: negated angles give the conjugate torsion") {
    const auto& ctx = C();
    TorsionInstance inst{{{BigRat(2), BigRat(1, 5)}, {BigRat(1, 3), BigRat(3, 7)}},
                         BigComplex(BigReal::of(2, ctx), BigReal::of(1, ctx))};
    TorsionInstance neg = inst;
    for (auto& ep : neg.eigenpairs) ep.angle_turns = BigRat(1) - ep.angle_turns;
    neg.trace_h0 = conj(inst.trace_h0);
    check_near(torsion_closed_form(neg, ctx), conj(torsion_closed_form(inst, ctx)),
               "1e-60");
    check_near(torsion_spectral_oracle(neg, ctx),
               conj(torsion_spectral_oracle(inst, ctx)), "1e-60");
}

TEST_CASE("additivity over disjoint blocks") {
    const auto& ctx = C();
    TorsionInstance a = one_block(1, 1, 1, 3, ctx);
    TorsionInstance b = one_block(2, 1, 2, 7, ctx);
    TorsionInstance both{{a.eigenpairs[0], b.eigenpairs[0]}, BigComplex::of(1, ctx)};
    check_near(torsion_closed_form(both, ctx),
               torsion_closed_form(a, ctx) + torsion_closed_form(b, ctx), "1e-64");
}

TEST_CASE("binom_alternating: 1 at k = 1, 0 elsewhere, against Pascal sums") {
    // independent direct summation with a Pascal-triangle row in __int128
    for (unsigned k = 0; k <= 30; ++k) {
        std::vector<__int128> row(k + 1, 0);
        row[0] = 1;
        for (unsigned i = 1; i <= k; ++i)
            for (unsigned j = i; j-- > 0;) row[j + 1] += row[j];
        __int128 acc = 0;
        for (unsigned q = 0; q <= k; ++q) {
            __int128 term = static_cast<__int128>(q) * row[q];
            acc += (q % 2 == 0) ? -term : term;
        }
        CHECK(binom_alternating(k) == static_cast<long>(acc));
        CHECK(binom_alternating(k) == (k == 1 ? 1 : 0));
    }
}

TEST_CASE("eigenspace trace values") {
    const auto& ctx = C();
    std::vector<BigRat> angles{BigRat(1, 3), BigRat(1, 4)};
    BigComplex ltr = BigComplex::of(1, ctx);
    // n = (1, 0), q = 0: L_Tr e^{i phi_1}
    check_near(eigenspace_trace({1, 0}, 0, angles, ltr, ctx),
               unit_root(BigRat(1, 3), ctx), "1e-72");
    // q above the occupation count vanishes
    CHECK(eigenspace_trace({1, 0}, 2, angles, ltr, ctx).is_zero());
    // binomial weight: n = (1, 2), q = 1 has C(2, 1) = 2
    check_near(eigenspace_trace({1, 2}, 1, angles, ltr, ctx),
               mul_2si(BigReal::of(1, ctx), 1) *
                   unit_root(BigRat(1, 3) + BigRat(2) * BigRat(1, 4), ctx),
               "1e-72");
}

TEST_CASE("zeta collapse check") {
    std::vector<BigRat> a1{BigRat(1, 3)};
    CHECK(zeta_collapse_check(1, a1, 5));
    std::vector<BigRat> a2{BigRat(1, 3), BigRat(1, 4)};
    CHECK(zeta_collapse_check(2, a2, 4));
    std::vector<BigRat> a3{BigRat(1, 3), BigRat(1, 4), BigRat(2, 5)};
    CHECK(zeta_collapse_check(3, a3, 3));
}
