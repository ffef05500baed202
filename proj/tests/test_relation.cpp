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

#include "cmhl/cyclotomic.hpp"
#include "cmhl/relation.hpp"
#include "test_common.hpp"

using namespace cmhl;
using namespace cmhl_tests;

TEST_CASE("pslq on planted two- and four-term relations") {
    const auto& ctx = C();
    BigReal log2 = log(BigReal::of(2, ctx));
    BigReal log3 = log(BigReal::of(3, ctx));
    BigReal log6 = log(BigReal::of(6, ctx));

    PslqResult r = pslq({log2, log(BigReal::of(4, ctx))}, ctx);
    REQUIRE(r.found);
    // (2, -1) up to sign
    CHECK(((r.coeffs[0] == BigInt(2) && r.coeffs[1] == BigInt(-1)) ||
           (r.coeffs[0] == BigInt(-2) && r.coeffs[1] == BigInt(1))));

    PslqResult r2 = pslq({BigReal::of(1, ctx), log2, log3, log6}, ctx);
    REQUIRE(r2.found);
    CHECK(r2.coeffs[0].is_zero());
    // (0, 1, 1, -1) up to sign
    long sign = r2.coeffs[1] == BigInt(1) ? 1 : -1;
    CHECK(r2.coeffs[1] == BigInt(sign));
    CHECK(r2.coeffs[2] == BigInt(sign));
    CHECK(r2.coeffs[3] == BigInt(-sign));
}

TEST_CASE("pslq certifies NONE on (1, pi, log 2)") {
    const auto& ctx = C();
    PslqResult r = pslq({BigReal::of(1, ctx), const_pi(ctx), log(BigReal::of(2, ctx))},
                        ctx);
    CHECK(!r.found);
    CHECK(r.exclusion_bound > BigReal::of(1000000, ctx));
}

TEST_CASE("pslq input validation") {
    const auto& ctx = C();
    CHECK_THROWS_AS(pslq({BigReal::of(1, ctx)}, ctx), DomainError);
    CHECK_THROWS_AS(pslq({BigReal::of(1, ctx), BigReal::of(2, ctx)},
                         PrecisionContext(64, 0)),
                    PrecisionTooLow);
}

TEST_CASE("pslq recovers 40 seeded planted relations") {
    const auto& ctx = C();
    std::mt19937_64 rng(314159); // seed recorded
    std::vector<BigReal> pool;
    for (long p : {2, 3, 5, 7, 11, 13, 17})
        pool.push_back(log(BigReal::of(p, ctx)));
    pool.push_back(const_pi(ctx));
    for (int trial = 0; trial < 40; ++trial) {
        size_t terms = 3 + rng() % 6; // up to 8 values + the target
        std::vector<BigReal> vals;
        std::vector<long> planted;
        BigReal target = BigReal::of(0, ctx);
        for (size_t i = 0; i + 1 < terms; ++i) {
            long c = static_cast<long>(rng() % 101) - 50;
            planted.push_back(c);
            vals.push_back(pool[i]);
            target += BigReal::of(c, ctx) * pool[i];
        }
        vals.insert(vals.begin(), target);
        PslqResult r = pslq(vals, ctx);
        INFO("trial=", trial);
        REQUIRE(r.found);
        // the found relation must annihilate the vector exactly at precision
        CHECK(r.dot < BigReal::pow2(-(ctx.bits / 2), ctx));
        // and, scaled to m_0 = -1, reproduce the planted coefficients
        if (r.coeffs[0] == BigInt(-1) || r.coeffs[0] == BigInt(1)) {
            long s = r.coeffs[0] == BigInt(-1) ? 1 : -1;
            for (size_t i = 1; i < r.coeffs.size(); ++i)
                CHECK(r.coeffs[i] == BigInt(s * planted[i - 1]));
        }
    }
}

TEST_CASE("rational recovery") {
    const auto& ctx = C();
    auto half = rational_recover(BigReal::ratio(1, 2, ctx), BigInt(1000), ctx);
    REQUIRE(half.has_value());
    CHECK(*half == BigRat(1, 2));

    auto frac = rational_recover(BigReal::ratio(355, 113, ctx), BigInt(1000), ctx);
    REQUIRE(frac.has_value());
    CHECK(*frac == BigRat(355, 113));

    // Euler's constant admits no small rational at this precision
    CHECK(!rational_recover(const_euler_gamma(ctx), BigInt(1000000), ctx).has_value());
}

TEST_CASE("independent sine indices match the real cyclotomic degree") {
    // the Q-span of {1, sin(2 pi j / n)} has dimension 1 + |kept|
    // n = 12: {1/2, sqrt3/2, 1, sqrt3/2, 1/2} collapses to one new direction
    CHECK(independent_sine_indices(12) == std::vector<std::uint64_t>{2});
    // n = 8: {sqrt2/2, 1, sqrt2/2} -> only j = 1 survives
    CHECK(independent_sine_indices(8) == std::vector<std::uint64_t>{1});
    // n = 5: sin(2pi/5), sin(4pi/5) are independent
    CHECK(independent_sine_indices(5).size() == 2);
    // n = 4: sin(pi/2) = 1 is absorbed by the constant
    CHECK(independent_sine_indices(4).empty());
    CHECK(independent_sine_indices(3).size() == 1);
}

TEST_CASE("logspan membership") {
    const auto& ctx = C();
    BigReal log2 = log(BigReal::of(2, ctx));
    BigReal log3 = log(BigReal::of(3, ctx));
    BigReal log5 = log(BigReal::of(5, ctx));
    BigReal two_pi = mul_2si(const_pi(ctx), 1);

    SUBCASE("planted combination over n = 30") {
        BigReal s15 = sin(two_pi / BigReal::of(5, ctx)); // sin(2 pi / 5)
        BigReal x = log2 - BigReal::of(3, ctx) * log3 + s15 * log5;
        LogSpanResult r = logspan_member(x, 30, {2, 3, 5}, ctx);
        REQUIRE(r.member);
        CHECK(r.residual < T("1e-60"));
        BigRat c_log2, c_log3;
        BigReal sine_part_log5 = BigReal::of(0, ctx);
        for (const auto& [label, c] : r.coeffs) {
            if (label == "log2") c_log2 = c;
            if (label == "log3") c_log3 = c;
            if (label.find("*log5") != std::string::npos && !c.is_zero()) {
                // parse sin(2pi*j/30) back out of the label
                auto slash = label.find("/");
                long j = std::stol(label.substr(8, slash - 8));
                sine_part_log5 +=
                    BigReal::of(c, ctx) *
                    sin(two_pi * BigReal::ratio(j, 30, ctx));
            }
        }
        CHECK(c_log2 == BigRat(1));
        CHECK(c_log3 == BigRat(-3));
        check_near(sine_part_log5, s15, "1e-60");
    }

    SUBCASE("zero target yields all-zero coefficients") {
        LogSpanResult r = logspan_member(BigReal::of(0, ctx), 12, {2, 3}, ctx);
        REQUIRE(r.member);
        for (const auto& [label, c] : r.coeffs) CHECK(c.is_zero());
    }

    SUBCASE("gamma is not in the span at detectable scale") {
        LogSpanResult r =
            logspan_member(-const_euler_gamma(ctx), 12, {2, 3}, ctx);
        CHECK(!r.member);
        CHECK(r.exclusion_bound > BigReal::of(1000, ctx));
    }
}
