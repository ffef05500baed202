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

#include "cmhl/cm_types.hpp"
#include "cmhl/relation.hpp"
#include "test_common.hpp"

using namespace cmhl;
using namespace cmhl_tests;

TEST_CASE("type validation") {
    auto t = validate_type(4, {1});
    CHECK(t.d() == 1);
    auto t5 = validate_type(5, {1, 2});
    CHECK(t5.d() == 2);
    CHECK_THROWS_AS(validate_type(5, {1, 4}), NotACMType); // full pair
    CHECK_THROWS_AS(validate_type(5, {1}), NotACMType);    // missing pair
    CHECK_THROWS_AS(validate_type(5, {1, 2, 3}), NotACMType);
    CHECK_THROWS_AS(validate_type(12, {1, 5, 7, 11}), NotACMType);
    CHECK_THROWS_AS(validate_type(8, {1, 2, 3}), NotACMType); // 2 not a unit
}

TEST_CASE("pairing values") {
    const auto& ctx = C();
    auto t4 = validate_type(4, {1});
    auto odd4 = characters(4, CharFilter::Odd);
    check_near(pairing(t4, odd4[0], ctx), BigReal::ratio(1, 2, ctx), "1e-72");

    // principal character: pairing = 1/2 for every type
    for (const auto& chi : characters(4, CharFilter::All))
        if (chi.is_principal())
            check_near(pairing(t4, chi, ctx), BigReal::ratio(1, 2, ctx), "1e-72");

    // n = 5: the two odd quartics each get 1/4, summing to 1/2
    auto t5 = validate_type(5, {1, 2});
    BigReal sum = BigReal::of(0, ctx);
    for (const auto& chi : characters(5, CharFilter::Odd)) {
        BigReal w = pairing(t5, chi, ctx);
        check_near(w, BigReal::ratio(1, 4, ctx), "1e-72");
        sum += w;
    }
    check_near(sum, BigReal::ratio(1, 2, ctx), "1e-72");
}

TEST_CASE("half-sum = 1/2 for 20 seeded random types per modulus") {
    const auto& ctx = C();
    std::mt19937_64 rng(20240311); // seed recorded here
    for (std::uint64_t n : {3ULL, 4ULL, 5ULL, 7ULL, 8ULL, 12ULL, 15ULL, 16ULL,
                            20ULL, 24ULL}) {
        auto gctx = GroupCtx::full(UnitGroup::make(n));
        auto odd = characters(gctx->base_ptr(), CharFilter::Odd);
        for (int trial = 0; trial < 20; ++trial) {
            CMType t = random_type(gctx, rng);
            BigReal sum = BigReal::of(0, ctx);
            for (const auto& chi : odd) {
                BigReal w = pairing(t, chi, ctx);
                CHECK(w > T("-1e-72")); // real and non-negative
                sum += w;
            }
            INFO("n=", n, " trial=", trial);
            CHECK(abs(sum - BigReal::ratio(1, 2, ctx)) < T("1e-70"));
        }
    }
}

TEST_CASE("lift of quotient types") {
    auto desc = SubfieldDescriptor::make(12, {7}); // H = {1, 7}, fixes Q(i)
    CHECK(desc.quotient->size() == 2);
    auto t = validate_type(desc.quotient, {1});
    CMType lifted = lift_type(desc, t);
    CHECK(lifted.members == std::vector<std::uint64_t>{1, 7});

    // H = {1}: the lift is the identity on members
    auto triv = SubfieldDescriptor::make(12, {});
    auto full_type = validate_type(triv.quotient, {1, 5});
    CMType same = lift_type(triv, full_type);
    CHECK(same.members == std::vector<std::uint64_t>{1, 5});

    // H = {1, 5}: -1 = 11 is not in H, so this is a valid CM subfield
    auto desc5 = SubfieldDescriptor::make(12, {5});
    auto t5 = validate_type(desc5.quotient, {1});
    CMType lifted5 = lift_type(desc5, t5);
    CHECK(lifted5.members == std::vector<std::uint64_t>{1, 5});

    // -1 in H is rejected
    CHECK_THROWS_AS(SubfieldDescriptor::make(12, {11}), NotCMField);
    CHECK_THROWS_AS(SubfieldDescriptor::make(5, {4}), NotCMField);
}

TEST_CASE("lift compatibility: inner is preserved, convolution scales by |H|") {
    const auto& ctx = C();
    auto desc = SubfieldDescriptor::make(12, {7});
    const auto& Q = desc.quotient;
    auto G = GroupCtx::full(desc.base);
    std::mt19937_64 rng(5150);

    auto rand_fn = [&](std::shared_ptr<const GroupCtx> g) {
        GroupFunction f(g, ctx);
        for (auto& v : f.values)
            v = BigComplex(BigReal::ratio(static_cast<long>(rng() % 401) - 200, 100, ctx),
                           BigReal::ratio(static_cast<long>(rng() % 401) - 200, 100, ctx));
        return f;
    };
    auto lift_fn = [&](const GroupFunction& f) {
        GroupFunction out(G, ctx);
        for (size_t i = 0; i < G->size(); ++i)
            out.values[i] = f.values[Q->index_of(G->label(i))];
        return out;
    };

    GroupFunction f = rand_fn(Q);
    GroupFunction g = rand_fn(Q);
    GroupFunction fl = lift_fn(f);
    GroupFunction gl = lift_fn(g);

    // <f o p, g o p>_G = <f, g>_{G/H}
    check_near(inner(fl, gl, ctx), inner(f, g, ctx), "1e-72");

    // (f o p) * (g o p) = |H| (f * g) o p under the unnormalized convolution
    GroupFunction conv_lift = convolve(fl, gl, ctx);
    GroupFunction conv_quot = convolve(f, g, ctx);
    BigReal hsize = BigReal::of(static_cast<long>(Q->subgroup().size()), ctx);
    for (size_t i = 0; i < G->size(); ++i)
        check_near(conv_lift.values[i],
                   hsize * conv_quot.values[Q->index_of(G->label(i))], "1e-70");
}

TEST_CASE("pairing is invariant under lifting (the |H| factors cancel)") {
    const auto& ctx = C();
    auto desc = SubfieldDescriptor::make(12, {7});
    auto t = validate_type(desc.quotient, {1});
    CMType lifted = lift_type(desc, t);
    for (const auto& chi : characters(desc.base, CharFilter::Odd)) {
        if (!trivial_on_subgroup(chi, desc.quotient->subgroup())) continue;
        BigReal via_quotient =
            pairing(t, character_function(desc.quotient, chi, ctx), ctx);
        BigReal via_lift = pairing(lifted, chi, ctx);
        check_near(via_lift, via_quotient, "1e-70");
    }
}

TEST_CASE("conductor term") {
    const auto& ctx = C();
    auto t4 = validate_type(4, {1});
    ConductorTerm c4 = conductor_term(t4, ctx);
    check_near(c4.total, log(BigReal::of(2, ctx)), "1e-70"); // (1/2) log 4
    REQUIRE(c4.per_prime.count(2) == 1);
    check_near(c4.per_prime.at(2), BigReal::of(1, ctx), "1e-70");

    auto t3 = validate_type(3, {1});
    ConductorTerm c3 = conductor_term(t3, ctx);
    REQUIRE(c3.per_prime.count(3) == 1);
    check_near(c3.per_prime.at(3), BigReal::ratio(1, 2, ctx), "1e-70");

    // prime modulus: a single per-prime key
    auto t7 = validate_type(7, {1, 2, 3});
    ConductorTerm c7 = conductor_term(t7, ctx);
    CHECK(c7.per_prime.size() == 1);
    CHECK(c7.per_prime.count(7) == 1);

    // rationality: denominator of each coefficient divides 2|G|
    std::mt19937_64 rng(8088);
    for (std::uint64_t n : {5ULL, 8ULL, 12ULL, 15ULL, 20ULL}) {
        auto gctx = GroupCtx::full(UnitGroup::make(n));
        CMType t = random_type(gctx, rng);
        ConductorTerm ct = conductor_term(t, ctx);
        for (const auto& [p, coeff] : ct.per_prime) {
            auto rec = rational_recover(coeff,
                                        BigInt(2 * static_cast<long>(gctx->size())),
                                        ctx);
            REQUIRE(rec.has_value());
            CHECK(abs(coeff - BigReal::of(*rec, ctx)) < T("1e-40"));
        }
    }
}
