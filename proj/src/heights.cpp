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

#include "cmhl/heights.hpp"

#include <numeric>

#include "cmhl/nt_util.hpp"

namespace cmhl {

namespace {

void require_full_group(const CMType& type, const char* what) {
    if (type.group->is_quotient())
        throw GroupMismatch(std::string(what) + " expects a type on the full group");
}

} // namespace

HeightSystem build_system(const CMType& type, const PrecisionContext& ctx) {
    require_full_group(type, "build_system");
    const GroupCtx& G = *type.group;
    std::uint64_t n = G.base().modulus();
    size_t d = type.d();
    BigReal pi_ = const_pi(ctx);

    // f(sigma) = Im(sigma(zeta) / (1 - sigma(zeta))) = cot(pi a / n) / 2
    GroupFunction f(type.group, ctx);
    for (size_t i = 0; i < G.size(); ++i) {
        std::uint64_t a = G.label(i);
        BigReal c = cot(pi_ * BigReal::ratio(static_cast<long>(a),
                                             static_cast<long>(n), ctx));
        f.values[i] = BigComplex(mul_2si(c, -1));
    }

    // r_rot at every group element once; rows read them by index
    std::vector<BigReal> rr(G.size(), BigReal(ctx.work_bits()));
    for (size_t i = 0; i < G.size(); ++i)
        rr[i] = r_rot(G.label(i), n, ctx);

    std::vector<size_t> member_idx(d);
    for (size_t k = 0; k < d; ++k) member_idx[k] = G.index_of(type.members[k]);

    HeightSystem sys{type, {}, {}, std::move(f)};
    sys.matrix.assign(d, std::vector<BigReal>(d, BigReal(ctx.work_bits())));
    sys.rhs.assign(d, BigReal(ctx.work_bits()));
    for (size_t l = 0; l < d; ++l) {
        BigReal y = BigReal::of(0, ctx);
        for (size_t k = 0; k < d; ++k) {
            size_t prod = G.mul(G.inv(member_idx[k]), member_idx[l]);
            sys.matrix[l][k] = sys.f.values[prod].re;
            y += rr[prod];
        }
        sys.rhs[l] = mul_2si(-y, 2); // -4 * sum
    }
    return sys;
}

HeightSystem build_custom_system(const CMType& type, GroupFunction f,
                                 std::vector<BigReal> rhs,
                                 const PrecisionContext& ctx) {
    require_full_group(type, "build_custom_system");
    if (!f.group->same_carrier(*type.group))
        throw GroupMismatch("custom f lives on a different group");
    if (rhs.size() != type.d()) throw DomainError("rhs length != d");
    if (!f.is_odd(ctx, BigReal::pow2(-(ctx.bits / 2), ctx)))
        throw DomainError("custom f must be odd");
    const GroupCtx& G = *type.group;
    size_t d = type.d();
    HeightSystem sys{type, {}, std::move(rhs), std::move(f)};
    sys.matrix.assign(d, std::vector<BigReal>(d, BigReal(ctx.work_bits())));
    for (size_t l = 0; l < d; ++l)
        for (size_t k = 0; k < d; ++k) {
            size_t prod = G.mul(G.inv(G.index_of(sys.type.members[k])),
                                G.index_of(sys.type.members[l]));
            sys.matrix[l][k] = sys.f.values[prod].re;
        }
    return sys;
}

std::vector<BigReal> solve_elimination(const HeightSystem& sys,
                                       const PrecisionContext& ctx) {
    size_t d = sys.rhs.size();
    std::vector<std::vector<BigReal>> a = sys.matrix;
    std::vector<BigReal> b = sys.rhs;
    const BigReal pivot_floor = BigReal::pow2(-(ctx.bits / 2), ctx);

    for (size_t col = 0; col < d; ++col) {
        size_t piv = col;
        for (size_t r = col + 1; r < d; ++r)
            if (abs(a[r][col]) > abs(a[piv][col])) piv = r;
        if (abs(a[piv][col]) < pivot_floor)
            throw SingularSystem("pivot below 2^-(bits/2)");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = col + 1; r < d; ++r) {
            if (a[r][col].is_zero()) continue;
            BigReal factor = a[r][col] / a[col][col];
            for (size_t cc = col; cc < d; ++cc) a[r][cc] -= factor * a[col][cc];
            b[r] -= factor * b[col];
        }
    }
    std::vector<BigReal> x(d, BigReal(ctx.work_bits()));
    for (size_t r = d; r-- > 0;) {
        BigReal acc = b[r];
        for (size_t cc = r + 1; cc < d; ++cc) acc -= a[r][cc] * x[cc];
        x[r] = acc / a[r][r];
    }
    return x;
}

std::vector<BigReal> solve_characters(const HeightSystem& sys,
                                      const PrecisionContext& ctx) {
    const GroupCtx& G = *sys.type.group;
    size_t d = sys.type.d();
    auto odd = characters(G.base_ptr(), CharFilter::Odd);
    const BigReal floor_ = BigReal::pow2(-(ctx.bits / 2), ctx);
    BigReal d2 = BigReal::of(static_cast<long>(d * d), ctx);

    std::vector<BigComplex> x(d, BigComplex::of(0, ctx));
    for (const auto& chi : odd) {
        GroupFunction chi_fn = character_function(sys.type.group, chi, ctx);
        BigComplex fc = inner(sys.f, chi_fn, ctx);
        if (abs(fc) < floor_)
            throw ZeroCharacterPairing("<f, chi> vanishes for an odd character");
        BigComplex num = BigComplex::of(0, ctx);
        for (size_t l = 0; l < d; ++l)
            num += conj(chi_fn.values[G.index_of(sys.type.members[l])]) *
                   BigComplex(sys.rhs[l]);
        BigComplex scale = num / (d2 * fc);
        for (size_t j = 0; j < d; ++j)
            x[j] += chi_fn.values[G.index_of(sys.type.members[j])] * scale;
    }
    std::vector<BigReal> out;
    out.reserve(d);
    for (auto& xi : x) out.push_back(xi.re); // imaginary parts cancel pairwise
    return out;
}

HeightReport height_character_route(const CMType& type, const PrecisionContext& ctx) {
    require_full_group(type, "height_character_route");
    auto odd = characters(type.group->base_ptr(), CharFilter::Odd);
    BigReal d = BigReal::of(static_cast<long>(type.d()), ctx);
    HeightReport rep{BigReal::of(0, ctx), {}};
    for (const auto& chi : odd) {
        BigReal w = pairing(type, chi, ctx);
        DirichletCharacter prim = chi.primitive_part();
        BigComplex l0 = dirichlet_l_at_0(prim, ctx);
        BigComplex l0d = l_derivative_at_0(prim, ctx);
        BigComplex ratio = mul_2si(BigReal::of(1, ctx), 1) * (l0d / l0);
        BigComplex contrib = -(d * w) * ratio;
        rep.h_character += contrib.re;
        rep.per_character.push_back(
            {chi.index(), chi.conductor(), w, ratio, contrib});
    }
    return rep;
}

BigReal height_system_route(const CMType& type, const PrecisionContext& ctx) {
    HeightSystem sys = build_system(type, ctx);
    std::vector<BigReal> x = solve_elimination(sys, ctx);
    BigReal acc = BigReal::of(0, ctx);
    for (const auto& xi : x) acc += xi;
    return mul_2si(acc, -3); // (1/8) sum
}

Calibration compare_routes(const CMType& type, const PrecisionContext& ctx,
                           long den_bound) {
    require_full_group(type, "compare_routes");
    std::uint64_t n = type.group->base().modulus();
    auto primes = nt::prime_divisors(n);
    BigReal h_sys = height_system_route(type, ctx);
    BigReal h_char = height_character_route(type, ctx).h_character;

    // candidates p/q ordered by |p| + q, positive before negative
    struct Cand {
        long p, q;
    };
    std::vector<Cand> cands;
    for (long h = 2; h <= 64 + den_bound; ++h)
        for (long q = 1; q <= den_bound && q < h; ++q) {
            long p = h - q;
            if (p > 64) continue;
            if (std::gcd(p, q) != 1) continue;
            cands.push_back({p, q});
            cands.push_back({-p, q});
        }

    for (const auto& cand : cands) {
        BigReal c = BigReal::ratio(cand.p, cand.q, ctx);
        BigReal delta = c * h_sys - h_char;
        LogSpanResult ls = logspan_member(delta, n, primes, ctx);
        if (ls.member)
            return Calibration{BigRat(cand.p, cand.q), std::move(ls.coeffs),
                               ls.residual};
    }
    throw CalibrationFailed(
        "no rational c with denominator <= " + std::to_string(den_bound) +
        " puts c*h_system - h_character in the log span");
}

InvarianceResult extension_invariance_check(const SubfieldDescriptor& desc,
                                            const CMType& type_on_quotient,
                                            const PrecisionContext& ctx) {
    if (!type_on_quotient.group->same_carrier(*desc.quotient))
        throw GroupMismatch("type does not live on the descriptor's quotient");

    // quotient side: odd characters of G/H = odd characters of G trivial
    // on H, paired over the quotient carrier
    auto all_odd = characters(desc.base, CharFilter::Odd);
    BigComplex quotient_sum = BigComplex::of(0, ctx);
    for (const auto& chi : all_odd) {
        if (!trivial_on_subgroup(chi, desc.quotient->subgroup())) continue;
        BigReal w = pairing(type_on_quotient,
                            character_function(desc.quotient, chi, ctx), ctx);
        DirichletCharacter prim = chi.primitive_part();
        quotient_sum += BigComplex(w) *
                        (l_derivative_at_0(prim, ctx) / dirichlet_l_at_0(prim, ctx));
    }

    // lifted side: all odd characters of G against the lifted type
    CMType lifted = lift_type(desc, type_on_quotient);
    BigComplex lifted_sum = BigComplex::of(0, ctx);
    BigReal max_bad = BigReal::of(0, ctx);
    for (const auto& chi : all_odd) {
        BigReal w = pairing(lifted, chi, ctx);
        if (!trivial_on_subgroup(chi, desc.quotient->subgroup())) {
            max_bad = max(max_bad, abs(w));
            continue; // contributes 0 up to the recorded defect
        }
        DirichletCharacter prim = chi.primitive_part();
        lifted_sum += BigComplex(w) *
                      (l_derivative_at_0(prim, ctx) / dirichlet_l_at_0(prim, ctx));
    }

    return InvarianceResult{abs(quotient_sum - lifted_sum), max_bad};
}

} // namespace cmhl
