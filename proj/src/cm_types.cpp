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

#include "cmhl/cm_types.hpp"

#include <algorithm>

#include "cmhl/errors.hpp"
#include "cmhl/nt_util.hpp"

namespace cmhl {

SubfieldDescriptor SubfieldDescriptor::make(
    std::uint64_t n, const std::vector<std::uint64_t>& subgroup_gens) {
    auto base = UnitGroup::make(n);
    auto q = GroupCtx::quotient(base, subgroup_gens);
    const auto& H = q->subgroup();
    if (std::binary_search(H.begin(), H.end(), base->conjugation()))
        throw NotCMField("-1 lies in the subgroup; the fixed field is not CM");
    return SubfieldDescriptor{q, base};
}

CMType validate_type(std::shared_ptr<const GroupCtx> group,
                     const std::vector<std::uint64_t>& members) {
    const GroupCtx& G = *group;
    if (G.size() % 2 != 0)
        throw NotACMType("carrier group has odd order"); // cannot happen for n >= 3
    std::vector<char> chosen(G.size(), 0);
    std::vector<std::uint64_t> labels;
    for (std::uint64_t a : members) {
        size_t idx;
        try {
            idx = G.index_of(a);
        } catch (const DomainError&) {
            throw NotACMType("type member is not a unit of the carrier");
        }
        if (chosen[idx]) throw NotACMType("duplicate type member");
        chosen[idx] = 1;
        labels.push_back(G.label(idx));
    }
    if (labels.size() != G.size() / 2)
        throw NotACMType("type must contain exactly one element per conjugate pair");
    for (size_t i = 0; i < G.size(); ++i) {
        size_t other = G.mul(G.conj_index(), i);
        if (other == i) throw NotACMType("an element equals its own conjugate");
        if (chosen[i] && chosen[other])
            throw NotACMType("type contains a full conjugate pair");
        if (!chosen[i] && !chosen[other])
            throw NotACMType("type misses a conjugate pair");
    }
    std::sort(labels.begin(), labels.end());
    return CMType{std::move(group), std::move(labels)};
}

CMType validate_type(std::uint64_t n, const std::vector<std::uint64_t>& members) {
    return validate_type(GroupCtx::full(UnitGroup::make(n)), members);
}

BigReal pairing(const CMType& type, const GroupFunction& chi_fn,
                const PrecisionContext& ctx) {
    GroupFunction ind = indicator(type.group, type.members, ctx);
    GroupFunction conv = convolve(ind, dual(ind), ctx);
    BigComplex val = inner(conv, chi_fn, ctx) /
                     BigReal::of(static_cast<long>(type.d()), ctx);
    // exactly real by symmetry of Phi * Phi^dual; drop rounding residue
    return val.re;
}

BigReal pairing(const CMType& type, const DirichletCharacter& chi,
                const PrecisionContext& ctx) {
    if (chi.modulus() != type.group->base().modulus())
        throw GroupMismatch("pairing: character and type on different groups");
    return pairing(type, character_function(type.group, chi, ctx), ctx);
}

CMType lift_type(const SubfieldDescriptor& desc, const CMType& type_on_quotient) {
    if (!type_on_quotient.group->same_carrier(*desc.quotient))
        throw GroupMismatch("type does not live on the descriptor's quotient");
    std::vector<std::uint64_t> members;
    const GroupCtx& Q = *desc.quotient;
    for (std::uint64_t u : desc.base->units()) {
        size_t cls = Q.index_of(u);
        if (std::binary_search(type_on_quotient.members.begin(),
                               type_on_quotient.members.end(), Q.label(cls)))
            members.push_back(u);
    }
    return validate_type(GroupCtx::full(desc.base), members);
}

ConductorTerm conductor_term(const CMType& type, const PrecisionContext& ctx) {
    if (type.group->is_quotient())
        throw GroupMismatch("conductor_term expects a type on the full group");
    auto odd = characters(type.group->base_ptr(), CharFilter::Odd);
    ConductorTerm out{BigReal::of(0, ctx), {}};
    for (std::uint64_t p : nt::prime_divisors(type.group->base().modulus()))
        out.per_prime.emplace(p, BigReal::of(0, ctx));
    for (const auto& chi : odd) {
        BigReal w = pairing(type, chi, ctx);
        std::uint64_t f = chi.conductor();
        out.total += w * log(BigReal::of(static_cast<long>(f), ctx));
        for (auto& [p, coeff] : out.per_prime) {
            unsigned mult = 0;
            while (f % p == 0) {
                f /= p;
                ++mult;
            }
            if (mult > 0) coeff += w * BigReal::of(mult, ctx);
        }
    }
    return out;
}

CMType random_type(std::shared_ptr<const GroupCtx> group, std::mt19937_64& rng) {
    const GroupCtx& G = *group;
    std::vector<char> seen(G.size(), 0);
    std::vector<std::uint64_t> members;
    for (size_t i = 0; i < G.size(); ++i) {
        if (seen[i]) continue;
        size_t other = G.mul(G.conj_index(), i);
        seen[i] = seen[other] = 1;
        members.push_back(G.label((rng() & 1) ? i : other));
    }
    return validate_type(std::move(group), members);
}

} // namespace cmhl
