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

#include "cmhl/dirichlet.hpp"

#include <algorithm>

#include "cmhl/errors.hpp"
#include "cmhl/nt_util.hpp"

namespace cmhl {

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group,
                                       std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
    const auto& comps = group_->components();
    if (exponents_.size() != comps.size())
        throw GroupMismatch("exponent tuple length != component count");
    for (size_t i = 0; i < comps.size(); ++i) exponents_[i] %= comps[i].order;

    // parity: chi(-1) is -1 or +1, i.e. value_arg(-1) is 1/2 or 0
    BigRat arg_c = value_arg(group_->conjugation());
    odd_ = !arg_c.is_zero();

    // conductor: least divisor f of n with chi trivial on units == 1 mod f
    std::uint64_t n = group_->modulus();
    for (std::uint64_t f : nt::divisors(n)) {
        bool trivial = true;
        for (std::uint64_t a : group_->units()) {
            if (a % f != 1 % f) continue;
            if (!value_is_one(a)) {
                trivial = false;
                break;
            }
        }
        if (trivial) {
            conductor_ = f;
            break;
        }
    }
}

bool DirichletCharacter::is_principal() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](std::uint64_t e) { return e == 0; });
}

BigRat DirichletCharacter::value_arg(std::uint64_t a) const {
    const auto& dl = group_->dlog(a);
    const auto& comps = group_->components();
    BigRat arg;
    for (size_t i = 0; i < comps.size(); ++i) {
        if (exponents_[i] == 0 || dl[i] == 0) continue;
        arg += BigRat(static_cast<long>(exponents_[i] % comps[i].order), 1) *
               BigRat(static_cast<long>(dl[i]), static_cast<long>(comps[i].order));
    }
    return arg.frac_mod1();
}

bool DirichletCharacter::value_is_one(std::uint64_t a) const {
    return value_arg(a).is_zero();
}

BigComplex DirichletCharacter::value(std::uint64_t a,
                                     const PrecisionContext& ctx) const {
    if (!group_->is_unit(a)) return BigComplex::of(0, ctx);
    return unit_root(value_arg(a), ctx);
}

DirichletCharacter DirichletCharacter::primitive_part() const {
    if (is_primitive()) return *this;
    if (is_principal())
        throw UnsupportedCharacter("principal character has no primitive part here");
    std::uint64_t n = modulus();
    std::uint64_t f = conductor_;
    auto sub = UnitGroup::make(f);
    // exponent on each component of (Z/f)^x from the value on a coprime
    // lift of its generator
    std::vector<std::uint64_t> exps;
    for (const auto& comp : sub->components()) {
        std::uint64_t a = comp.generator;
        while (nt::gcd(a, n) != 1) a += f;
        BigRat arg = value_arg(a); // t / order, exact
        BigRat t = arg * BigRat(static_cast<long>(comp.order), 1);
        if (!t.is_integer())
            throw DomainError("character does not factor through its conductor");
        exps.push_back(static_cast<std::uint64_t>(t.num().to_long()) % comp.order);
    }
    return DirichletCharacter(sub, std::move(exps));
}

DirichletCharacter DirichletCharacter::conjugate() const {
    const auto& comps = group_->components();
    std::vector<std::uint64_t> exps(exponents_.size());
    for (size_t i = 0; i < comps.size(); ++i)
        exps[i] = (comps[i].order - exponents_[i]) % comps[i].order;
    return DirichletCharacter(group_, std::move(exps));
}

std::uint64_t DirichletCharacter::index() const {
    std::uint64_t idx = 0;
    const auto& comps = group_->components();
    for (size_t i = 0; i < comps.size(); ++i) idx = idx * comps[i].order + exponents_[i];
    return idx;
}

std::vector<DirichletCharacter> characters(std::shared_ptr<const UnitGroup> group,
                                           CharFilter filter) {
    const auto& comps = group->components();
    std::vector<DirichletCharacter> out;
    std::vector<std::uint64_t> tuple(comps.size(), 0);
    bool done = false;
    while (!done) {
        DirichletCharacter chi(group, tuple);
        bool keep = filter == CharFilter::All ||
                    (filter == CharFilter::Odd && chi.is_odd()) ||
                    (filter == CharFilter::Even && !chi.is_odd());
        if (keep) out.push_back(std::move(chi));
        // odometer: last component fastest
        done = true;
        for (size_t i = comps.size(); i-- > 0;) {
            if (++tuple[i] < comps[i].order) {
                done = false;
                break;
            }
            tuple[i] = 0;
        }
        if (comps.empty()) break;
    }
    return out;
}

std::vector<DirichletCharacter> characters(std::uint64_t n, CharFilter filter) {
    return characters(UnitGroup::make(n), filter);
}

} // namespace cmhl
