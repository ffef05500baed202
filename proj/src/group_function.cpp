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

#include "cmhl/group_function.hpp"

#include <algorithm>
#include <set>

#include "cmhl/errors.hpp"

namespace cmhl {

std::shared_ptr<const GroupCtx> GroupCtx::full(std::shared_ptr<const UnitGroup> g) {
    auto ctx = std::shared_ptr<GroupCtx>(new GroupCtx());
    ctx->base_ = std::move(g);
    ctx->subgroup_elements_ = {1};
    ctx->labels_ = ctx->base_->units();
    ctx->class_of_.resize(ctx->labels_.size());
    for (size_t i = 0; i < ctx->labels_.size(); ++i) ctx->class_of_[i] = i;
    ctx->build_tables();
    return ctx;
}

std::shared_ptr<const GroupCtx> GroupCtx::quotient(
    std::shared_ptr<const UnitGroup> g, const std::vector<std::uint64_t>& subgroup_gens) {
    auto ctx = std::shared_ptr<GroupCtx>(new GroupCtx());
    ctx->base_ = std::move(g);
    const UnitGroup& G = *ctx->base_;
    // close the generating set under multiplication
    std::set<std::uint64_t> H{1};
    for (std::uint64_t h : subgroup_gens) {
        if (!G.is_unit(h)) throw DomainError("subgroup generator is not a unit");
        H.insert(h % G.modulus());
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint64_t> cur(H.begin(), H.end());
        for (std::uint64_t a : cur)
            for (std::uint64_t b : cur)
                if (H.insert(G.mul(a, b)).second) grew = true;
    }
    ctx->subgroup_.assign(H.begin(), H.end());
    ctx->subgroup_elements_ = ctx->subgroup_;

    // classes: orbit of each unit under H; label = least member
    const auto& units = G.units();
    ctx->class_of_.assign(units.size(), SIZE_MAX);
    for (size_t ui = 0; ui < units.size(); ++ui) {
        if (ctx->class_of_[ui] != SIZE_MAX) continue;
        std::uint64_t least = units[ui];
        std::vector<size_t> orbit;
        for (std::uint64_t h : ctx->subgroup_) {
            std::uint64_t prod = G.mul(units[ui], h);
            orbit.push_back(G.unit_index(prod));
            least = std::min(least, prod);
        }
        size_t cls = ctx->labels_.size();
        ctx->labels_.push_back(least);
        for (size_t oi : orbit) ctx->class_of_[oi] = cls;
    }
    // relabel classes in ascending label order
    std::vector<size_t> perm(ctx->labels_.size());
    std::vector<std::uint64_t> sorted_labels = ctx->labels_;
    std::sort(sorted_labels.begin(), sorted_labels.end());
    for (size_t i = 0; i < ctx->labels_.size(); ++i) {
        auto it = std::lower_bound(sorted_labels.begin(), sorted_labels.end(),
                                   ctx->labels_[i]);
        perm[i] = static_cast<size_t>(it - sorted_labels.begin());
    }
    for (auto& c : ctx->class_of_) c = perm[c];
    ctx->labels_ = std::move(sorted_labels);
    ctx->build_tables();
    return ctx;
}

void GroupCtx::build_tables() {
    const UnitGroup& G = *base_;
    size_t m = labels_.size();
    mul_.assign(m * m, 0);
    inv_.assign(m, 0);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j)
            mul_[i * m + j] = class_of_[G.unit_index(G.mul(labels_[i], labels_[j]))];
        inv_[i] = class_of_[G.unit_index(G.inv(labels_[i]))];
    }
    conj_ = class_of_[G.unit_index(G.conjugation())];
}

size_t GroupCtx::index_of(std::uint64_t residue) const {
    return class_of_[base_->unit_index(residue)];
}

bool GroupCtx::same_carrier(const GroupCtx& other) const {
    return base_->modulus() == other.base_->modulus() &&
           subgroup_elements_ == other.subgroup_elements_;
}

bool GroupFunction::is_odd(const PrecisionContext& ctx, const BigReal& tol) const {
    size_t c = group->conj_index();
    for (size_t i = 0; i < group->size(); ++i) {
        BigComplex diff = values[group->mul(c, i)] + values[i];
        if (abs(diff) > tol) return false;
    }
    return true;
}

BigComplex inner(const GroupFunction& f, const GroupFunction& g,
                 const PrecisionContext& ctx) {
    if (!f.group->same_carrier(*g.group))
        throw GroupMismatch("inner product of functions on different groups");
    BigComplex acc = BigComplex::of(0, ctx);
    for (size_t i = 0; i < f.group->size(); ++i) acc += f.values[i] * conj(g.values[i]);
    return acc / BigReal::of(static_cast<long>(f.group->size()), ctx);
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g,
                       const PrecisionContext& ctx) {
    if (!f.group->same_carrier(*g.group))
        throw GroupMismatch("convolution of functions on different groups");
    GroupFunction out(f.group, ctx);
    size_t m = f.group->size();
    for (size_t s = 0; s < m; ++s) {
        BigComplex acc = BigComplex::of(0, ctx);
        for (size_t t = 0; t < m; ++t)
            acc += f.values[t] * g.values[f.group->mul(s, f.group->inv(t))];
        out.values[s] = acc;
    }
    return out;
}

GroupFunction dual(const GroupFunction& f) {
    GroupFunction out = f;
    for (size_t i = 0; i < f.group->size(); ++i)
        out.values[f.group->inv(i)] = f.values[i];
    return out;
}

GroupFunction indicator(std::shared_ptr<const GroupCtx> g,
                        const std::vector<std::uint64_t>& members,
                        const PrecisionContext& ctx) {
    GroupFunction out(std::move(g), ctx);
    for (std::uint64_t a : members)
        out.values[out.group->index_of(a)] = BigComplex::of(1, ctx);
    return out;
}

bool trivial_on_subgroup(const DirichletCharacter& chi,
                         const std::vector<std::uint64_t>& subgroup_elements) {
    for (std::uint64_t h : subgroup_elements)
        if (!chi.value_is_one(h)) return false;
    return true;
}

GroupFunction character_function(std::shared_ptr<const GroupCtx> g,
                                 const DirichletCharacter& chi,
                                 const PrecisionContext& ctx) {
    if (chi.modulus() != g->base().modulus())
        throw GroupMismatch("character modulus != group modulus");
    if (g->is_quotient() && !trivial_on_subgroup(chi, g->subgroup()))
        throw GroupMismatch("character is not trivial on the subgroup");
    GroupFunction out(g, ctx);
    for (size_t i = 0; i < out.group->size(); ++i)
        out.values[i] = chi.value(out.group->label(i), ctx);
    return out;
}

} // namespace cmhl
