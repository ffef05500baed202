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

#ifndef CMHL_GROUP_FUNCTION_HPP
#define CMHL_GROUP_FUNCTION_HPP

#include "cmhl/dirichlet.hpp"

namespace cmhl {

// A finite abelian group carrier: either (Z/n)^x itself or a quotient
// (Z/n)^x / H.  Elements are indexed 0..size-1; labels are the least
// residue in each class.  Complex conjugation is the class of -1.
class GroupCtx {
public:
    static std::shared_ptr<const GroupCtx> full(std::shared_ptr<const UnitGroup> g);
    // H is closed under multiplication (generated from `subgroup_gens`).
    static std::shared_ptr<const GroupCtx> quotient(
        std::shared_ptr<const UnitGroup> g, const std::vector<std::uint64_t>& subgroup_gens);

    size_t size() const { return labels_.size(); }
    size_t mul(size_t i, size_t j) const { return mul_[i * labels_.size() + j]; }
    size_t inv(size_t i) const { return inv_[i]; }
    size_t conj_index() const { return conj_; }
    std::uint64_t label(size_t i) const { return labels_[i]; }
    size_t index_of(std::uint64_t residue) const; // class index of a unit
    const UnitGroup& base() const { return *base_; }
    std::shared_ptr<const UnitGroup> base_ptr() const { return base_; }
    bool is_quotient() const { return !subgroup_.empty(); }
    // elements of H (just {1} for the full group view)
    const std::vector<std::uint64_t>& subgroup() const { return subgroup_elements_; }

    bool same_carrier(const GroupCtx& other) const;

private:
    GroupCtx() = default;
    void build_tables();

    std::shared_ptr<const UnitGroup> base_;
    std::vector<std::uint64_t> subgroup_;          // empty for the full view
    std::vector<std::uint64_t> subgroup_elements_; // {1} or H, sorted
    std::vector<std::uint64_t> labels_;            // class reps, ascending
    std::vector<size_t> class_of_;                 // by unit index in base
    std::vector<size_t> mul_;
    std::vector<size_t> inv_;
    size_t conj_ = 0;
};

// Dense complex-valued function on a GroupCtx.
struct GroupFunction {
    std::shared_ptr<const GroupCtx> group;
    std::vector<BigComplex> values;

    GroupFunction(std::shared_ptr<const GroupCtx> g, const PrecisionContext& ctx)
        : group(std::move(g)), values(group->size(), BigComplex::of(0, ctx)) {}

    bool is_odd(const PrecisionContext& ctx, const BigReal& tol) const;
};

// <f, g> = (1/|G|) sum f(s) conj(g(s))
BigComplex inner(const GroupFunction& f, const GroupFunction& g,
                 const PrecisionContext& ctx);
// unnormalized convolution: (f*g)(s) = sum_t f(t) g(s t^-1)
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g,
                       const PrecisionContext& ctx);
// dual(f)(s) = f(s^-1)
GroupFunction dual(const GroupFunction& f);

// 0/1 indicator of a set of class labels.
GroupFunction indicator(std::shared_ptr<const GroupCtx> g,
                        const std::vector<std::uint64_t>& members,
                        const PrecisionContext& ctx);

// chi as a function on the carrier; on a quotient, chi must be trivial
// on H.
GroupFunction character_function(std::shared_ptr<const GroupCtx> g,
                                 const DirichletCharacter& chi,
                                 const PrecisionContext& ctx);

// chi trivial on every element of H?
bool trivial_on_subgroup(const DirichletCharacter& chi,
                         const std::vector<std::uint64_t>& subgroup_elements);

} // namespace cmhl

#endif
