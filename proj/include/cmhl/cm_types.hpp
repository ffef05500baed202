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

#ifndef CMHL_CM_TYPES_HPP
#define CMHL_CM_TYPES_HPP

#include <map>
#include <random>

#include "cmhl/group_function.hpp"

namespace cmhl {

// A CM type on the carrier group: one class from each conjugate pair
// {a, -a}.  |members| = |carrier| / 2.
struct CMType {
    std::shared_ptr<const GroupCtx> group;
    std::vector<std::uint64_t> members; // class labels, ascending
    size_t d() const { return members.size(); }
};

// A subfield E of Q(mu_n) cut out by a subgroup H <= (Z/n)^x with
// -1 not in H (so E is a CM field); the carrier of E-side data is G/H.
struct SubfieldDescriptor {
    std::shared_ptr<const GroupCtx> quotient; // carrier G/H
    std::shared_ptr<const UnitGroup> base;    // G

    static SubfieldDescriptor make(std::uint64_t n,
                                   const std::vector<std::uint64_t>& subgroup_gens);
};

// Checks the one-per-conjugate-pair invariant.
CMType validate_type(std::shared_ptr<const GroupCtx> group,
                     const std::vector<std::uint64_t>& members);
CMType validate_type(std::uint64_t n, const std::vector<std::uint64_t>& members);

// <Phi * Phi^dual, chi> under the conventions that make
// sum_{chi odd} pairing = 1/2: the unnormalized convolution paired with
// (1/|G|) inner, divided by d.  Equals 2 |<Phi, chi>|^2; real and >= 0.
BigReal pairing(const CMType& type, const DirichletCharacter& chi,
                const PrecisionContext& ctx);
// Same, for a character given as a function on the carrier (quotient case).
BigReal pairing(const CMType& type, const GroupFunction& chi_fn,
                const PrecisionContext& ctx);

// Full preimage of a quotient type under G -> G/H.
CMType lift_type(const SubfieldDescriptor& desc, const CMType& type_on_quotient);

// sum_{chi odd} pairing * log f_chi, split into per-prime coefficients
// sum_chi pairing * n_{chi,p} (each numerically rational).
struct ConductorTerm {
    BigReal total;
    std::map<std::uint64_t, BigReal> per_prime;
};
ConductorTerm conductor_term(const CMType& type, const PrecisionContext& ctx);

// Seeded one-per-pair random type (used by test suites; the seed is part
// of the reported output).
CMType random_type(std::shared_ptr<const GroupCtx> group, std::mt19937_64& rng);

} // namespace cmhl

#endif
