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

#ifndef CMHL_HEIGHTS_HPP
#define CMHL_HEIGHTS_HPP

#include "cmhl/cm_types.hpp"
#include "cmhl/lfunctions.hpp"
#include "cmhl/relation.hpp"

namespace cmhl {

// The d x d fixed-point linear system M X = Y attached to a CM type on
// the full group: M_{l,k} = Im(z/(1-z)) at z = (Phi_k^{-1} Phi_l)(zeta),
// Y_l = -4 sum_k d/ds L^Im((Phi_k^{-1} Phi_l)(zeta), 0).  The X_k stand
// for the per-eigenspace arithmetic degrees; only the system relating
// them is computable.
struct HeightSystem {
    CMType type;
    std::vector<std::vector<BigReal>> matrix; // [l][k]
    std::vector<BigReal> rhs;                 // [l]
    GroupFunction f;                          // the odd function behind M
};

HeightSystem build_system(const CMType& type, const PrecisionContext& ctx);
// Same shape with a caller-supplied odd f and right-hand side (test duel).
HeightSystem build_custom_system(const CMType& type, GroupFunction f,
                                 std::vector<BigReal> rhs,
                                 const PrecisionContext& ctx);

// Partial-pivot Gaussian elimination at full precision.
std::vector<BigReal> solve_elimination(const HeightSystem& sys,
                                       const PrecisionContext& ctx);
// Character closed form: X_j = sum_{chi odd} chi(Phi_j)
//   [sum_l conj(chi)(Phi_l) Y_l] / (d^2 <f, chi>).
std::vector<BigReal> solve_characters(const HeightSystem& sys,
                                      const PrecisionContext& ctx);

struct PerCharacterEntry {
    std::uint64_t character_index;
    std::uint64_t conductor;
    BigReal pairing_value;
    BigComplex l_ratio;      // 2 L'(chi_prim, 0) / L(chi_prim, 0)
    BigComplex contribution; // -d * pairing * l_ratio
};

struct HeightReport {
    BigReal h_character;
    std::vector<PerCharacterEntry> per_character;
};

// h = -d sum_{chi odd} <Phi*Phi^v, chi> 2 L'(chi_prim,0)/L(chi_prim,0);
// well-defined modulo rational combinations of Im(alpha) log p, p | n.
HeightReport height_character_route(const CMType& type, const PrecisionContext& ctx);

// (1/8) sum_j X_j from the solved system (elimination route).
BigReal height_system_route(const CMType& type, const PrecisionContext& ctx);

struct Calibration {
    BigRat c;
    std::vector<std::pair<std::string, BigRat>> coeffs; // log-span representation
    BigReal residual;
};

// Finds the smallest rational c (denominator <= den_bound) with
// c * h_sys - h_char inside the log-span; throws CalibrationFailed when
// no candidate works.
Calibration compare_routes(const CMType& type, const PrecisionContext& ctx,
                           long den_bound = 16);

struct InvarianceResult {
    BigReal residual;            // |quotient-side sum - lifted-side sum|
    BigReal max_noninduced_pairing; // sup of pairings that must vanish
};

// Lemma-level check that the character sum over G/H equals the sum over
// G for the lifted type, with characters nontrivial on H contributing 0.
InvarianceResult extension_invariance_check(const SubfieldDescriptor& desc,
                                            const CMType& type_on_quotient,
                                            const PrecisionContext& ctx);

} // namespace cmhl

#endif
