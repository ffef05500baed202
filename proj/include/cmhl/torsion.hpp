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

#ifndef CMHL_TORSION_HPP
#define CMHL_TORSION_HPP

#include <vector>

#include "cmhl/bigcomplex.hpp"

namespace cmhl {

// One Kodaira eigenblock: rotation angle phi = 2 pi * angle_turns with
// angle_turns a nonzero exact rational in (0, 1), and the curvature
// eigenvalue nu (any sign, 0 allowed).
struct Eigenpair {
    BigRat nu;
    BigRat angle_turns;
};

// Eigenvalue data of the automorphism plus the trace of g on H^0 (an
// input; computing it would need theta functions).
struct TorsionInstance {
    std::vector<Eigenpair> eigenpairs;
    BigComplex trace_h0; // L_Tr
};

// Closed form of the equivariant torsion:
//   sum_j sign(nu_j) [ -log(2 pi |nu_j|) / (e^{-i phi_j} - 1)
//                      + i R^rot(phi_j)
//                      - (2 log 2pi - 2 Gamma'(1)
//                         + psi({phi_j/2pi}) + psi(1-{phi_j/2pi})) / 4 ] L_Tr
// with nu_j = 0 blocks contributing 0.  `theorem_sign` flips the sign of
// the first bracket term to the one printed in the source theorem; the
// default follows the Z'(0) expansion, which the eta-function check
// confirms.
BigComplex torsion_closed_form(const TorsionInstance& inst, const PrecisionContext& ctx,
                               bool theorem_sign = false);

// Z'(0) assembled from the periodic zeta and its s-derivative only
// (independent of the digamma closed form); requires all nu_j > 0.
BigComplex torsion_spectral_oracle(const TorsionInstance& inst,
                                   const PrecisionContext& ctx);

// Trace of g on the q-form eigenspace with occupation multi-index n_j:
// C(#{j : n_j != 0}, q) * L_Tr * prod_j e^{i n_j phi_j}.
BigComplex eigenspace_trace(const std::vector<unsigned>& multi_index, unsigned q,
                            const std::vector<BigRat>& angle_turns,
                            const BigComplex& trace_h0, const PrecisionContext& ctx);

// sum_{q=0..k} (-1)^{q+1} q C(k, q): 1 at k = 1, else 0.
long binom_alternating(unsigned k);

// Exhaustively verifies (in exact root-of-unity arithmetic) that the
// alternating q-sum of eigenspace traces collapses to single-index terms
// for all multi-indices with sum <= depth.
bool zeta_collapse_check(unsigned d, const std::vector<BigRat>& angle_turns,
                         unsigned depth);

} // namespace cmhl

#endif
