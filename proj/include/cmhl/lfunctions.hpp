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

#ifndef CMHL_LFUNCTIONS_HPP
#define CMHL_LFUNCTIONS_HPP

#include "cmhl/dirichlet.hpp"
#include "cmhl/hurwitz.hpp"

namespace cmhl {

// Dirichlet L-function of chi *as given* (non-primitive when chi is):
// n^{-s} sum_a chi(a) zeta(s, a/n).  At s = 1 the Hurwitz poles cancel
// for non-principal chi and the value comes out of the digamma formula
// L(chi, 1) = -(1/n) sum_a chi(a) psi(a/n); the principal character at
// s = 1 raises PoleError.
BigComplex dirichlet_l(const DirichletCharacter& chi, const BigComplex& s,
                       const PrecisionContext& ctx);

// L(chi, 0) as the exact finite sum -(1/n) sum a chi(a) (non-principal).
BigComplex dirichlet_l_at_0(const DirichletCharacter& chi,
                            const PrecisionContext& ctx);

// L'(chi, 0) = -log(n) L(chi, 0) + sum_a chi(a) (log Gamma(a/n)
// - log(2 pi)/2), evaluated through log Gamma; non-principal only.
BigComplex l_derivative_at_0(const DirichletCharacter& chi,
                             const PrecisionContext& ctx);

// sum_{p | n} (chi_prim(p)/p) / (1 - chi_prim(p)/p) * log p, the gap
// between L'/L(chi, 1) and L'/L(chi_prim, 1).
BigComplex euler_factor_correction(const DirichletCharacter& chi,
                                   const PrecisionContext& ctx);

// L(e^{2 pi i a/n}, s) = sum_k e^{2 pi i k a / n} / k^s via the exact
// Hurwitz combination; a != 0 mod n.  s = 1 handled by pole cancellation.
BigComplex periodic_zeta(std::uint64_t a, std::uint64_t n, const BigComplex& s,
                         const PrecisionContext& ctx);
BigComplex periodic_zeta_ds(std::uint64_t a, std::uint64_t n, const BigComplex& s,
                            const PrecisionContext& ctx);

// L^Im(z, s) = sum Im(z^k)/k^s at z = e^{2 pi i a / n}; real for real s.
BigComplex l_im(std::uint64_t a, std::uint64_t n, const BigComplex& s,
                const PrecisionContext& ctx);
BigReal l_im(std::uint64_t a, std::uint64_t n, const BigReal& s,
             const PrecisionContext& ctx);

// R^rot at angle 2 pi a / n: the s-derivative of L^Im at s = 0.
BigReal r_rot(std::uint64_t a, std::uint64_t n, const PrecisionContext& ctx);

// |LHS - RHS| / (1 + |RHS|) of
//   (1/2d) sum_sigma conj(chi)(sigma) L^Im(sigma(zeta), s)
//     = (1/2d) n^{1-s} Gamma(1-s/2)/Gamma((s+1)/2) pi^{s-1/2} L(conj chi, 1-s)
// for odd chi; the two sides go through periodic_zeta and dirichlet_l
// respectively.  s at a Gamma pole is rejected.
BigReal check_functional_equation(const DirichletCharacter& chi, const BigReal& s,
                                  const PrecisionContext& ctx);

// |sum_sigma cot(pi a_sigma / n) chi(sigma) - (2n/pi) L(chi, 1)| for odd chi.
BigReal check_cotangent_identity(const DirichletCharacter& chi,
                                 const PrecisionContext& ctx);

} // namespace cmhl

#endif
