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

#include "cmhl/lfunctions.hpp"

#include "cmhl/nt_util.hpp"
#include "cmhl/special.hpp"

namespace cmhl {

namespace {

bool is_exactly(const BigComplex& s, long v, const PrecisionContext& ctx) {
    return s.im.is_zero() && s.re == BigReal::of(v, ctx);
}

} // namespace

BigComplex dirichlet_l(const DirichletCharacter& chi, const BigComplex& s,
                       const PrecisionContext& ctx) {
    std::uint64_t n = chi.modulus();
    if (is_exactly(s, 1, ctx)) {
        if (chi.is_principal())
            throw PoleError("L(chi_0, s) has a pole at s = 1");
        // pole parts cancel: L(chi, 1) = -(1/n) sum chi(a) psi(a/n)
        BigComplex acc = BigComplex::of(0, ctx);
        for (std::uint64_t a : chi.group().units()) {
            BigReal psi = digamma(
                BigReal::ratio(static_cast<long>(a), static_cast<long>(n), ctx), ctx);
            acc += chi.value(a, ctx) * psi;
        }
        return -(acc / BigReal::of(static_cast<long>(n), ctx));
    }
    BigComplex acc = BigComplex::of(0, ctx);
    for (std::uint64_t a : chi.group().units()) {
        BigComplex z = hurwitz_zeta(
            s, BigReal::ratio(static_cast<long>(a), static_cast<long>(n), ctx), ctx);
        acc += chi.value(a, ctx) * z;
    }
    return pow(BigReal::of(static_cast<long>(n), ctx), -s) * acc;
}

BigComplex dirichlet_l_at_0(const DirichletCharacter& chi,
                            const PrecisionContext& ctx) {
    if (chi.is_principal())
        throw UnsupportedCharacter("L(chi_0, 0) not provided by the finite sum");
    std::uint64_t n = chi.modulus();
    BigComplex acc = BigComplex::of(0, ctx);
    for (std::uint64_t a : chi.group().units())
        acc += BigReal::of(static_cast<long>(a), ctx) * chi.value(a, ctx);
    return -(acc / BigReal::of(static_cast<long>(n), ctx));
}

BigComplex l_derivative_at_0(const DirichletCharacter& chi,
                             const PrecisionContext& ctx) {
    if (chi.is_principal())
        throw UnsupportedCharacter("l_derivative_at_0 requires a non-principal chi");
    std::uint64_t n = chi.modulus();
    BigReal log_n = log(BigReal::of(static_cast<long>(n), ctx));
    BigReal half_log_2pi = mul_2si(log(mul_2si(const_pi(ctx), 1)), -1);
    BigComplex acc = BigComplex::of(0, ctx);
    for (std::uint64_t a : chi.group().units()) {
        BigReal lg = log_gamma(
            BigReal::ratio(static_cast<long>(a), static_cast<long>(n), ctx), ctx);
        acc += chi.value(a, ctx) * (lg - half_log_2pi);
    }
    return acc - BigComplex(log_n) * dirichlet_l_at_0(chi, ctx);
}

BigComplex euler_factor_correction(const DirichletCharacter& chi,
                                   const PrecisionContext& ctx) {
    if (chi.is_principal())
        throw UnsupportedCharacter("euler_factor_correction requires non-principal chi");
    DirichletCharacter prim = chi.primitive_part();
    BigComplex acc = BigComplex::of(0, ctx);
    for (std::uint64_t p : nt::prime_divisors(chi.modulus())) {
        if (prim.conductor() % p == 0) continue; // chi_prim(p) = 0
        BigComplex cp = prim.value(p % prim.modulus(), ctx) /
                        BigReal::of(static_cast<long>(p), ctx);
        BigComplex term = cp / (BigComplex::of(1, ctx) - cp);
        acc += term * log(BigReal::of(static_cast<long>(p), ctx));
    }
    return acc;
}

namespace {

// shared Hurwitz assembly for periodic_zeta and its derivative
HurwitzPair periodic_zeta_pair(std::uint64_t a, std::uint64_t n, const BigComplex& s,
                               const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("periodic_zeta requires n >= 1");
    a %= n;
    if (a == 0) throw DomainError("periodic_zeta at z = 1 is the Riemann pole line");

    if (is_exactly(s, 1, ctx)) {
        // sum_b z^b = 0 cancels the poles; constant terms use psi
        BigComplex acc = BigComplex::of(0, ctx);
        for (std::uint64_t b = 1; b <= n; ++b) {
            BigComplex zb = unit_root(
                BigRat(static_cast<long>(a * b % n), static_cast<long>(n)), ctx);
            BigReal psi = digamma(
                BigReal::ratio(static_cast<long>(b), static_cast<long>(n), ctx), ctx);
            acc += zb * psi;
        }
        BigComplex value = -(acc / BigReal::of(static_cast<long>(n), ctx));
        // the ds slot is never read at s = 1 (periodic_zeta_ds rejects it)
        return {value, BigComplex::of(0, ctx)};
    }

    BigComplex acc = BigComplex::of(0, ctx);
    BigComplex acc_ds = BigComplex::of(0, ctx);
    for (std::uint64_t b = 1; b <= n; ++b) {
        BigComplex zb = unit_root(
            BigRat(static_cast<long>(a * b % n), static_cast<long>(n)), ctx);
        HurwitzPair hz = hurwitz_zeta_pair(
            s, BigReal::ratio(static_cast<long>(b), static_cast<long>(n), ctx), ctx);
        acc += zb * hz.value;
        acc_ds += zb * hz.ds;
    }
    BigReal nn = BigReal::of(static_cast<long>(n), ctx);
    BigComplex npow = pow(nn, -s);
    // d/ds [n^{-s} A(s)] = n^{-s} (A'(s) - log(n) A(s))
    return {npow * acc, npow * (acc_ds - BigComplex(log(nn)) * acc)};
}

} // namespace

BigComplex periodic_zeta(std::uint64_t a, std::uint64_t n, const BigComplex& s,
                         const PrecisionContext& ctx) {
    return periodic_zeta_pair(a, n, s, ctx).value;
}

BigComplex periodic_zeta_ds(std::uint64_t a, std::uint64_t n, const BigComplex& s,
                            const PrecisionContext& ctx) {
    if (is_exactly(s, 1, ctx))
        throw DomainError("periodic_zeta_ds not provided at s = 1");
    return periodic_zeta_pair(a, n, s, ctx).ds;
}

BigComplex l_im(std::uint64_t a, std::uint64_t n, const BigComplex& s,
                const PrecisionContext& ctx) {
    a %= n;
    if (a == 0) throw DomainError("l_im requires a != 0 mod n");
    BigComplex plus = periodic_zeta(a, n, s, ctx);
    BigComplex minus = periodic_zeta(n - a, n, s, ctx);
    BigComplex two_i(BigReal::of(0, ctx), BigReal::of(2, ctx));
    return (plus - minus) / two_i;
}

BigReal l_im(std::uint64_t a, std::uint64_t n, const BigReal& s,
             const PrecisionContext& ctx) {
    return l_im(a, n, BigComplex(s, BigReal::of(0, ctx)), ctx).re;
}

BigReal r_rot(std::uint64_t a, std::uint64_t n, const PrecisionContext& ctx) {
    a %= n;
    if (a == 0) throw DomainError("r_rot requires a != 0 mod n");
    BigComplex s0 = BigComplex::of(0, ctx);
    BigComplex plus = periodic_zeta_ds(a, n, s0, ctx);
    BigComplex minus = periodic_zeta_ds(n - a, n, s0, ctx);
    BigComplex two_i(BigReal::of(0, ctx), BigReal::of(2, ctx));
    return ((plus - minus) / two_i).re;
}

BigReal check_functional_equation(const DirichletCharacter& chi, const BigReal& s,
                                  const PrecisionContext& ctx) {
    if (!chi.is_odd())
        throw UnsupportedCharacter("functional equation check needs an odd character");
    std::uint64_t n = chi.modulus();
    long d = static_cast<long>(chi.group().order() / 2);

    // reject Gamma poles: 1 - s/2 or (s+1)/2 a non-positive integer
    BigReal one = BigReal::of(1, ctx);
    BigReal g1_arg = one - mul_2si(s, -1);
    BigReal g2_arg = mul_2si(s + one, -1);
    for (const BigReal* g : {&g1_arg, &g2_arg}) {
        if (g->sgn() <= 0 && *g == floor(*g))
            throw DomainError("functional equation at a Gamma pole");
    }

    DirichletCharacter chibar = chi.conjugate();
    BigComplex s_c(s, BigReal::of(0, ctx));

    BigComplex lhs = BigComplex::of(0, ctx);
    for (std::uint64_t a : chi.group().units()) {
        BigComplex li = l_im(a, n, s_c, ctx);
        lhs += conj(chi.value(a, ctx)) * li;
    }
    lhs = lhs / BigReal::of(2 * d, ctx);

    BigComplex lval = dirichlet_l(chibar, BigComplex(one - s, BigReal::of(0, ctx)), ctx);
    BigReal nn = BigReal::of(static_cast<long>(n), ctx);
    BigReal pi_ = const_pi(ctx);
    BigReal front = pow(nn, one - s) * gamma_recurrence(g1_arg, ctx) /
                    gamma_recurrence(g2_arg, ctx) *
                    pow(pi_, s - mul_2si(one, -1));
    BigComplex rhs = (front / BigReal::of(2 * d, ctx)) * lval;

    return abs(lhs - rhs) / (one + abs(rhs));
}

BigReal check_cotangent_identity(const DirichletCharacter& chi,
                                 const PrecisionContext& ctx) {
    if (!chi.is_odd())
        throw UnsupportedCharacter("cotangent identity needs an odd character");
    std::uint64_t n = chi.modulus();
    BigReal pi_ = const_pi(ctx);
    BigComplex lhs = BigComplex::of(0, ctx);
    for (std::uint64_t a : chi.group().units()) {
        BigReal c = cot(pi_ * BigReal::ratio(static_cast<long>(a),
                                             static_cast<long>(n), ctx));
        lhs += chi.value(a, ctx) * c;
    }
    BigComplex l1 = dirichlet_l(chi, BigComplex::of(1, ctx), ctx);
    BigComplex rhs = (BigReal::of(2 * static_cast<long>(n), ctx) / pi_) * l1;
    return abs(lhs - rhs);
}

} // namespace cmhl
