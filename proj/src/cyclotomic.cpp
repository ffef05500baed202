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

#include "cmhl/cyclotomic.hpp"

#include <numeric>

#include "cmhl/errors.hpp"
#include "cmhl/nt_util.hpp"

namespace cmhl {

namespace {

// exact division of integer polynomials (remainder must vanish)
std::vector<BigInt> poly_divexact(std::vector<BigInt> num,
                                  const std::vector<BigInt>& den) {
    std::vector<BigInt> q(num.size() - den.size() + 1, BigInt(0));
    for (size_t i = q.size(); i-- > 0;) {
        // den is monic in every use here
        BigInt c = num[i + den.size() - 1];
        q[i] = c;
        if (c.is_zero()) continue;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const auto& c : num)
        if (!c.is_zero()) throw DomainError("poly_divexact: nonzero remainder");
    return q;
}

} // namespace

std::vector<BigInt> cyclotomic_poly(std::uint64_t N) {
    // x^N - 1 divided by the product of Phi_d over proper divisors d
    std::vector<BigInt> num(N + 1, BigInt(0));
    num[0] = BigInt(-1);
    num[N] = BigInt(1);
    for (std::uint64_t d : nt::divisors(N)) {
        if (d == N) continue;
        num = poly_divexact(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

std::vector<std::uint64_t> independent_sine_indices(std::uint64_t n) {
    std::uint64_t N = std::lcm<std::uint64_t>(n, 4);
    auto phi_poly = cyclotomic_poly(N);
    size_t deg = phi_poly.size() - 1; // phi(N)

    // residues of x^k mod Phi_N as rational vectors
    std::vector<std::vector<BigRat>> xpow(N);
    std::vector<BigRat> cur(deg, BigRat(0));
    cur[0] = BigRat(1);
    for (std::uint64_t k = 0; k < N; ++k) {
        xpow[k] = cur;
        // multiply by x
        std::vector<BigRat> next(deg, BigRat(0));
        BigRat lead = cur[deg - 1];
        for (size_t i = deg - 1; i > 0; --i) next[i] = cur[i - 1];
        next[0] = BigRat(0);
        if (!lead.is_zero())
            for (size_t i = 0; i < deg; ++i)
                next[i] -= lead * BigRat(phi_poly[i]); // Phi monic
        cur = std::move(next);
    }

    // reduced row echelon basis over Q: each row is 1 at its pivot and 0
    // at every other pivot, so one reduction pass is complete
    std::vector<std::vector<BigRat>> rows;
    std::vector<size_t> pivots;
    auto try_insert = [&](std::vector<BigRat> v) -> bool {
        for (size_t r = 0; r < rows.size(); ++r) {
            BigRat factor = v[pivots[r]];
            if (factor.is_zero()) continue;
            for (size_t i = 0; i < deg; ++i) v[i] -= factor * rows[r][i];
        }
        size_t piv = deg;
        for (size_t i = 0; i < deg; ++i)
            if (!v[i].is_zero()) {
                piv = i;
                break;
            }
        if (piv == deg) return false;
        BigRat lead = v[piv];
        for (size_t i = 0; i < deg; ++i) v[i] = v[i] / lead;
        for (size_t r = 0; r < rows.size(); ++r) {
            BigRat factor = rows[r][piv];
            if (factor.is_zero()) continue;
            for (size_t i = 0; i < deg; ++i) rows[r][i] -= factor * v[i];
        }
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    };

    // seed with the constant 1
    try_insert(xpow[0]);

    // sin(2 pi j / n) = (z^a - z^{N-a}) * (-z^{N/4}) / 2 with a = j N / n;
    // the scalar -1/2 does not affect Q-dependence, so use the integer part
    std::vector<std::uint64_t> kept;
    std::uint64_t quarter = N / 4;
    for (std::uint64_t j = 1; 2 * j < n; ++j) {
        std::uint64_t a = j * (N / n);
        std::vector<BigRat> v(deg, BigRat(0));
        const auto& p1 = xpow[(a + quarter) % N];
        const auto& p2 = xpow[(N - a + quarter) % N];
        for (size_t i = 0; i < deg; ++i) v[i] = p1[i] - p2[i];
        if (try_insert(std::move(v))) kept.push_back(j);
    }
    return kept;
}

} // namespace cmhl
