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

#include "cmhl/nt_util.hpp"

#include <algorithm>

#include "cmhl/errors.hpp"

namespace cmhl::nt {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    // extended Euclid on signed 128-bit intermediates
    __int128 t = 0, newt = 1;
    __int128 r = m, newr = a % m;
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw DomainError("invmod: arguments not coprime");
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

std::vector<PrimePower> factorize(std::uint64_t n) {
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            PrimePower pp{p, 0, 1};
            while (n % p == 0) {
                n /= p;
                ++pp.e;
                pp.pk *= p;
            }
            out.push_back(pp);
        }
    }
    if (n > 1) out.push_back({n, 1, n});
    return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const auto& pp : factorize(n)) out.push_back(pp.p);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (const auto& pp : factorize(n)) {
        size_t sz = out.size();
        std::uint64_t q = 1;
        for (unsigned i = 1; i <= pp.e; ++i) {
            q *= pp.p;
            for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = 1;
    for (const auto& pp : factorize(n)) phi *= pp.pk - pp.pk / pp.p;
    return phi;
}

std::uint64_t order_mod(std::uint64_t a, std::uint64_t m) {
    std::uint64_t phi = euler_phi(m);
    std::uint64_t ord = phi;
    for (const auto& pp : factorize(phi)) {
        while (ord % pp.p == 0 && powmod(a, ord / pp.p, m) == 1) ord /= pp.p;
    }
    return ord;
}

std::uint64_t primitive_root_pk(std::uint64_t p, unsigned e) {
    if (p == 2) throw DomainError("primitive_root_pk requires an odd prime");
    // smallest primitive root mod p
    std::uint64_t g = 0;
    auto phi_factors = factorize(p - 1);
    for (std::uint64_t cand = 2; cand < p; ++cand) {
        bool ok = true;
        for (const auto& pp : phi_factors) {
            if (powmod(cand, (p - 1) / pp.p, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = cand;
            break;
        }
    }
    if (g == 0) throw DomainError("no primitive root found");
    if (e == 1) return g;
    // g lifts to p^e iff g^(p-1) != 1 mod p^2
    std::uint64_t p2 = p * p;
    if (powmod(g, p - 1, p2) == 1) g += p;
    return g;
}

} // namespace cmhl::nt
