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

#ifndef CMHL_NT_UTIL_HPP
#define CMHL_NT_UTIL_HPP

#include <cstdint>
#include <vector>

namespace cmhl::nt {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m); // requires gcd(a,m)=1

struct PrimePower {
    std::uint64_t p;
    unsigned e;
    std::uint64_t pk; // p^e
};

// Trial-division factorization, ascending primes.
std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n); // ascending
std::uint64_t euler_phi(std::uint64_t n);

// Smallest primitive root mod p^e (p odd prime), with the classical lift
// check from p to p^2.
std::uint64_t primitive_root_pk(std::uint64_t p, unsigned e);

// Multiplicative order of a mod m; requires gcd(a, m) = 1.
std::uint64_t order_mod(std::uint64_t a, std::uint64_t m);

} // namespace cmhl::nt

#endif
