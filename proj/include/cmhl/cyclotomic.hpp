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

#ifndef CMHL_CYCLOTOMIC_HPP
#define CMHL_CYCLOTOMIC_HPP

#include <cstdint>
#include <vector>

#include "cmhl/gmp_val.hpp"

namespace cmhl {

// Coefficients of the N-th cyclotomic polynomial, constant term first.
std::vector<BigInt> cyclotomic_poly(std::uint64_t N);

// Indices 1 <= j < n/2 such that {1} and {sin(2*pi*j/n)} for the kept j
// are Q-linearly independent (dependent sines are pruned greedily in
// ascending j).  Exact linear algebra in Q(zeta_lcm(n,4)).
std::vector<std::uint64_t> independent_sine_indices(std::uint64_t n);

} // namespace cmhl

#endif
