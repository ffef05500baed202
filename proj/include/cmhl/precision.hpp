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

#ifndef CMHL_PRECISION_HPP
#define CMHL_PRECISION_HPP

#include "cmhl/errors.hpp"

namespace cmhl {

// Working precision, threaded through every numeric call.  All arithmetic
// runs at bits + guard_bits so that results are trustworthy at the `bits`
// level; every operation is a deterministic function of its inputs and
// the context.
struct PrecisionContext {
    long bits = 256;
    long guard_bits = 32;

    PrecisionContext() = default;
    PrecisionContext(long b, long g = 32) : bits(b), guard_bits(g) {
        if (bits < 64) throw DomainError("PrecisionContext requires bits >= 64");
        if (guard_bits < 0) throw DomainError("guard_bits must be non-negative");
    }

    long work_bits() const { return bits + guard_bits; }
};

} // namespace cmhl

#endif
