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

#ifndef CMHL_BERNOULLI_HPP
#define CMHL_BERNOULLI_HPP

#include "cmhl/gmp_val.hpp"

namespace cmhl {

// Exact B_{2k} (so bernoulli_even(0) = 1, bernoulli_even(1) = 1/6, ...).
// Computed once by the integer recurrence and cached for the process;
// initialization is mutex-guarded and safe for concurrent callers.
const BigRat& bernoulli_even(unsigned k);

} // namespace cmhl

#endif
