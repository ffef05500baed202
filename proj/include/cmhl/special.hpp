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

#ifndef CMHL_SPECIAL_HPP
#define CMHL_SPECIAL_HPP

#include "cmhl/bigreal.hpp"

namespace cmhl {

// log Gamma(x) for x > 0.  Upward argument recurrence to a precision-sized
// shift threshold, then the Stirling asymptotic series with exact
// Bernoulli coefficients.
BigReal log_gamma(const BigReal& x, const PrecisionContext& ctx);

// psi(x) = Gamma'(x)/Gamma(x) for x > 0, same recurrence + Stirling scheme.
BigReal digamma(const BigReal& x, const PrecisionContext& ctx);

// exp(log_gamma(x)) for x > 0.
BigReal gamma(const BigReal& x, const PrecisionContext& ctx);

// Gamma extended to negative non-integer arguments through the recurrence
// Gamma(x) = Gamma(x+m) / (x (x+1) ... (x+m-1)); poles raise DomainError.
BigReal gamma_recurrence(const BigReal& x, const PrecisionContext& ctx);

} // namespace cmhl

#endif
