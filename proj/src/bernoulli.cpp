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

#include "cmhl/bernoulli.hpp"

#include <deque>
#include <mutex>
#include <vector>

namespace cmhl {

namespace {

std::mutex g_mutex;
// all Bernoulli numbers B_0, B_1, B_2, ... (B_1 = -1/2 convention)
std::vector<BigRat> g_all;
// deque: returned references stay valid while the cache grows
std::deque<BigRat> g_even;

// sum_{j=0}^{m} C(m+1, j) B_j = 0  for m >= 1
void extend_locked(unsigned upto_index) {
    if (g_all.empty()) {
        g_all.emplace_back(1);
        g_all.emplace_back(-1, 2);
    }
    while (g_all.size() <= upto_index) {
        unsigned m = static_cast<unsigned>(g_all.size());
        BigRat acc;
        for (unsigned j = 0; j < m; ++j) {
            if (g_all[j].is_zero()) continue;
            acc += BigRat(BigInt::binomial(m + 1, j)) * g_all[j];
        }
        g_all.push_back(-acc / BigRat(static_cast<long>(m) + 1));
    }
}

} // namespace

const BigRat& bernoulli_even(unsigned k) {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (g_even.size() <= k) {
        extend_locked(2 * k);
        for (unsigned i = static_cast<unsigned>(g_even.size()); i <= k; ++i)
            g_even.push_back(g_all[2 * i]);
    }
    return g_even[k];
}

} // namespace cmhl
