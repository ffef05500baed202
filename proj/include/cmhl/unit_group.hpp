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

#ifndef CMHL_UNIT_GROUP_HPP
#define CMHL_UNIT_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace cmhl {

// (Z/n)^x as the Galois group Gal(Q(mu_n)/Q), decomposed into cyclic
// components by CRT: one component per odd prime power, the mod-4
// component of order 2, and <-1>, <5> for 2^k with k >= 3.  Discrete
// logs of every unit are precomputed at construction.
class UnitGroup {
public:
    struct Component {
        std::uint64_t generator; // residue mod n, == 1 mod the other prime powers
        std::uint64_t order;
        std::uint64_t prime;
        std::uint64_t prime_pow;
    };

    static std::shared_ptr<const UnitGroup> make(std::uint64_t n);

    std::uint64_t modulus() const { return n_; }
    std::uint64_t order() const { return units_.size(); } // phi(n)
    const std::vector<Component>& components() const { return components_; }
    const std::vector<std::uint64_t>& units() const { return units_; } // ascending

    bool is_unit(std::uint64_t a) const;
    size_t unit_index(std::uint64_t a) const; // index into units()
    // exponent vector of a (mod n), one entry per component
    const std::vector<std::uint64_t>& dlog(std::uint64_t a) const;

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t conjugation() const { return n_ - 1; } // the element c = -1

    // JSON round-trip of the discrete-log tables for the optional on-disk
    // cache; absence or corruption of a cache never changes results.
    std::string to_cache_json() const;
    static std::shared_ptr<const UnitGroup> from_cache_json(const std::string& text);

private:
    explicit UnitGroup(std::uint64_t n);

    std::uint64_t n_ = 0;
    std::vector<Component> components_;
    std::vector<std::uint64_t> units_;
    std::unordered_map<std::uint64_t, size_t> unit_index_;
    std::vector<std::vector<std::uint64_t>> dlogs_; // by unit index
};

} // namespace cmhl

#endif
