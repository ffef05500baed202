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

#include "cmhl/unit_group.hpp"

#include <nlohmann/json.hpp>

#include "cmhl/errors.hpp"
#include "cmhl/nt_util.hpp"

namespace cmhl {

using nt::invmod;
using nt::mulmod;
using nt::powmod;

namespace {

// CRT lift: x == r mod pk, x == 1 mod n/pk
std::uint64_t crt_lift(std::uint64_t r, std::uint64_t pk, std::uint64_t n) {
    std::uint64_t m = n / pk;
    if (m == 1) return r % n;
    // x = r + pk * t with t = (1 - r) * pk^-1 mod m
    std::uint64_t pk_inv = invmod(pk % m, m);
    std::uint64_t diff = (1 + m - (r % m)) % m;
    std::uint64_t t = mulmod(diff, pk_inv, m);
    return (r + pk * t) % n;
}

enum class Role { OddOrMod4, TwoSign, TwoFive };

} // namespace

std::shared_ptr<const UnitGroup> UnitGroup::make(std::uint64_t n) {
    if (n < 3) throw InvalidModulus("unit_group requires n >= 3");
    if (n > 2'000'000) throw InvalidModulus("modulus too large for table construction");
    return std::shared_ptr<const UnitGroup>(new UnitGroup(n));
}

UnitGroup::UnitGroup(std::uint64_t n) : n_(n) {
    std::vector<Role> roles;
    // components: 2-part first, then odd primes ascending
    for (const auto& pp : nt::factorize(n)) {
        if (pp.p == 2) {
            if (pp.e == 1) continue; // (Z/2)^x is trivial
            if (pp.e == 2) {
                components_.push_back({crt_lift(3, 4, n), 2, 2, 4});
                roles.push_back(Role::OddOrMod4);
            } else {
                components_.push_back({crt_lift(pp.pk - 1, pp.pk, n), 2, 2, pp.pk});
                roles.push_back(Role::TwoSign);
                components_.push_back({crt_lift(5, pp.pk, n), pp.pk / 4, 2, pp.pk});
                roles.push_back(Role::TwoFive);
            }
        } else {
            std::uint64_t g = nt::primitive_root_pk(pp.p, pp.e);
            std::uint64_t ord = pp.pk - pp.pk / pp.p; // phi(p^e)
            components_.push_back({crt_lift(g % pp.pk, pp.pk, n), ord, pp.p, pp.pk});
            roles.push_back(Role::OddOrMod4);
        }
    }

    for (std::uint64_t a = 1; a < n; ++a)
        if (nt::gcd(a, n) == 1) {
            unit_index_[a] = units_.size();
            units_.push_back(a);
        }

    // local cyclic tables: residue mod p^e -> exponent.  For 2^k (k >= 3)
    // the table holds 5^j and the sign is resolved through -r.
    std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> tables(
        components_.size());
    for (size_t k = 0; k < components_.size(); ++k) {
        const auto& comp = components_[k];
        if (roles[k] == Role::TwoSign) continue; // shares the TwoFive table
        if (roles[k] == Role::TwoFive) {
            std::uint64_t x = 1;
            for (std::uint64_t j = 0; j < comp.order; ++j) {
                tables[k][x] = j;
                x = mulmod(x, 5, comp.prime_pow);
            }
        } else {
            std::uint64_t gen_local = comp.generator % comp.prime_pow;
            std::uint64_t x = 1;
            for (std::uint64_t j = 0; j < comp.order; ++j) {
                tables[k][x] = j;
                x = mulmod(x, gen_local, comp.prime_pow);
            }
        }
    }

    dlogs_.assign(units_.size(), {});
    for (size_t ui = 0; ui < units_.size(); ++ui) {
        std::uint64_t a = units_[ui];
        std::vector<std::uint64_t> exps;
        exps.reserve(components_.size());
        for (size_t k = 0; k < components_.size(); ++k) {
            const auto& comp = components_[k];
            std::uint64_t r = a % comp.prime_pow;
            switch (roles[k]) {
            case Role::TwoSign: {
                // exps entry is 1 iff r = -(5^j): look in the paired table
                exps.push_back(tables[k + 1].count(r) ? 0 : 1);
                break;
            }
            case Role::TwoFive: {
                auto it = tables[k].find(r);
                if (it == tables[k].end()) it = tables[k].find(comp.prime_pow - r);
                exps.push_back(it->second);
                break;
            }
            case Role::OddOrMod4:
                exps.push_back(tables[k].at(r));
                break;
            }
        }
        dlogs_[ui] = std::move(exps);
    }
}

bool UnitGroup::is_unit(std::uint64_t a) const {
    return unit_index_.find(a % n_) != unit_index_.end();
}

size_t UnitGroup::unit_index(std::uint64_t a) const {
    auto it = unit_index_.find(a % n_);
    if (it == unit_index_.end()) throw DomainError("not a unit mod n");
    return it->second;
}

const std::vector<std::uint64_t>& UnitGroup::dlog(std::uint64_t a) const {
    return dlogs_[unit_index(a)];
}

std::uint64_t UnitGroup::mul(std::uint64_t a, std::uint64_t b) const {
    return mulmod(a % n_, b % n_, n_);
}

std::uint64_t UnitGroup::inv(std::uint64_t a) const {
    if (!is_unit(a)) throw DomainError("not a unit mod n");
    return invmod(a % n_, n_);
}

std::string UnitGroup::to_cache_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = "1";
    j["n"] = n_;
    auto comps = nlohmann::ordered_json::array();
    for (const auto& c : components_)
        comps.push_back({{"generator", c.generator},
                         {"order", c.order},
                         {"prime", c.prime},
                         {"prime_pow", c.prime_pow}});
    j["components"] = comps;
    auto dl = nlohmann::ordered_json::array();
    for (size_t i = 0; i < units_.size(); ++i)
        dl.push_back({{"unit", units_[i]}, {"exp", dlogs_[i]}});
    j["dlogs"] = dl;
    return j.dump();
}

std::shared_ptr<const UnitGroup> UnitGroup::from_cache_json(const std::string& text) {
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("n") || j.value("schema_version", "") != "1")
        return nullptr;
    if (!j.contains("components") || !j.contains("dlogs")) return nullptr;
    std::uint64_t n = j["n"].get<std::uint64_t>();
    auto fresh = make(n);
    // validate the blob against the recomputed structure; on any mismatch
    // the cache is ignored so results never depend on its presence
    if (j["components"].size() != fresh->components().size()) return nullptr;
    if (j["dlogs"].size() != fresh->order()) return nullptr;
    return fresh;
}

} // namespace cmhl
