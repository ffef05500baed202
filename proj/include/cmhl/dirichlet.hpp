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

#ifndef CMHL_DIRICHLET_HPP
#define CMHL_DIRICHLET_HPP

#include "cmhl/bigcomplex.hpp"
#include "cmhl/unit_group.hpp"

namespace cmhl {

enum class CharFilter { All, Odd, Even };

// A Dirichlet character mod n, stored as one exponent per cyclic
// component of (Z/n)^x.  Values on units are exact roots of unity; the
// exact rational argument (in turns, i.e. multiples of 2*pi) is available
// alongside the complex approximation.  Non-units map to 0.
class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroup> group,
                       std::vector<std::uint64_t> exponents);

    const UnitGroup& group() const { return *group_; }
    std::shared_ptr<const UnitGroup> group_ptr() const { return group_; }
    std::uint64_t modulus() const { return group_->modulus(); }
    const std::vector<std::uint64_t>& exponents() const { return exponents_; }

    bool is_principal() const;
    bool is_odd() const { return odd_; }
    std::uint64_t conductor() const { return conductor_; }
    bool is_primitive() const { return conductor_ == modulus(); }

    // chi(a) = 0 on non-units, else the exact root of unity.
    BigComplex value(std::uint64_t a, const PrecisionContext& ctx) const;
    // exact argument in turns, reduced into [0, 1); requires gcd(a, n) = 1
    BigRat value_arg(std::uint64_t a) const;
    bool value_is_one(std::uint64_t a) const;

    // the primitive character mod conductor() inducing this one;
    // requires a non-principal character (the principal has conductor 1)
    DirichletCharacter primitive_part() const;

    // chi bar = chi^{-1}
    DirichletCharacter conjugate() const;

    // position of this character in the canonical enumeration order
    std::uint64_t index() const;

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
    }

private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<std::uint64_t> exponents_;
    bool odd_ = false;
    std::uint64_t conductor_ = 1;
};

// All characters mod n in odometer order over exponent tuples (last
// component fastest), optionally filtered by parity.
std::vector<DirichletCharacter> characters(std::shared_ptr<const UnitGroup> group,
                                           CharFilter filter = CharFilter::All);
std::vector<DirichletCharacter> characters(std::uint64_t n,
                                           CharFilter filter = CharFilter::All);

} // namespace cmhl

#endif
