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

#ifndef CMHL_GMP_VAL_HPP
#define CMHL_GMP_VAL_HPP

#include <gmp.h>

#include <cstdint>
#include <string>
#include <utility>

namespace cmhl {

// Thin RAII wrappers over mpz_t / mpq_t.  Exact integers carry PSLQ
// coefficient matrices and Bernoulli numerators; exact rationals carry
// character arguments (multiples of 2*pi) and recovered coefficients.

class BigInt {
public:
    BigInt() { mpz_init(v_); }
    BigInt(long x) { mpz_init_set_si(v_, x); } // NOLINT: implicit by design
    BigInt(const BigInt& o) { mpz_init_set(v_, o.v_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~BigInt() { mpz_clear(v_); }

    mpz_ptr raw() { return v_; }
    mpz_srcptr raw() const { return v_; }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_mul(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt operator-(const BigInt& a) {
        BigInt r;
        mpz_neg(r.v_, a.v_);
        return r;
    }
    BigInt& operator+=(const BigInt& o) {
        mpz_add(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(v_, v_, o.v_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(v_, v_, o.v_);
        return *this;
    }
    // *this -= t * o
    void submul(const BigInt& t, const BigInt& o) { mpz_submul(v_, t.v_, o.v_); }
    void addmul(const BigInt& t, const BigInt& o) { mpz_addmul(v_, t.v_, o.v_); }
    // truncated quotient
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_tdiv_q(r.v_, a.v_, b.v_);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return mpz_cmp(a.v_, b.v_) == 0;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) {
        return mpz_cmp(a.v_, b.v_) < 0;
    }

    int sgn() const { return mpz_sgn(v_); }
    bool is_zero() const { return mpz_sgn(v_) == 0; }
    bool fits_long() const { return mpz_fits_slong_p(v_) != 0; }
    long to_long() const { return mpz_get_si(v_); }
    std::string to_string() const {
        char* s = mpz_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    static BigInt binomial(unsigned long n, unsigned long k) {
        BigInt r;
        mpz_bin_uiui(r.v_, n, k);
        return r;
    }

private:
    mpz_t v_;
};

class BigRat {
public:
    BigRat() { mpq_init(v_); }
    BigRat(long num, long den = 1) {
        mpq_init(v_);
        mpq_set_si(v_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(v_, v_, d);
        mpq_clear(d);
    }
    explicit BigRat(const BigInt& z) {
        mpq_init(v_);
        mpq_set_z(v_, z.raw());
    }
    BigRat(const BigInt& num, const BigInt& den) {
        mpq_init(v_);
        mpz_set(mpq_numref(v_), num.raw());
        mpz_set(mpq_denref(v_), den.raw());
        mpq_canonicalize(v_);
    }
    BigRat(const BigRat& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    BigRat(BigRat&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    BigRat& operator=(const BigRat& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    BigRat& operator=(BigRat&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~BigRat() { mpq_clear(v_); }

    mpq_ptr raw() { return v_; }
    mpq_srcptr raw() const { return v_; }

    friend BigRat operator+(const BigRat& a, const BigRat& b) {
        BigRat r;
        mpq_add(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigRat operator-(const BigRat& a, const BigRat& b) {
        BigRat r;
        mpq_sub(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigRat operator*(const BigRat& a, const BigRat& b) {
        BigRat r;
        mpq_mul(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigRat operator/(const BigRat& a, const BigRat& b) {
        BigRat r;
        mpq_div(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigRat operator-(const BigRat& a) {
        BigRat r;
        mpq_neg(r.v_, a.v_);
        return r;
    }
    BigRat& operator+=(const BigRat& o) {
        mpq_add(v_, v_, o.v_);
        return *this;
    }
    BigRat& operator-=(const BigRat& o) {
        mpq_sub(v_, v_, o.v_);
        return *this;
    }
    BigRat& operator*=(const BigRat& o) {
        mpq_mul(v_, v_, o.v_);
        return *this;
    }

    friend bool operator==(const BigRat& a, const BigRat& b) {
        return mpq_equal(a.v_, b.v_) != 0;
    }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return !(a == b); }
    friend bool operator<(const BigRat& a, const BigRat& b) {
        return mpq_cmp(a.v_, b.v_) < 0;
    }

    int sgn() const { return mpq_sgn(v_); }
    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

    BigInt num() const {
        BigInt z;
        mpz_set(z.raw(), mpq_numref(v_));
        return z;
    }
    BigInt den() const {
        BigInt z;
        mpz_set(z.raw(), mpq_denref(v_));
        return z;
    }

    // Reduce into [0, 1).
    BigRat frac_mod1() const {
        BigRat r(*this);
        mpz_t q;
        mpz_init(q);
        mpz_fdiv_q(q, mpq_numref(r.v_), mpq_denref(r.v_));
        mpz_submul(mpq_numref(r.v_), q, mpq_denref(r.v_));
        mpz_clear(q);
        mpq_canonicalize(r.v_);
        return r;
    }

    std::string to_string() const {
        std::string s = num().to_string();
        if (!is_integer()) s += "/" + den().to_string();
        return s;
    }

private:
    mpq_t v_;
};

} // namespace cmhl

#endif
