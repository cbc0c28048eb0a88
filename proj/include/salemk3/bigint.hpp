#pragma once

#include <gmp.h>

#include <cassert>
#include <iostream>
#include <string>
#include <utility>

#include "salemk3/errors.hpp"

namespace salemk3 {

// Arbitrary-precision integer with value semantics, backed by GMP.
// Division is truncated (C semantics); exact_div asserts divisibility.
class BigInt {
  public:
    BigInt() { mpz_init(v_); }
    BigInt(int x) { mpz_init_set_si(v_, x); }
    BigInt(long x) { mpz_init_set_si(v_, x); }
    BigInt(long long x) : BigInt(static_cast<long>(x)) {}
    explicit BigInt(const std::string& s) {
        if (mpz_init_set_str(v_, s.c_str(), 10) != 0) {
            mpz_clear(v_);
            throw Error("BigInt: malformed decimal string '" + s + "'");
        }
    }
    BigInt(const BigInt& o) { mpz_init_set(v_, o.v_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    ~BigInt() { mpz_clear(v_); }

    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }

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
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        assert(!b.is_zero());
        BigInt r;
        mpz_tdiv_q(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        assert(!b.is_zero());
        BigInt r;
        mpz_tdiv_r(r.v_, a.v_, b.v_);
        return r;
    }
    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.v_, v_);
        return r;
    }
    BigInt& operator+=(const BigInt& b) {
        mpz_add(v_, v_, b.v_);
        return *this;
    }
    BigInt& operator-=(const BigInt& b) {
        mpz_sub(v_, v_, b.v_);
        return *this;
    }
    BigInt& operator*=(const BigInt& b) {
        mpz_mul(v_, v_, b.v_);
        return *this;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    bool is_zero() const { return mpz_sgn(v_) == 0; }
    bool is_one() const { return mpz_cmp_si(v_, 1) == 0; }
    int sign() const { return mpz_sgn(v_); }
    bool is_odd() const { return mpz_odd_p(v_) != 0; }

    BigInt abs() const {
        BigInt r;
        mpz_abs(r.v_, v_);
        return r;
    }

    bool divisible_by(const BigInt& d) const {
        assert(!d.is_zero());
        return mpz_divisible_p(v_, d.v_) != 0;
    }

    static BigInt pow(const BigInt& base, unsigned long e) {
        BigInt r;
        mpz_pow_ui(r.v_, base.v_, e);
        return r;
    }

    bool fits_long() const { return mpz_fits_slong_p(v_) != 0; }
    long to_long() const {
        assert(fits_long());
        return mpz_get_si(v_);
    }

    std::string str() const {
        char* raw = mpz_get_str(nullptr, 10, v_);
        std::string s(raw);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(raw, s.size() + 1);
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& a) { return os << a.str(); }

    friend void swap(BigInt& a, BigInt& b) noexcept { mpz_swap(a.v_, b.v_); }

    friend BigInt gcd_value(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.v_, a.v_, b.v_);
        return r;
    }
    friend BigInt exact_div(const BigInt& a, const BigInt& b) {
        if (b.is_zero() || !a.divisible_by(b)) throw Error("exact_div: division is not exact");
        BigInt r;
        mpz_divexact(r.v_, a.v_, b.v_);
        return r;
    }

  private:
    mpz_t v_;
};

// Unit by which a canonical fraction denominator is divided: keeps den > 0.
inline BigInt canonical_unit(const BigInt& a) { return a.sign() < 0 ? BigInt(-1) : BigInt(1); }

inline bool is_integer_elem(const BigInt&) { return true; }

inline bool is_unit(const BigInt& a) { return a == BigInt(1) || a == BigInt(-1); }

// Deterministic trial-division primality check; inputs stay desk-scale.
inline bool is_prime(const BigInt& m) {
    if (m < BigInt(2)) return false;
    BigInt d(2);
    while (d * d <= m) {
        if ((m % d).is_zero()) return false;
        d += BigInt(1);
    }
    return true;
}

}  // namespace salemk3
