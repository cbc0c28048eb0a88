#pragma once

#include <iostream>
#include <string>

#include "salemk3/bigint.hpp"
#include "salemk3/errors.hpp"

namespace salemk3 {

// Field of fractions over an integral domain R.  R must provide
// gcd_value, exact_div and canonical_unit via ADL.  Values are kept
// reduced with a canonical denominator (positive for BigInt, monic for
// polynomials), so operator== is plain member comparison.
template <class R>
class Fraction {
  public:
    Fraction() : num_(0), den_(1) {}
    Fraction(int x) : num_(x), den_(1) {}
    Fraction(R n) : num_(std::move(n)), den_(1) {}
    Fraction(R n, R d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw Error("Fraction: zero denominator");
        reduce();
    }

    const R& num() const { return num_; }
    const R& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_.is_one(); }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return Fraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.is_zero()) throw SingularMatrixError("Fraction: division by zero");
        return Fraction(a.num_ * b.den_, a.den_ * b.num_);
    }
    Fraction operator-() const {
        Fraction r(*this);
        r.num_ = -r.num_;
        return r;
    }
    Fraction& operator+=(const Fraction& b) { return *this = *this + b; }
    Fraction& operator-=(const Fraction& b) { return *this = *this - b; }
    Fraction& operator*=(const Fraction& b) { return *this = *this * b; }
    Fraction& operator/=(const Fraction& b) { return *this = *this / b; }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

    // Order comparisons rely on canonical positive denominators; they only
    // instantiate for ordered R (BigInt).
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
    friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }

    int sign() const { return num_.sign(); }

    friend std::ostream& operator<<(std::ostream& os, const Fraction& f) {
        os << f.num_;
        if (!f.den_.is_one()) os << "/" << f.den_;
        return os;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return num_.str() + "/" + den_.str();
    }

  private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = R(1);
            return;
        }
        R g = gcd_value(num_, den_);
        if (!g.is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        R u = canonical_unit(den_);
        if (!u.is_one()) {
            num_ = exact_div(num_, u);
            den_ = exact_div(den_, u);
        }
    }

    R num_, den_;
};

using Rat = Fraction<BigInt>;

template <class R>
bool is_integer_elem(const Fraction<R>& f) {
    return f.is_integral() && is_integer_elem(f.num());
}

// Extracts the ring element from an integral fraction.
template <class R>
R frac_to_ring(const Fraction<R>& f) {
    if (!f.is_integral()) throw Error("frac_to_ring: value is not integral");
    return f.num();
}

template <class R>
Fraction<R> exact_div(const Fraction<R>& a, const Fraction<R>& b) {
    return a / b;
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt(s));
    return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace salemk3
