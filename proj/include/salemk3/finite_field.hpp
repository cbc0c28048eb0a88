#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "salemk3/fraction.hpp"

namespace salemk3 {

// Element of F_p with the modulus carried alongside the value.  A
// default-constructed element acts as a universal zero so that generic
// polynomial code can use T(0); arithmetic adopts the other operand's
// modulus.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Fp() = default;
    Fp(int x) {
        if (x != 0) throw Error("Fp: only the zero element can be modulus-free");
    }
    Fp(std::uint64_t value, std::uint64_t mod) : v(value % mod), p(mod) {}
    static Fp make(long long value, std::uint64_t mod) {
        long long r = value % static_cast<long long>(mod);
        if (r < 0) r += static_cast<long long>(mod);
        return Fp(static_cast<std::uint64_t>(r), mod);
    }

    static std::uint64_t join(std::uint64_t a, std::uint64_t b) {
        if (a == 0) return b;
        if (b == 0) return a;
        if (a != b) throw Error("Fp: modulus mismatch");
        return a;
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t m = join(a.p, b.p);
        if (m == 0) return Fp();
        return Fp((a.v + b.v) % m, m);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t m = join(a.p, b.p);
        if (m == 0) return Fp();
        return Fp((a.v + m - b.v) % m, m);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t m = join(a.p, b.p);
        if (m == 0) return Fp();
        return Fp(static_cast<std::uint64_t>((static_cast<__uint128_t>(a.v) * b.v) % m), m);
    }
    Fp operator-() const {
        if (p == 0) return *this;
        return Fp(v == 0 ? 0 : p - v, p);
    }
    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.p != 0 && b.p != 0 && a.p != b.p) return false;
        return a.v == b.v;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    bool is_zero() const { return v == 0; }

    Fp pow(std::uint64_t e) const {
        Fp base = *this, acc(1 % p, p);
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }
    Fp inverse() const {
        if (v == 0) throw Error("Fp: inverse of zero");
        return pow(p - 2);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
};

// F_{p^2} = F_p[i] with i^2 = -1; a field exactly when p == 3 mod 4.
struct Fp2 {
    Fp a, b;  // a + b i

    Fp2() = default;
    Fp2(int x) : a(x) {}
    Fp2(Fp re, Fp im) : a(re), b(im) {}
    static Fp2 make(long long re, long long im, std::uint64_t p) { return Fp2(Fp::make(re, p), Fp::make(im, p)); }

    friend Fp2 operator+(const Fp2& x, const Fp2& y) { return Fp2(x.a + y.a, x.b + y.b); }
    friend Fp2 operator-(const Fp2& x, const Fp2& y) { return Fp2(x.a - y.a, x.b - y.b); }
    friend Fp2 operator*(const Fp2& x, const Fp2& y) {
        return Fp2(x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a);
    }
    Fp2 operator-() const { return Fp2(-a, -b); }
    friend bool operator==(const Fp2& x, const Fp2& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Fp2& x, const Fp2& y) { return !(x == y); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    Fp2 conj() const { return Fp2(a, -b); }
    Fp norm() const { return a * a + b * b; }
    Fp2 inverse() const {
        Fp n = norm();
        if (n.is_zero()) throw Error("Fp2: inverse of zero");
        Fp ninv = n.inverse();
        return Fp2(a * ninv, -(b * ninv));
    }
    friend Fp2 operator/(const Fp2& x, const Fp2& y) { return x * y.inverse(); }

    Fp2 pow(std::uint64_t e) const {
        Fp2 base = *this;
        Fp2 acc(1);
        if (a.p) acc = Fp2(Fp(1 % a.p, a.p), Fp(0, a.p));
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }
};

inline std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

// First generator of F_{p^2}^* in the deterministic enumeration
// a + b i, a ascending then b; order checked against the factorization of
// p^2 - 1.
inline Fp2 multiplicative_generator_fp2(std::uint64_t p) {
    std::uint64_t order = p * p - 1;
    auto factors = prime_factors(order);
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) {
            if (a == 0 && b == 0) continue;
            Fp2 g = Fp2::make(static_cast<long long>(a), static_cast<long long>(b), p);
            bool generator = true;
            for (auto q : factors)
                if (g.pow(order / q) == Fp2::make(1, 0, p)) {
                    generator = false;
                    break;
                }
            if (generator) return g;
        }
    throw ConsistencyError("multiplicative_generator_fp2: no generator found");
}

// zeta with zeta^4 = -1 in F_{p^2}, as g^((p^2-1)/8); requires p == 3 mod 4.
inline Fp2 find_eighth_root(std::uint64_t p) {
    if (p % 4 != 3) throw PreconditionError("find_eighth_root: p must be congruent 3 mod 4");
    Fp2 g = multiplicative_generator_fp2(p);
    std::uint64_t order = p * p - 1;
    Fp2 zeta = g.pow(order / 8);
    Fp2 minus_one = Fp2::make(-1, 0, p);
    if (zeta.pow(4) != minus_one) throw ConsistencyError("find_eighth_root: zeta^4 != -1");
    return zeta;
}

// Q[z]/(z^4+1): characteristic-zero home of zeta for symbolic section checks.
struct ZetaExt {
    std::array<Rat, 4> c{Rat(0), Rat(0), Rat(0), Rat(0)};

    ZetaExt() = default;
    ZetaExt(int x) { c[0] = Rat(x); }
    explicit ZetaExt(Rat x) { c[0] = std::move(x); }
    static ZetaExt zeta_power(int k) {
        // z^k with z^4 = -1
        k %= 8;
        if (k < 0) k += 8;
        ZetaExt r;
        r.c[k % 4] = (k < 4) ? Rat(1) : Rat(-1);
        return r;
    }

    friend ZetaExt operator+(const ZetaExt& x, const ZetaExt& y) {
        ZetaExt r;
        for (int i = 0; i < 4; ++i) r.c[i] = x.c[i] + y.c[i];
        return r;
    }
    friend ZetaExt operator-(const ZetaExt& x, const ZetaExt& y) {
        ZetaExt r;
        for (int i = 0; i < 4; ++i) r.c[i] = x.c[i] - y.c[i];
        return r;
    }
    friend ZetaExt operator*(const ZetaExt& x, const ZetaExt& y) {
        std::array<Rat, 7> t{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) t[i + j] += x.c[i] * y.c[j];
        ZetaExt r;
        for (int i = 0; i < 4; ++i) r.c[i] = t[i];
        for (int i = 4; i < 7; ++i) r.c[i - 4] -= t[i];  // z^4 = -1
        return r;
    }
    ZetaExt operator-() const {
        ZetaExt r;
        for (int i = 0; i < 4; ++i) r.c[i] = -c[i];
        return r;
    }
    friend bool operator==(const ZetaExt& x, const ZetaExt& y) { return x.c == y.c; }
    friend bool operator!=(const ZetaExt& x, const ZetaExt& y) { return !(x == y); }
    bool is_zero() const {
        for (const auto& v : c)
            if (!v.is_zero()) return false;
        return true;
    }
};

}  // namespace salemk3
