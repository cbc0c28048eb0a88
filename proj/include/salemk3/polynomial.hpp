#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "salemk3/errors.hpp"
#include "salemk3/fraction.hpp"

namespace salemk3 {

// Dense univariate polynomial, index i = coefficient of x^i.  The zero
// polynomial has an empty coefficient vector (degree -1); otherwise the
// leading coefficient is nonzero.
template <class T>
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(int c) {
        coeffs_.push_back(T(c));
        trim();
    }
    Polynomial(T c) {
        coeffs_.push_back(std::move(c));
        trim();
    }
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(T c, int k) {
        std::vector<T> v;
        v.reserve(k + 1);
        for (int i = 0; i < k; ++i) v.push_back(T(0));
        v.push_back(std::move(c));
        return Polynomial(std::move(v));
    }
    static Polynomial variable() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == T(1); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    T coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return T(0);
        return coeffs_[i];
    }
    const T& leading() const { return coeffs_.back(); }
    const std::vector<T>& coeffs() const { return coeffs_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> v(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = v[i] + a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = v[i] + b.coeffs_[i];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> v(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = v[i] + a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = v[i] - b.coeffs_[i];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(v));
    }
    Polynomial operator-() const {
        std::vector<T> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(-c);
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const T& s, const Polynomial& p) {
        std::vector<T> v;
        v.reserve(p.coeffs_.size());
        for (const auto& c : p.coeffs_) v.push_back(s * c);
        return Polynomial(std::move(v));
    }
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    T evaluate(const T& x) const {
        if (is_zero()) return T(0);
        T acc = coeffs_.back();
        for (int i = degree() - 1; i >= 0; --i) acc = acc * x + coeffs_[i];
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<T> v;
        v.reserve(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) v.push_back(T(static_cast<int>(i)) * coeffs_[i]);
        return Polynomial(std::move(v));
    }

    // Coefficient reversal x^deg * p(1/x).
    Polynomial reversed() const {
        std::vector<T> v(coeffs_.rbegin(), coeffs_.rend());
        return Polynomial(std::move(v));
    }

    bool is_palindromic() const {
        int d = degree();
        for (int i = 0; 2 * i <= d; ++i)
            if (coeff(i) != coeff(d - i)) return false;
        return true;
    }

    template <class U, class Fn>
    Polynomial<U> map(Fn fn) const {
        std::vector<U> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(fn(c));
        return Polynomial<U>(std::move(v));
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            if (coeff(i) == T(0)) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << coeff(i) << ")";
            if (i >= 1) os << "*" << var;
            if (i >= 2) os << "^" << i;
        }
        return os.str();
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<Rat>;
// Rational function field Q(n), the scalar carrier of the symbolic pipeline.
using RatFunc = Fraction<RatPoly>;

// ---- field-coefficient division ----------------------------------------

template <class K>
struct DivRem {
    Polynomial<K> q, r;
};

template <class K>
DivRem<K> divrem(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    std::vector<K> rem(a.coeffs());
    int db = b.degree();
    int da = a.degree();
    if (da < db) return {Polynomial<K>(), a};
    std::vector<K> quo(da - db + 1, K(0));
    K lead = b.leading();
    for (int i = da; i >= db; --i) {
        if (rem[i] == K(0)) continue;
        K f = rem[i] / lead;
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - f * b.coeff(j);
    }
    return {Polynomial<K>(std::move(quo)), Polynomial<K>(std::move(rem))};
}

template <class K>
Polynomial<K> exact_div(const Polynomial<K>& a, const Polynomial<K>& b) {
    auto dr = divrem(a, b);
    if (!dr.r.is_zero()) throw Error("exact_div: polynomial division is not exact");
    return dr.q;
}

template <class K>
Polynomial<K> make_monic(const Polynomial<K>& p) {
    if (p.is_zero()) return p;
    K inv = K(1) / p.leading();
    return inv * p;
}

// Monic Euclidean gcd; canonical representative for fraction reduction.
template <class K>
Polynomial<K> gcd_value(const Polynomial<K>& a, const Polynomial<K>& b) {
    Polynomial<K> x = a, y = b;
    while (!y.is_zero()) {
        auto dr = divrem(x, y);
        x = y;
        y = dr.r;
    }
    return make_monic(x);
}

// Unit used to canonicalize fraction denominators: makes them monic.
template <class K>
Polynomial<K> canonical_unit(const Polynomial<K>& p) {
    if (p.is_zero()) return Polynomial<K>(1);
    return Polynomial<K>(p.leading());
}

inline bool is_integer_elem(const RatPoly& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_integral()) return false;
    return true;
}

// ---- integer-coefficient helpers ----------------------------------------

inline RatPoly to_rat_poly(const IntPoly& p) {
    return p.template map<Rat>([](const BigInt& c) { return Rat(c); });
}

inline IntPoly to_int_poly(const RatPoly& p) {
    return p.template map<BigInt>([](const Rat& c) {
        if (!c.is_integral()) throw Error("to_int_poly: non-integral coefficient");
        return c.num();
    });
}

struct PolyDivision {
    RatPoly quotient;
    RatPoly remainder;
    bool exact;  // remainder zero and quotient integral
};

// Division with rational quotient/remainder plus exactness flag.
inline PolyDivision poly_divrem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw PreconditionError("poly_divrem: division by zero polynomial");
    auto dr = divrem(to_rat_poly(a), to_rat_poly(b));
    bool exact = dr.r.is_zero() && is_integer_elem(dr.q);
    return {dr.q, dr.r, exact};
}

inline bool divides_exactly(const IntPoly& b, const IntPoly& a) { return poly_divrem(a, b).exact; }

inline BigInt content(const IntPoly& p) {
    BigInt g(0);
    for (const auto& c : p.coeffs()) g = gcd_value(g, c);
    return g;
}

// Squarefree part p / gcd(p, p'), primitive over Z with positive leading coeff.
inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    RatPoly q = to_rat_poly(p);
    RatPoly g = gcd_value(q, q.derivative());
    RatPoly s = exact_div(q, g);
    // clear denominators, then strip content
    BigInt den(1);
    for (const auto& c : s.coeffs()) den = exact_div(den * c.den(), gcd_value(den, c.den()));
    IntPoly z = (Rat(den) * s).template map<BigInt>([](const Rat& c) { return c.num(); });
    BigInt ct = content(z);
    if (!ct.is_zero() && !ct.is_one()) z = z.template map<BigInt>([&](const BigInt& c) { return exact_div(c, ct); });
    if (z.leading().sign() < 0) z = -z;
    return z;
}

inline long euler_phi(long k) {
    long result = k, m = k;
    for (long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            result -= result / d;
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace detail {
inline const IntPoly& cyclotomic_memo(long k, std::map<long, IntPoly>& memo) {
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    // x^k - 1 divided by all lower cyclotomic factors
    std::vector<BigInt> xk(k + 1, BigInt(0));
    xk[0] = BigInt(-1);
    xk[k] = BigInt(1);
    IntPoly acc{std::vector<BigInt>(xk)};
    for (long d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        const IntPoly& phi_d = cyclotomic_memo(d, memo);
        auto dr = poly_divrem(acc, phi_d);
        if (!dr.exact) throw ConsistencyError("cyclotomic recursion: inexact division");
        acc = to_int_poly(dr.quotient);
    }
    return memo.emplace(k, std::move(acc)).first->second;
}
}  // namespace detail

// Phi_k via the recursion x^k - 1 = prod_{d|k} Phi_d.
inline IntPoly cyclotomic_poly(long k) {
    if (k < 1) throw PreconditionError("cyclotomic_poly: k must be >= 1");
    std::map<long, IntPoly> memo;
    return detail::cyclotomic_memo(k, memo);
}

// 1 + max|c_i| / |lead|; all real roots lie in (-bound, bound).
inline Rat cauchy_root_bound(const IntPoly& p) {
    if (p.is_zero()) throw PreconditionError("cauchy_root_bound: zero polynomial");
    BigInt mx(0);
    for (int i = 0; i < p.degree(); ++i) {
        BigInt a = p.coeff(i).abs();
        if (a > mx) mx = a;
    }
    return Rat(1) + Rat(mx, p.leading().abs());
}

inline std::optional<long> to_int_checked(const BigInt& v) {
    if (!v.fits_long()) return std::nullopt;
    return v.to_long();
}

inline std::optional<long> to_int_checked(const RatPoly& p) {
    if (p.is_zero()) return 0L;
    if (!p.is_constant()) return std::nullopt;
    Rat c = p.coeff(0);
    if (!c.is_integral() || !c.num().fits_long()) return std::nullopt;
    return c.num().to_long();
}

}  // namespace salemk3
