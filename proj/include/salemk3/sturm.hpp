#pragma once

#include <utility>
#include <vector>

#include "salemk3/polynomial.hpp"

namespace salemk3 {

// Sturm chain of a squarefree polynomial, over exact rationals.
inline std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    chain.push_back(p);
    RatPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const RatPoly& a = chain[chain.size() - 2];
        const RatPoly& b = chain[chain.size() - 1];
        RatPoly r = divrem(a, b).r;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

// Sign variations at x, zeros skipped.  With this convention
// V(a) - V(b) counts distinct roots in the half-open interval (a, b].
inline int sign_variations(const std::vector<RatPoly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = q.evaluate(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// Number of distinct real roots of p in (a, b].  p is replaced by its
// squarefree part first, so multiple roots count once.
inline long sturm_count(const IntPoly& p, const Rat& a, const Rat& b) {
    if (!(a < b)) throw PreconditionError("sturm_count: need a < b");
    if (p.is_zero()) throw PreconditionError("sturm_count: zero polynomial");
    IntPoly sf = squarefree_part(p);
    if (sf.degree() == 0) return 0;
    auto chain = sturm_chain(to_rat_poly(sf));
    return sign_variations(chain, a) - sign_variations(chain, b);
}

inline long count_real_roots(const IntPoly& p) {
    Rat b = cauchy_root_bound(p);
    return sturm_count(p, -b, b);
}

// Shrinks an isolating interval around the unique root of p in (lo, hi]
// until its width is at most `width`.  Requires exactly one root inside.
inline std::pair<Rat, Rat> bisect_unique_root(const IntPoly& p, Rat lo, Rat hi, const Rat& width) {
    IntPoly sf = squarefree_part(p);
    auto chain = sturm_chain(to_rat_poly(sf));
    if (sign_variations(chain, lo) - sign_variations(chain, hi) != 1)
        throw PreconditionError("bisect_unique_root: interval does not isolate one root");
    while (hi - lo > width) {
        Rat mid = (lo + hi) * Rat(BigInt(1), BigInt(2));
        if (sign_variations(chain, lo) - sign_variations(chain, mid) == 1)
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

}  // namespace salemk3
