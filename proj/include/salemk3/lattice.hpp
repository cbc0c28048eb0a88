#pragma once

#include <string>
#include <utility>
#include <vector>

#include "salemk3/matrix.hpp"

namespace salemk3 {

// Integral lattice: free Z-module with a nondegenerate symmetric Gram matrix.
struct IntegerLattice {
    IntMatrix gram;

    IntegerLattice() = default;
    explicit IntegerLattice(IntMatrix g) : gram(std::move(g)) {
        if (!gram.is_square()) throw DimensionError("IntegerLattice: gram not square");
        if (!gram.is_symmetric()) throw PreconditionError("IntegerLattice: gram not symmetric");
    }

    int rank() const { return gram.rows(); }
    BigInt det() const { return det_exact(gram); }
};

enum class RootKind { A, D, E7, E8 };

// Negative definite ADE root lattice: diagonal -2, adjacent nodes +1.
// Node ordering is the Bourbaki chain; for D_n the two fork nodes are the
// last two, for E_7/E_8 the branch node is stored at index 1 and attaches
// to the fourth chain node, matching the usual labelling 1-3-4-5-6-7(-8)
// with 2 below node 4.
inline IntegerLattice make_root_lattice(RootKind kind, int rank) {
    auto chain_ok = [&](int lo) { return rank >= lo; };
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
        case RootKind::A:
            if (!chain_ok(1)) throw PreconditionError("A_n needs n >= 1");
            for (int i = 0; i + 1 < rank; ++i) edges.push_back({i, i + 1});
            break;
        case RootKind::D:
            if (rank < 4) throw PreconditionError("D_n needs n >= 4");
            for (int i = 0; i + 1 < rank - 1; ++i) edges.push_back({i, i + 1});
            edges.push_back({rank - 3, rank - 1});
            break;
        case RootKind::E7:
            if (rank != 7) throw PreconditionError("E7 has rank 7");
            edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}};
            break;
        case RootKind::E8:
            if (rank != 8) throw PreconditionError("E8 has rank 8");
            edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
            break;
    }
    IntMatrix g(rank, rank);
    for (int i = 0; i < rank; ++i) g(i, i) = BigInt(-2);
    for (auto [i, j] : edges) {
        g(i, j) = BigInt(1);
        g(j, i) = BigInt(1);
    }
    return IntegerLattice(std::move(g));
}

inline IntegerLattice hyperbolic_plane() {
    IntMatrix g(2, 2);
    g(0, 1) = BigInt(1);
    g(1, 0) = BigInt(1);
    return IntegerLattice(std::move(g));
}

inline IntegerLattice orthogonal_sum(const IntegerLattice& a, const IntegerLattice& b) {
    int n = a.rank(), m = b.rank();
    IntMatrix g(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = a.gram(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g(n + i, n + j) = b.gram(i, j);
    return IntegerLattice(std::move(g));
}

// Invariant factors > 1 of L*/L, in divisibility order.
struct DiscriminantGroup {
    std::vector<BigInt> invariant_factors;

    BigInt order() const {
        BigInt o(1);
        for (const auto& f : invariant_factors) o *= f;
        return o;
    }
    int length() const { return static_cast<int>(invariant_factors.size()); }
};

inline DiscriminantGroup discriminant_group(const IntegerLattice& l) {
    if (l.det().is_zero()) throw PreconditionError("discriminant_group: degenerate lattice");
    auto snf = smith_normal_form(l.gram);
    DiscriminantGroup g;
    for (const auto& d : snf.diagonal)
        if (d > BigInt(1)) g.invariant_factors.push_back(d);
    return g;
}

inline bool is_p_elementary(const IntegerLattice& l, const BigInt& p) {
    if (!is_prime(p)) throw PreconditionError("is_p_elementary: p must be prime");
    for (const auto& f : discriminant_group(l).invariant_factors)
        if (!p.divisible_by(f)) return false;
    return true;
}

// det(sub) = index^2 * det(super) for finite-index embeddings of equal rank.
inline bool index_relation_check(const IntegerLattice& sub, const IntegerLattice& super, const BigInt& index) {
    if (sub.rank() != super.rank()) throw DimensionError("index_relation_check: rank mismatch");
    return sub.det() == index * index * super.det();
}

inline std::pair<int, int> signature(const IntegerLattice& l) { return signature_exact(l.gram); }

}  // namespace salemk3
