#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "salemk3/lattice.hpp"
#include "salemk3/matrix.hpp"

namespace salemk3 {

// Divisor classes are coordinate vectors in the fixed 22-element basis
// (O, F, Q, e4..e10, e11..e17, e18, e19, e20, P, R).
template <class R>
using DivisorClass = std::vector<R>;

template <class R>
DivisorClass<R> cls_add(const DivisorClass<R>& a, const DivisorClass<R>& b) {
    DivisorClass<R> r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

template <class R>
DivisorClass<R> cls_sub(const DivisorClass<R>& a, const DivisorClass<R>& b) {
    DivisorClass<R> r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

template <class R>
DivisorClass<R> cls_scale(const R& s, const DivisorClass<R>& a) {
    DivisorClass<R> r(a);
    for (auto& x : r) x = s * x;
    return r;
}

template <class R>
DivisorClass<R> cls_unit(int dim, int index) {
    DivisorClass<R> r(dim, R(0));
    r[index] = R(1);
    return r;
}

template <class R>
R pairing(const Matrix<R>& gram, const DivisorClass<R>& u, const DivisorClass<R>& v) {
    R acc(0);
    for (int i = 0; i < gram.rows(); ++i) {
        if (u[i] == R(0)) continue;
        R row(0);
        for (int j = 0; j < gram.cols(); ++j) {
            if (v[j] == R(0)) continue;
            row = row + gram(i, j) * v[j];
        }
        acc = acc + u[i] * row;
    }
    return acc;
}

// Fixed basis layout of NS(X(p)).
namespace ns {
inline constexpr int O = 0;
inline constexpr int F = 1;
inline constexpr int Q = 2;
inline constexpr int E4 = 3;   // chain e4..e10 occupies 3..9 (branch e8 at 7)
inline constexpr int E11 = 10;  // chain e11..e17 occupies 10..16 (branch e15 at 14)
inline constexpr int E18 = 17;
inline constexpr int E19 = 18;
inline constexpr int E20 = 19;
inline constexpr int P = 20;
inline constexpr int RR = 21;
inline constexpr int RANK = 22;
}  // namespace ns

inline std::vector<std::string> ns_basis_labels() {
    std::vector<std::string> labels = {"O", "F", "Q"};
    for (int i = 4; i <= 20; ++i) labels.push_back("e" + std::to_string(i));
    labels.push_back("P");
    labels.push_back("R");
    return labels;
}

// The intersection matrix of NS(X(p)) in the fixed basis, parameter n with
// p = 4n + 3.  Sections O, Q, P, R pair as O.P = Q.P = n, P.R = 2n (and the
// same with R); P and R both meet e4; P additionally meets e20.
template <class R>
Matrix<R> ns_gram_matrix(const R& n) {
    using namespace ns;
    Matrix<R> g(RANK, RANK);
    for (int i = 0; i < RANK; ++i) g(i, i) = R(-2);
    g(F, F) = R(0);
    auto set = [&](int i, int j, R v) {
        g(i, j) = v;
        g(j, i) = std::move(v);
    };
    set(O, F, R(1));
    set(F, Q, R(1));
    set(F, P, R(1));
    set(F, RR, R(1));
    set(Q, E4, R(1));
    set(Q, E11, R(1));
    set(Q, E19, R(1));
    // chain e4-e5-e6-e7-e9-e10 with branch e8 at e7
    set(E4, E4 + 1, R(1));
    set(E4 + 1, E4 + 2, R(1));
    set(E4 + 2, E4 + 3, R(1));
    set(E4 + 3, E4 + 4, R(1));  // e7-e8
    set(E4 + 3, E4 + 5, R(1));  // e7-e9
    set(E4 + 5, E4 + 6, R(1));  // e9-e10
    // chain e11-e12-e13-e14-e16-e17 with branch e15 at e14
    set(E11, E11 + 1, R(1));
    set(E11 + 1, E11 + 2, R(1));
    set(E11 + 2, E11 + 3, R(1));
    set(E11 + 3, E11 + 4, R(1));  // e14-e15
    set(E11 + 3, E11 + 5, R(1));  // e14-e16
    set(E11 + 5, E11 + 6, R(1));  // e16-e17
    // A3 inside the I0* fiber: e18 is the central component
    set(E18, E19, R(1));
    set(E18, E20, R(1));
    set(E20, P, R(1));
    set(O, P, n);
    set(O, RR, n);
    set(Q, P, n);
    set(Q, RR, n);
    set(E4, P, R(1));
    set(E4, RR, R(1));
    R two_n = R(2) * n;
    set(P, RR, two_n);
    return g;
}

template <class R>
struct NsModel {
    BigInt p;  // concrete prime; zero in symbolic mode
    R n;
    bool symbolic = false;
    Matrix<R> gram;
    std::vector<std::string> basis_labels;
    int artin_invariant = 1;

    int rank() const { return gram.rows(); }
};

// Builds the model for a concrete prime p = 4n + 3.
inline NsModel<BigInt> build_ns_model(const BigInt& p) {
    if (!is_prime(p)) throw PreconditionError("build_ns_model: p = " + p.str() + " is not prime");
    if (!(p % BigInt(4) == BigInt(3)))
        throw PreconditionError("build_ns_model: p = " + p.str() +
                                " is not inert in Q(i): need the Legendre symbol (-1|p) = -1, i.e. p == 3 mod 4");
    NsModel<BigInt> m;
    m.p = p;
    m.n = exact_div(p - BigInt(3), BigInt(4));
    m.gram = ns_gram_matrix(m.n);
    m.basis_labels = ns_basis_labels();
    return m;
}

// Same model with n left as a formal variable; scalars live in Q[n] with
// integer values.
inline NsModel<RatPoly> build_ns_model_symbolic() {
    NsModel<RatPoly> m;
    m.p = BigInt(0);
    m.n = RatPoly::variable();
    m.symbolic = true;
    m.gram = ns_gram_matrix(m.n);
    m.basis_labels = ns_basis_labels();
    return m;
}

// The unique rational solution v of Gram * v = pairings, accepted only when
// integral (i.e. the prescribed intersection numbers belong to NS).
template <class R>
DivisorClass<R> class_from_intersections(const NsModel<R>& model, const DivisorClass<R>& pairings) {
    using K = Fraction<R>;
    int nn = model.rank();
    if (static_cast<int>(pairings.size()) != nn)
        throw DimensionError("class_from_intersections: pairing vector size mismatch");
    Matrix<K> a = model.gram.template map<K>([](const R& v) { return K(v); });
    Matrix<K> b(nn, 1);
    for (int i = 0; i < nn; ++i) b(i, 0) = K(pairings[i]);
    auto x = solve_linear(a, b);
    if (!x) throw SingularMatrixError("class_from_intersections: degenerate gram");
    DivisorClass<R> cls;
    cls.reserve(nn);
    for (int i = 0; i < nn; ++i) {
        const K& v = (*x)(i, 0);
        if (!is_integer_elem(v))
            throw NotInLatticeError("class_from_intersections: solution is not integral (not in NS)");
        cls.push_back(frac_to_ring(v));
    }
    return cls;
}

enum class CurveKind { FiberComponent, Section };

template <class R>
struct CurveRecord {
    std::string label;
    DivisorClass<R> cls;
    CurveKind kind;
    int fiber_id = -1;          // 0: e4-chain fiber, 1: e11-chain fiber, 2: I0* fiber
    int multiplicity = 0;       // multiplicity inside its fiber
    int sort_key = 0;           // basis position; off-basis curves come after
};

template <class R>
struct CurveTable {
    std::vector<CurveRecord<R>> records;

    const CurveRecord<R>& by_label(const std::string& label) const {
        for (const auto& r : records)
            if (r.label == label) return r;
        throw Error("CurveTable: unknown curve '" + label + "'");
    }
    int index_of(const std::string& label) const {
        for (size_t i = 0; i < records.size(); ++i)
            if (records[i].label == label) return static_cast<int>(i);
        throw Error("CurveTable: unknown curve '" + label + "'");
    }
};

// The 21 components of the three singular fibers of the isotrivial
// fibration plus the four sections.  The two chain completions c_inf/c_0
// close the affine E7 fibers; d3 and d4 are the I0* legs met by O and R.
template <class R>
CurveTable<R> curve_table(const NsModel<R>& model) {
    using namespace ns;
    const int dim = model.rank();
    CurveTable<R> t;
    auto unit = [&](int idx) { return cls_unit<R>(dim, idx); };
    auto push = [&](std::string label, DivisorClass<R> cls, CurveKind kind, int fiber, int mult, int key) {
        t.records.push_back({std::move(label), std::move(cls), kind, fiber, mult, key});
    };

    const DivisorClass<R> fiber_class = unit(F);

    // fiber 0: affine E7 chain e4-e5-e6-e7-e9-e10-c_inf, branch e8 at e7
    const int chainA[7] = {E4, E4 + 1, E4 + 2, E4 + 3, E4 + 4, E4 + 5, E4 + 6};
    const int multA[7] = {1, 2, 3, 4, 2, 3, 2};  // e4,e5,e6,e7,e8,e9,e10
    DivisorClass<R> c_inf = fiber_class;
    for (int i = 0; i < 7; ++i) {
        push(model.basis_labels[chainA[i]], unit(chainA[i]), CurveKind::FiberComponent, 0, multA[i], chainA[i]);
        c_inf = cls_sub(c_inf, cls_scale(R(multA[i]), unit(chainA[i])));
    }
    push("c_inf", c_inf, CurveKind::FiberComponent, 0, 1, 22);

    // fiber 1: affine E7 chain e11-e12-e13-e14-e16-e17-c_0, branch e15 at e14
    const int chainB[7] = {E11, E11 + 1, E11 + 2, E11 + 3, E11 + 4, E11 + 5, E11 + 6};
    const int multB[7] = {1, 2, 3, 4, 2, 3, 2};
    DivisorClass<R> c_0 = fiber_class;
    for (int i = 0; i < 7; ++i) {
        push(model.basis_labels[chainB[i]], unit(chainB[i]), CurveKind::FiberComponent, 1, multB[i], chainB[i]);
        c_0 = cls_sub(c_0, cls_scale(R(multB[i]), unit(chainB[i])));
    }
    push("c_0", c_0, CurveKind::FiberComponent, 1, 1, 23);

    // fiber 2: I0* with central component e18; legs e19 (met by Q),
    // e20 (met by P), d3 (met by O) and d4 (met by R)
    push(model.basis_labels[E18], unit(E18), CurveKind::FiberComponent, 2, 2, E18);
    push(model.basis_labels[E19], unit(E19), CurveKind::FiberComponent, 2, 1, E19);
    push(model.basis_labels[E20], unit(E20), CurveKind::FiberComponent, 2, 1, E20);
    DivisorClass<R> want_d3(dim, R(0));
    want_d3[O] = R(1);
    want_d3[E18] = R(1);
    DivisorClass<R> d3 = class_from_intersections(model, want_d3);
    push("d3", d3, CurveKind::FiberComponent, 2, 1, 24);
    DivisorClass<R> d4 = cls_sub(cls_sub(fiber_class, cls_scale(R(2), unit(E18))),
                                 cls_add(cls_add(unit(E19), unit(E20)), d3));
    push("d4", d4, CurveKind::FiberComponent, 2, 1, 25);

    push("O", unit(O), CurveKind::Section, -1, 0, O);
    push("Q", unit(Q), CurveKind::Section, -1, 0, Q);
    push("P", unit(P), CurveKind::Section, -1, 0, P);
    push("R", unit(RR), CurveKind::Section, -1, 0, RR);

    // every record must be a (-2)-class with the right fiber degree
    for (const auto& rec : t.records) {
        if (pairing(model.gram, rec.cls, rec.cls) != R(-2))
            throw ConsistencyError("curve_table: " + rec.label + " has self-intersection != -2");
        R deg = pairing(model.gram, rec.cls, fiber_class);
        if (rec.kind == CurveKind::FiberComponent && deg != R(0))
            throw ConsistencyError("curve_table: component " + rec.label + " meets the fiber");
        if (rec.kind == CurveKind::Section && deg != R(1))
            throw ConsistencyError("curve_table: section " + rec.label + " has fiber degree != 1");
    }
    return t;
}

struct NsVerifyReport {
    bool symmetric_ok = false;
    bool det_ok = false;
    bool p_elementary_ok = false;
    bool discriminant_ok = false;
    bool signature_ok = false;
    bool sigma_ok = false;
    BigInt det;
    std::vector<BigInt> invariant_factors;
    std::pair<int, int> sig{0, 0};

    bool all_ok() const {
        return symmetric_ok && det_ok && p_elementary_ok && discriminant_ok && signature_ok && sigma_ok;
    }
};

// Checks det = -p^2, p-elementarity with discriminant group (Z/p)^2,
// signature (1,21) and Artin invariant 1.
inline NsVerifyReport verify_ns_model(const NsModel<BigInt>& model) {
    NsVerifyReport rep;
    rep.symmetric_ok = model.gram.is_symmetric();
    rep.det = det_exact(model.gram);
    rep.det_ok = rep.det == -(model.p * model.p);
    IntegerLattice l(model.gram);
    auto disc = discriminant_group(l);
    rep.invariant_factors = disc.invariant_factors;
    rep.discriminant_ok = disc.invariant_factors.size() == 2 && disc.invariant_factors[0] == model.p &&
                          disc.invariant_factors[1] == model.p;
    rep.p_elementary_ok = is_p_elementary(l, model.p);
    rep.sig = signature_exact(model.gram);
    rep.signature_ok = rep.sig == std::make_pair(1, 21);
    rep.sigma_ok = rep.det == -BigInt::pow(model.p, 2 * static_cast<unsigned long>(model.artin_invariant));
    return rep;
}

}  // namespace salemk3
