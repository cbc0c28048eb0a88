#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "salemk3/lattice.hpp"
#include "salemk3/ns_model.hpp"

namespace salemk3 {

enum class FiberKind { In, III, IIIStar, IVStar, I0Star };

inline std::string fiber_kind_name(FiberKind k, int in_n = 0) {
    switch (k) {
        case FiberKind::In: return "I" + std::to_string(in_n);
        case FiberKind::III: return "III";
        case FiberKind::IIIStar: return "III*";
        case FiberKind::IVStar: return "IV*";
        case FiberKind::I0Star: return "I0*";
    }
    return "?";
}

// Singular fiber of an elliptic fibration.  `comps` holds indices into the
// owning FibrationData's class pool, in a kind-specific layout:
//   In:      cycle order (comps[i] meets comps[i+1 mod n])
//   III:     [theta_0, theta_1]
//   IIIStar: comps[0..6] = long chain (ends simple), comps[7] = branch node
//   I0Star:  comps[0] = central component, comps[1..4] = legs
//   IVStar:  comps[0] = center, comps[1,2] / [3,4] / [5,6] = arm (mid, end)
// `zero` is the position (in comps) of the component met by the zero section.
struct KodairaFiber {
    FiberKind kind;
    int in_n = 0;
    std::string position;
    std::vector<int> comps;
    std::vector<int> marks;
    int zero = -1;

    int size() const { return static_cast<int>(comps.size()); }

    int euler() const {
        switch (kind) {
            case FiberKind::In: return in_n;
            case FiberKind::III: return 3;
            case FiberKind::IIIStar: return 9;
            case FiberKind::IVStar: return 8;
            case FiberKind::I0Star: return 6;
        }
        return 0;
    }

    bool is_simple(int pos) const { return marks[pos] == 1; }

    std::vector<int> simple_positions() const {
        std::vector<int> out;
        for (int i = 0; i < size(); ++i)
            if (marks[i] == 1) out.push_back(i);
        return out;
    }
};

// Known section of a fibration: class plus, for each singular fiber, the
// position of the simple component it meets.
template <class R>
struct SectionClass {
    std::string label;
    DivisorClass<R> cls;
    std::vector<int> comp;
};

template <class R>
struct FibrationData {
    std::string name;
    int chi = 2;
    Matrix<R> gram;  // ambient intersection form
    std::vector<DivisorClass<R>> classes;
    std::vector<std::string> class_labels;
    std::vector<KodairaFiber> fibers;
    DivisorClass<R> fiber_class;
    SectionClass<R> zero_section;
    std::vector<SectionClass<R>> sections;  // includes the zero section
    int residual_euler = 0;

    int dim() const { return gram.rows(); }

    int add_class(std::string label, DivisorClass<R> cls) {
        class_labels.push_back(std::move(label));
        classes.push_back(std::move(cls));
        return static_cast<int>(classes.size()) - 1;
    }
    int class_index(const std::string& label) const {
        for (size_t i = 0; i < class_labels.size(); ++i)
            if (class_labels[i] == label) return static_cast<int>(i);
        throw Error("FibrationData: unknown class '" + label + "'");
    }
    const SectionClass<R>& section(const std::string& label) const {
        for (const auto& s : sections)
            if (s.label == label) return s;
        throw Error("FibrationData: unknown section '" + label + "'");
    }
};

// ---- Kodaira classification (j = 1728 family y^2 = x^3 + a(t) x) ----------

struct PlaceClassification {
    std::string position;  // "t=0", "t=1", "t=inf"
    FiberKind kind;
};

namespace detail {
template <class K>
int valuation_at(Polynomial<K>& a, const Polynomial<K>& place) {
    int v = 0;
    while (true) {
        auto dr = divrem(a, place);
        if (!dr.r.is_zero()) break;
        a = dr.q;
        ++v;
    }
    return v;
}
}  // namespace detail

// Fiber types of y^2 = x^3 + a(t) x from the vanishing orders of a at the
// places t = 0, 1, inf.  With c4 = -48 a and Delta = -64 a^3 the admissible
// patterns are ord(a) = 1 -> III, 2 -> I0*, 3 -> III*.  `chi` fixes the
// weight at infinity (deg a <= 4 chi); chi < 0 infers the minimal value.
template <class K>
std::vector<PlaceClassification> classify_kodaira(const Polynomial<K>& a, int chi = -1, long field_char = 0) {
    if (a.is_zero()) throw PreconditionError("classify_kodaira: a must be nonzero");
    if (field_char == 2 || field_char == 3)
        throw PreconditionError("classify_kodaira: characteristic 2 and 3 are not supported");
    if (chi < 0) chi = (a.degree() + 3) / 4;
    if (a.degree() > 4 * chi) throw PreconditionError("classify_kodaira: deg a exceeds 4*chi");

    Polynomial<K> rest = a;
    Polynomial<K> t = Polynomial<K>::variable();
    Polynomial<K> t1 = t - Polynomial<K>(1);
    int ord0 = detail::valuation_at(rest, t);
    int ord1 = detail::valuation_at(rest, t1);
    if (rest.degree() > 0)
        throw UnsupportedError("classify_kodaira: singular place outside {0, 1, inf}");
    int ordinf = 4 * chi - a.degree();

    auto kind_of = [](int ord, const std::string& pos) -> FiberKind {
        switch (ord) {
            case 1: return FiberKind::III;
            case 2: return FiberKind::I0Star;
            case 3: return FiberKind::IIIStar;
        }
        throw UnsupportedError("classify_kodaira: vanishing order " + std::to_string(ord) + " at " + pos +
                               " is outside the supported table");
    };
    std::vector<PlaceClassification> out;
    if (ord0 > 0) out.push_back({"t=0", kind_of(ord0, "t=0")});
    if (ord1 > 0) out.push_back({"t=1", kind_of(ord1, "t=1")});
    if (ordinf > 0) out.push_back({"t=inf", kind_of(ordinf, "t=inf")});
    return out;
}

// ---- trivial lattice -------------------------------------------------------

inline IntegerLattice root_lattice_of_fiber(const KodairaFiber& f) {
    switch (f.kind) {
        case FiberKind::In:
            if (f.in_n < 2) throw PreconditionError("I_n root lattice needs n >= 2");
            return make_root_lattice(RootKind::A, f.in_n - 1);
        case FiberKind::III: return make_root_lattice(RootKind::A, 1);
        case FiberKind::IIIStar: return make_root_lattice(RootKind::E7, 7);
        case FiberKind::I0Star: return make_root_lattice(RootKind::D, 4);
        case FiberKind::IVStar: {
            // E6: chain 1-3-4-5-6 with node 2 attached to node 4
            IntMatrix g(6, 6);
            for (int i = 0; i < 6; ++i) g(i, i) = BigInt(-2);
            for (auto [i, j] : {std::pair{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}}) {
                g(i, j) = BigInt(1);
                g(j, i) = BigInt(1);
            }
            return IntegerLattice(std::move(g));
        }
    }
    throw Error("root_lattice_of_fiber: unreachable");
}

// U plus one ADE root summand per reducible fiber.
template <class R>
IntegerLattice trivial_lattice_of(const FibrationData<R>& f) {
    IntegerLattice acc = hyperbolic_plane();
    for (const auto& fib : f.fibers) {
        if (fib.kind == FiberKind::In && fib.in_n < 2) continue;  // irreducible
        acc = orthogonal_sum(acc, root_lattice_of_fiber(fib));
    }
    return acc;
}

// ---- local height contributions -------------------------------------------

// Shioda's correction term c_v for two sections meeting the components at
// positions a_pos / b_pos of the fiber's layout.
template <class R>
Fraction<R> local_contribution(const KodairaFiber& f, int a_pos, int b_pos) {
    using FK = Fraction<R>;
    if (a_pos < 0 || a_pos >= f.size() || b_pos < 0 || b_pos >= f.size())
        throw PreconditionError("local_contribution: component not in fiber");
    if (!f.is_simple(a_pos) || !f.is_simple(b_pos))
        throw PreconditionError("local_contribution: sections meet simple components only");
    if (a_pos == f.zero || b_pos == f.zero) return FK(0);
    switch (f.kind) {
        case FiberKind::In: {
            long n = f.in_n;
            long i = ((a_pos - f.zero) % n + n) % n;
            long j = ((b_pos - f.zero) % n + n) % n;
            if (i > j) std::swap(i, j);
            return FK(R(static_cast<int>(i * (n - j))), R(static_cast<int>(n)));
        }
        case FiberKind::III: return a_pos == b_pos ? FK(R(1), R(2)) : FK(0);
        case FiberKind::IIIStar: return a_pos == b_pos ? FK(R(3), R(2)) : FK(0);
        case FiberKind::I0Star: return a_pos == b_pos ? FK(1) : FK(R(1), R(2));
        case FiberKind::IVStar: return a_pos == b_pos ? FK(R(4), R(3)) : FK(R(2), R(3));
    }
    throw Error("local_contribution: unreachable");
}

// ---- height pairing --------------------------------------------------------

// <P,Q> = chi + P.O + Q.O - P.Q - sum_v c_v(P,Q); the zero section is the
// zero of the Mordell-Weil group.
template <class R>
Fraction<R> height_pairing(const SectionClass<R>& s, const SectionClass<R>& t, const FibrationData<R>& f) {
    using FK = Fraction<R>;
    if (s.cls == f.zero_section.cls || t.cls == f.zero_section.cls) return FK(0);
    FK h(R(f.chi));
    h += FK(pairing(f.gram, s.cls, f.zero_section.cls));
    h += FK(pairing(f.gram, t.cls, f.zero_section.cls));
    h -= FK(pairing(f.gram, s.cls, t.cls));
    for (size_t v = 0; v < f.fibers.size(); ++v)
        h -= local_contribution<R>(f.fibers[v], s.comp[v], t.comp[v]);
    return h;
}

// Same pairing through the lattice-theoretic definition: project S, T
// orthogonally away from the trivial lattice and switch sign.
template <class R>
Fraction<R> height_via_projection(const SectionClass<R>& s, const SectionClass<R>& t, const FibrationData<R>& f) {
    using K = Fraction<R>;
    const int dim = f.dim();
    // basis of triv (x) Q: zero section, fiber, non-zero components per fiber
    std::vector<DivisorClass<R>> triv;
    triv.push_back(f.zero_section.cls);
    triv.push_back(f.fiber_class);
    for (const auto& fib : f.fibers)
        for (int pos = 0; pos < fib.size(); ++pos)
            if (pos != fib.zero) triv.push_back(f.classes[fib.comps[pos]]);
    const int m = static_cast<int>(triv.size());

    Matrix<K> tg(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) tg(i, j) = K(pairing(f.gram, triv[i], triv[j]));
    auto proj_residual = [&](const DivisorClass<R>& v) {
        Matrix<K> rhs(m, 1);
        for (int i = 0; i < m; ++i) rhs(i, 0) = K(pairing(f.gram, triv[i], v));
        auto x = solve_linear(tg, rhs);
        if (!x) throw ConsistencyError("height_via_projection: degenerate trivial lattice");
        std::vector<K> res(dim);
        for (int i = 0; i < dim; ++i) res[i] = K(v[i]);
        for (int k = 0; k < m; ++k)
            for (int i = 0; i < dim; ++i) res[i] -= (*x)(k, 0) * K(triv[k][i]);
        return res;
    };
    auto ps = proj_residual(s.cls);
    auto pt = proj_residual(t.cls);
    Matrix<K> gk = f.gram.template map<K>([](const R& v) { return K(v); });
    K acc(0);
    for (int i = 0; i < dim; ++i) {
        if (ps[i] == K(0)) continue;
        for (int j = 0; j < dim; ++j) acc += ps[i] * gk(i, j) * pt[j];
    }
    return K(0) - acc;
}

// ---- section reduction -----------------------------------------------------

// Start from D with D.F >= 1, subtract (D.F - 1) O, then correct by fiber
// components until the divisor meets every singular fiber in exactly one
// simple component, and finally add multiples of F to reach the right
// self-intersection.  The result is the unique section class in the coset
// D mod triv.
template <class R>
SectionClass<R> reduce_to_section(const DivisorClass<R>& d, const FibrationData<R>& f,
                                  const std::string& label = "section") {
    using K = Fraction<R>;
    const R one(1);
    R deg = pairing(f.gram, d, f.fiber_class);
    if (deg == R(0)) throw PreconditionError("reduce_to_section: D.F must be >= 1");

    DivisorClass<R> e = cls_sub(d, cls_scale(deg - one, f.zero_section.cls));
    SectionClass<R> out;
    out.label = label;

    for (const auto& fib : f.fibers) {
        std::vector<int> nonzero;
        for (int pos = 0; pos < fib.size(); ++pos)
            if (pos != fib.zero) nonzero.push_back(pos);
        const int r = static_cast<int>(nonzero.size());
        Matrix<K> b(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                b(i, j) = K(pairing(f.gram, f.classes[fib.comps[nonzero[i]]], f.classes[fib.comps[nonzero[j]]]));
        std::vector<K> u(r);
        for (int i = 0; i < r; ++i) u[i] = K(pairing(f.gram, e, f.classes[fib.comps[nonzero[i]]]));

        int chosen = -1;
        std::vector<R> correction;
        for (int cand : [&] {
                 std::vector<int> cands{fib.zero};
                 for (int pos : fib.simple_positions())
                     if (pos != fib.zero) cands.push_back(pos);
                 return cands;
             }()) {
            Matrix<K> rhs(r, 1);
            for (int i = 0; i < r; ++i) {
                K target = (nonzero[i] == cand) ? K(1) : K(0);
                rhs(i, 0) = target - u[i];
            }
            auto x = solve_linear(b, rhs);
            if (!x) throw ConsistencyError("reduce_to_section: degenerate fiber block");
            bool integral = true;
            for (int i = 0; i < r; ++i)
                if (!is_integer_elem((*x)(i, 0))) {
                    integral = false;
                    break;
                }
            if (!integral) continue;
            if (chosen >= 0)
                throw ConsistencyError("reduce_to_section: component choice not unique at fiber " + fib.position);
            chosen = cand;
            correction.clear();
            for (int i = 0; i < r; ++i) correction.push_back(frac_to_ring((*x)(i, 0)));
        }
        if (chosen < 0)
            throw PreconditionError("reduce_to_section: class is not a section modulo triv (fiber " + fib.position +
                                    ")");
        for (int i = 0; i < r; ++i)
            e = cls_add(e, cls_scale(correction[i], f.classes[fib.comps[nonzero[i]]]));
        out.comp.push_back(chosen);
    }

    // fix self-intersection: adding m F changes E^2 by 2m
    R target(-f.chi);
    R diff = target - pairing(f.gram, e, e);
    R m = exact_div(diff, R(2));
    if (!is_integer_elem(m)) throw ConsistencyError("reduce_to_section: parity obstruction");
    e = cls_add(e, cls_scale(m, f.fiber_class));
    out.cls = e;

    // postconditions
    if (pairing(f.gram, e, f.fiber_class) != one) throw ConsistencyError("reduce_to_section: fiber degree != 1");
    if (pairing(f.gram, e, e) != target) throw ConsistencyError("reduce_to_section: wrong self-intersection");
    for (size_t v = 0; v < f.fibers.size(); ++v) {
        const auto& fib = f.fibers[v];
        for (int pos = 0; pos < fib.size(); ++pos) {
            R want = (pos == out.comp[v]) ? R(1) : R(0);
            if (pairing(f.gram, e, f.classes[fib.comps[pos]]) != want)
                throw ConsistencyError("reduce_to_section: component pairing check failed");
        }
    }
    return out;
}

// Multisections induce sections once modified by fiber components and the
// zero section.
template <class R>
SectionClass<R> induced_section(const DivisorClass<R>& m, const FibrationData<R>& f,
                                const std::string& label = "induced") {
    return reduce_to_section(m, f, label);
}

// Builds the component choices of an honest curve section from pairings.
template <class R>
SectionClass<R> section_from_pairings(std::string label, DivisorClass<R> cls, const FibrationData<R>& f) {
    SectionClass<R> s;
    s.label = std::move(label);
    for (const auto& fib : f.fibers) {
        int met = -1;
        for (int pos = 0; pos < fib.size(); ++pos) {
            R v = pairing(f.gram, cls, f.classes[fib.comps[pos]]);
            if (v == R(0)) continue;
            if (v != R(1) || met >= 0 || !fib.is_simple(pos))
                throw PreconditionError("section_from_pairings: " + s.label + " is not a section of " + f.name);
            met = pos;
        }
        if (met < 0) throw PreconditionError("section_from_pairings: " + s.label + " misses fiber " + fib.position);
        s.comp.push_back(met);
    }
    s.cls = std::move(cls);
    return s;
}

// ---- translation action on fiber components --------------------------------

// Permutation of the component layout induced by fiberwise addition of a
// section meeting position s_pos: the full realization of the component
// group on the extended Dynkin diagram (cycle rotation for I_n, diagram
// flip for III*, double leg transpositions for I0*, arm rotation for IV*).
inline std::vector<int> translation_permutation(const KodairaFiber& f, int s_pos) {
    const int sz = f.size();
    std::vector<int> sigma(sz);
    for (int i = 0; i < sz; ++i) sigma[i] = i;
    if (s_pos == f.zero) return sigma;
    if (!f.is_simple(s_pos)) throw PreconditionError("translation_permutation: section meets non-simple component");
    switch (f.kind) {
        case FiberKind::In: {
            int n = f.in_n;
            int k = ((s_pos - f.zero) % n + n) % n;
            for (int i = 0; i < n; ++i) sigma[i] = (i + k) % n;
            break;
        }
        case FiberKind::III: {
            sigma[0] = 1;
            sigma[1] = 0;
            break;
        }
        case FiberKind::IIIStar: {
            for (int i = 0; i <= 6; ++i) sigma[i] = 6 - i;  // chain flip, branch fixed
            break;
        }
        case FiberKind::I0Star: {
            // double transposition of legs: zero <-> s, remaining pair swapped
            std::vector<int> others;
            for (int leg = 1; leg <= 4; ++leg)
                if (leg != f.zero && leg != s_pos) others.push_back(leg);
            sigma[f.zero] = s_pos;
            sigma[s_pos] = f.zero;
            sigma[others[0]] = others[1];
            sigma[others[1]] = others[0];
            break;
        }
        case FiberKind::IVStar: {
            auto arm_of = [](int pos) { return (pos - 1) / 2; };
            int az = arm_of(f.zero), as = arm_of(s_pos);
            int at = 3 - az - as;
            auto map_arm = [&](int from, int to) {
                sigma[2 * from + 1] = 2 * to + 1;
                sigma[2 * from + 2] = 2 * to + 2;
            };
            map_arm(az, as);  // zero arm -> section arm -> third arm -> zero arm
            map_arm(as, at);
            map_arm(at, az);
            break;
        }
    }
    return sigma;
}

// ---- translation isometry ---------------------------------------------------

template <class R>
struct TranslationIsometry {
    Matrix<R> pushforward;  // f_* (sections T -> T (+) S, columns act left)
    Matrix<R> pullback;     // f^* = (f_*)^{-1}
};

// The matrix of fiberwise addition by S on NS, determined by its action on
// fiber components (diagram permutation) and on the known sections
// (T -> reduce(T + S - O)); the candidate matrix is solved for exactly and
// verified to be an integral isometry fixing the fiber before it is
// returned.
template <class R>
TranslationIsometry<R> translation_isometry(const SectionClass<R>& s, const FibrationData<R>& f) {
    using K = Fraction<R>;
    const int dim = f.dim();

    std::vector<DivisorClass<R>> src, dst;
    for (size_t v = 0; v < f.fibers.size(); ++v) {
        const auto& fib = f.fibers[v];
        auto sigma = translation_permutation(fib, s.comp[v]);
        for (int pos = 0; pos < fib.size(); ++pos) {
            src.push_back(f.classes[fib.comps[pos]]);
            dst.push_back(f.classes[fib.comps[sigma[pos]]]);
        }
    }
    for (const auto& t : f.sections) {
        DivisorClass<R> sum = cls_sub(cls_add(t.cls, s.cls), f.zero_section.cls);
        src.push_back(t.cls);
        dst.push_back(reduce_to_section(sum, f, t.label + "+" + s.label).cls);
    }
    src.push_back(f.fiber_class);
    dst.push_back(f.fiber_class);

    const int ncols = static_cast<int>(src.size());
    Matrix<K> vk(dim, ncols), wk(dim, ncols);
    for (int j = 0; j < ncols; ++j)
        for (int i = 0; i < dim; ++i) {
            vk(i, j) = K(src[j][i]);
            wk(i, j) = K(dst[j][i]);
        }

    // select dim independent anchor columns
    std::vector<int> pivots;
    {
        Matrix<K> ech = vk;
        int row = 0;
        for (int col = 0; col < ncols && row < dim; ++col) {
            int piv = -1;
            for (int i = row; i < dim; ++i)
                if (ech(i, col) != K(0)) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            for (int j = 0; j < ncols; ++j) std::swap(ech(row, j), ech(piv, j));
            K inv = K(1) / ech(row, col);
            for (int j = 0; j < ncols; ++j) ech(row, j) = inv * ech(row, j);
            for (int i = 0; i < dim; ++i) {
                if (i == row || ech(i, col) == K(0)) continue;
                K fct = ech(i, col);
                for (int j = 0; j < ncols; ++j) ech(i, j) = ech(i, j) - fct * ech(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        if (static_cast<int>(pivots.size()) < dim)
            throw ConsistencyError("translation_isometry: anchor classes do not span NS");
    }

    Matrix<K> vs(dim, dim), ws(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) {
            vs(i, j) = vk(i, pivots[j]);
            ws(i, j) = wk(i, pivots[j]);
        }
    Matrix<K> mk = ws * inverse_field(vs);

    Matrix<R> push(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (!is_integer_elem(mk(i, j))) throw ConsistencyError("translation_isometry: non-integral matrix");
            push(i, j) = frac_to_ring(mk(i, j));
        }

    // every anchor must be consistent, not only the selected ones
    for (int j = 0; j < ncols; ++j)
        if (push.mul_vec(src[j]) != dst[j])
            throw ConsistencyError("translation_isometry: anchor images are inconsistent");
    if (push.transposed() * f.gram * push != f.gram)
        throw ConsistencyError("translation_isometry: matrix is not an isometry of the gram form");
    R det = det_exact(push);
    if (!(det == R(1) || det == R(-1))) throw ConsistencyError("translation_isometry: determinant is not a unit");

    Matrix<K> ik = inverse_field(mk);
    Matrix<R> pull(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            if (!is_integer_elem(ik(i, j))) throw ConsistencyError("translation_isometry: non-integral inverse");
            pull(i, j) = frac_to_ring(ik(i, j));
        }
    return {std::move(push), std::move(pull)};
}

// ---- the isotrivial fibration pi on X(p) ------------------------------------

// Fiber/section layout of pi: two III* fibers supported on the e4- and
// e11-chains (closed up by c_inf, c_0) and one I0* fiber with center e18.
template <class R>
FibrationData<R> fibration_pi(const NsModel<R>& model, const CurveTable<R>& table) {
    FibrationData<R> f;
    f.name = "pi";
    f.chi = 2;
    f.gram = model.gram;
    f.fiber_class = cls_unit<R>(model.rank(), ns::F);

    auto add = [&](const std::string& label) { return f.add_class(label, table.by_label(label).cls); };

    KodairaFiber f0;
    f0.kind = FiberKind::IIIStar;
    f0.position = "t=inf";
    for (const auto& lbl : {"e4", "e5", "e6", "e7", "e9", "e10", "c_inf"}) f0.comps.push_back(add(lbl));
    f0.comps.push_back(add("e8"));
    f0.marks = {1, 2, 3, 4, 3, 2, 1, 2};
    f0.zero = 6;  // c_inf is met by O
    f.fibers.push_back(f0);

    KodairaFiber f1;
    f1.kind = FiberKind::IIIStar;
    f1.position = "t=0";
    for (const auto& lbl : {"e11", "e12", "e13", "e14", "e16", "e17", "c_0"}) f1.comps.push_back(add(lbl));
    f1.comps.push_back(add("e15"));
    f1.marks = {1, 2, 3, 4, 3, 2, 1, 2};
    f1.zero = 6;  // c_0
    f.fibers.push_back(f1);

    KodairaFiber f2;
    f2.kind = FiberKind::I0Star;
    f2.position = "t=1";
    for (const auto& lbl : {"e18", "d3", "e19", "e20", "d4"}) f2.comps.push_back(add(lbl));
    f2.marks = {2, 1, 1, 1, 1};
    f2.zero = 1;  // d3 is met by O
    f.fibers.push_back(f2);

    for (const auto& lbl : {"O", "Q", "P", "R"})
        f.sections.push_back(section_from_pairings<R>(lbl, table.by_label(lbl).cls, f));
    f.zero_section = f.section("O");
    f.residual_euler = 12 * f.chi - (9 + 9 + 6);
    return f;
}

// ---- the rational elliptic surface Y ----------------------------------------

// Y: y^2 = x^3 + t(t-1)^2 x, chi = 1.  NS(Y) has rank 10 and determinant -1;
// basis (O, F, Q, th01, thInf1, c, lQ, lP, P', R') mirroring the X basis,
// with the III fibers at t = 0, inf and the I0* fiber at t = 1.
inline FibrationData<BigInt> fibration_y() {
    const int O = 0, F = 1, Q = 2, TH01 = 3, THI1 = 4, C = 5, LQ = 6, LP = 7, PP = 8, RP = 9;
    Matrix<BigInt> g(10, 10);
    for (int i = 0; i < 10; ++i) g(i, i) = BigInt(-2);
    g(O, O) = BigInt(-1);
    g(F, F) = BigInt(0);
    g(Q, Q) = BigInt(-1);
    g(PP, PP) = BigInt(-1);
    g(RP, RP) = BigInt(-1);
    auto set = [&](int i, int j) {
        g(i, j) = BigInt(1);
        g(j, i) = BigInt(1);
    };
    set(O, F);
    set(F, Q);
    set(F, PP);
    set(F, RP);
    set(Q, TH01);
    set(Q, THI1);
    set(Q, LQ);
    set(TH01, PP);
    set(TH01, RP);
    set(C, LQ);
    set(C, LP);
    set(LP, PP);

    FibrationData<BigInt> f;
    f.name = "Y";
    f.chi = 1;
    f.gram = g;
    f.fiber_class = cls_unit<BigInt>(10, F);

    auto unit = [&](int idx) { return cls_unit<BigInt>(10, idx); };
    DivisorClass<BigInt> th00 = cls_sub(f.fiber_class, unit(TH01));
    DivisorClass<BigInt> thi0 = cls_sub(f.fiber_class, unit(THI1));
    // lO + lR = F - 2c - lQ - lP; lO meets O, lR meets R'
    using K = Fraction<BigInt>;
    Matrix<K> gk = g.map<K>([](const BigInt& v) { return K(v); });
    Matrix<K> rhs(10, 1);
    rhs(O, 0) = K(1);
    rhs(C, 0) = K(1);
    auto sol = solve_linear(gk, rhs);
    if (!sol) throw ConsistencyError("fibration_y: degenerate gram");
    DivisorClass<BigInt> lO;
    for (int i = 0; i < 10; ++i) {
        if (!is_integer_elem((*sol)(i, 0))) throw ConsistencyError("fibration_y: lO is not integral");
        lO.push_back(frac_to_ring((*sol)(i, 0)));
    }
    DivisorClass<BigInt> lR = cls_sub(f.fiber_class, cls_scale(BigInt(2), unit(C)));
    lR = cls_sub(cls_sub(cls_sub(lR, unit(LQ)), unit(LP)), lO);

    KodairaFiber f0;
    f0.kind = FiberKind::III;
    f0.position = "t=0";
    f0.comps = {f.add_class("th00", th00), f.add_class("th01", unit(TH01))};
    f0.marks = {1, 1};
    f0.zero = 0;
    f.fibers.push_back(f0);

    KodairaFiber f1;
    f1.kind = FiberKind::I0Star;
    f1.position = "t=1";
    f1.comps = {f.add_class("c", unit(C)), f.add_class("lO", lO), f.add_class("lQ", unit(LQ)),
                f.add_class("lP", unit(LP)), f.add_class("lR", lR)};
    f1.marks = {2, 1, 1, 1, 1};
    f1.zero = 1;
    f.fibers.push_back(f1);

    KodairaFiber f2;
    f2.kind = FiberKind::III;
    f2.position = "t=inf";
    f2.comps = {f.add_class("thInf0", thi0), f.add_class("thInf1", unit(THI1))};
    f2.marks = {1, 1};
    f2.zero = 0;
    f.fibers.push_back(f2);

    f.sections.push_back(section_from_pairings<BigInt>("O", unit(O), f));
    f.sections.push_back(section_from_pairings<BigInt>("Q", unit(Q), f));
    f.sections.push_back(section_from_pairings<BigInt>("P'", unit(PP), f));
    f.sections.push_back(section_from_pairings<BigInt>("R'", unit(RP), f));
    f.zero_section = f.section("O");
    f.residual_euler = 12 * f.chi - (3 + 6 + 3);
    return f;
}

}  // namespace salemk3
