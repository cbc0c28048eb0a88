#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "salemk3/fibration.hpp"

namespace salemk3 {

// Intersection graph of the known (-2)-curves.  Edge weights are exact
// pairings; in symbolic mode only curves with n-independent pairings are
// kept (the fiber components plus O and Q), which covers every
// configuration the pipeline uses.
template <class R>
struct CurveGraph {
    std::vector<std::string> labels;
    std::vector<DivisorClass<R>> classes;
    std::vector<int> sort_keys;
    std::vector<std::vector<long>> weight;

    int size() const { return static_cast<int>(labels.size()); }
    bool adjacent(int i, int j) const { return i != j && weight[i][j] >= 1; }
    int index_of(const std::string& label) const {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return static_cast<int>(i);
        throw Error("CurveGraph: unknown curve '" + label + "'");
    }
};

template <class R>
CurveGraph<R> build_curve_graph(const NsModel<R>& model, const CurveTable<R>& table) {
    const int n = static_cast<int>(table.records.size());
    std::vector<std::vector<std::optional<long>>> w(n, std::vector<std::optional<long>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            auto v = to_int_checked(pairing(model.gram, table.records[i].cls, table.records[j].cls));
            w[i][j] = v;
            w[j][i] = v;
        }
    std::vector<int> keep;
    for (int i = 0; i < n; ++i) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) ok = w[i][j].has_value();
        if (ok) keep.push_back(i);
    }
    CurveGraph<R> g;
    for (int i : keep) {
        g.labels.push_back(table.records[i].label);
        g.classes.push_back(table.records[i].cls);
        g.sort_keys.push_back(table.records[i].sort_key);
    }
    g.weight.assign(keep.size(), std::vector<long>(keep.size(), 0));
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = 0; b < keep.size(); ++b) g.weight[a][b] = *w[keep[a]][keep[b]];
    return g;
}

enum class AffineType { A, D, E6, E7, E8 };

// Extended ADE configuration: vertices in the layout order of the fiber it
// induces (cycle order for A~, center-first for D~4, center/arm pairs for
// E~6, chain-plus-branch for E~7/E~8), with the affine marks.
struct AdeConfig {
    AffineType type;
    int index;  // subscript: A~index, D~index, E~index
    std::vector<int> layout;
    std::vector<int> marks;
    std::vector<int> sorted_vertices;

    std::string type_name() const {
        switch (type) {
            case AffineType::A: return "A~" + std::to_string(index);
            case AffineType::D: return "D~" + std::to_string(index);
            case AffineType::E6: return "E~6";
            case AffineType::E7: return "E~7";
            case AffineType::E8: return "E~8";
        }
        return "?";
    }
};

template <class R>
DivisorClass<R> config_fiber_class(const AdeConfig& cfg, const CurveGraph<R>& g) {
    DivisorClass<R> f(g.classes[cfg.layout[0]].size(), R(0));
    for (size_t i = 0; i < cfg.layout.size(); ++i)
        f = cls_add(f, cls_scale(R(cfg.marks[i]), g.classes[cfg.layout[i]]));
    return f;
}

namespace detail {

// Primitive positive kernel vector of the induced Gram; an affine ADE
// diagram has corank exactly 1 and those marks are its multiplicities.
inline std::optional<std::vector<int>> affine_marks(const std::vector<std::vector<long>>& w,
                                                    const std::vector<int>& verts) {
    const int k = static_cast<int>(verts.size());
    Matrix<Rat> m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = Rat(BigInt(i == j ? -2 : w[verts[i]][verts[j]]));
    // Gaussian elimination to echelon form, tracking free columns
    int row = 0;
    std::vector<int> pivot_col(k, -1);
    for (int col = 0; col < k && row < k; ++col) {
        int piv = -1;
        for (int i = row; i < k; ++i)
            if (m(i, col) != Rat(0)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < k; ++j) std::swap(m(row, j), m(piv, j));
        Rat inv = Rat(1) / m(row, col);
        for (int j = 0; j < k; ++j) m(row, j) = inv * m(row, j);
        for (int i = 0; i < k; ++i) {
            if (i == row || m(i, col) == Rat(0)) continue;
            Rat f = m(i, col);
            for (int j = 0; j < k; ++j) m(i, j) -= f * m(row, j);
        }
        pivot_col[row] = col;
        ++row;
    }
    if (row != k - 1) return std::nullopt;  // corank != 1
    int free_col = -1;
    {
        std::vector<bool> is_pivot(k, false);
        for (int i = 0; i < row; ++i) is_pivot[pivot_col[i]] = true;
        for (int c = 0; c < k; ++c)
            if (!is_pivot[c]) free_col = c;
    }
    std::vector<Rat> kernel(k, Rat(0));
    kernel[free_col] = Rat(1);
    for (int i = row - 1; i >= 0; --i) kernel[pivot_col[i]] = -m(i, free_col);
    BigInt den(1);
    for (const auto& c : kernel) den = exact_div(den * c.den(), gcd_value(den, c.den()));
    std::vector<BigInt> ints;
    for (const auto& c : kernel) ints.push_back((Rat(den) * c).num());
    BigInt g(0);
    for (const auto& v : ints) g = gcd_value(g, v);
    std::vector<int> marks;
    int sign = 0;
    for (const auto& v : ints) {
        BigInt red = exact_div(v, g);
        if (red.is_zero() || !red.fits_long()) return std::nullopt;
        int s = red.sign();
        if (sign == 0) sign = s;
        if (s != sign) return std::nullopt;  // marks must be uniformly positive
        marks.push_back(static_cast<int>(std::abs(red.to_long())));
    }
    return marks;
}

template <class R>
void emit_config(std::vector<AdeConfig>& out, std::set<std::pair<std::string, std::vector<int>>>& seen,
                 const CurveGraph<R>& g, AffineType type, int index, std::vector<int> layout) {
    auto marks = affine_marks(g.weight, layout);
    if (!marks) return;
    AdeConfig cfg;
    cfg.type = type;
    cfg.index = index;
    cfg.layout = std::move(layout);
    cfg.marks = *marks;
    cfg.sorted_vertices = cfg.layout;
    std::sort(cfg.sorted_vertices.begin(), cfg.sorted_vertices.end());
    if (!seen.insert({cfg.type_name(), cfg.sorted_vertices}).second) return;
    out.push_back(std::move(cfg));
}

template <class R>
void find_cycles(const CurveGraph<R>& g, std::vector<AdeConfig>& out,
                 std::set<std::pair<std::string, std::vector<int>>>& seen) {
    const int n = g.size();
    // double edges are I2 fibers
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.weight[i][j] == 2) emit_config(out, seen, g, AffineType::A, 1, {i, j});

    // chordless cycles of weight-1 edges, smallest vertex first
    std::vector<int> path;
    auto extend = [&](auto&& self, int start) -> void {
        int last = path.back();
        for (int w = start + 1; w < n; ++w) {
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            if (g.weight[last][w] != 1) continue;
            bool chord = false;
            for (size_t t = 1; t + 1 < path.size(); ++t)
                if (g.weight[path[t]][w] >= 1) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (path.size() == 1) {  // first step: the edge back to start is the cycle edge
                path.push_back(w);
                self(self, start);
                path.pop_back();
                continue;
            }
            bool closes = g.weight[start][w] >= 1;
            if (closes) {
                if (g.weight[start][w] == 1 && path[1] < w) {  // canonical direction
                    std::vector<int> cyc = path;
                    cyc.push_back(w);
                    emit_config(out, seen, g, AffineType::A, static_cast<int>(cyc.size()) - 1, std::move(cyc));
                }
                continue;  // extending past w would leave a chord to start
            }
            path.push_back(w);
            self(self, start);
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        extend(extend, s);
    }
}

template <class R>
void find_d4(const CurveGraph<R>& g, std::vector<AdeConfig>& out,
             std::set<std::pair<std::string, std::vector<int>>>& seen) {
    const int n = g.size();
    for (int c = 0; c < n; ++c) {
        std::vector<int> nb;
        for (int v = 0; v < n; ++v)
            if (g.weight[c][v] == 1) nb.push_back(v);
        const int k = static_cast<int>(nb.size());
        if (k < 4) continue;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                for (int cc = b + 1; cc < k; ++cc)
                    for (int d = cc + 1; d < k; ++d) {
                        int legs[4] = {nb[a], nb[b], nb[cc], nb[d]};
                        bool ok = true;
                        for (int x = 0; x < 4 && ok; ++x)
                            for (int y = x + 1; y < 4 && ok; ++y) ok = g.weight[legs[x]][legs[y]] == 0;
                        if (ok)
                            emit_config(out, seen, g, AffineType::D, 4,
                                        {c, legs[0], legs[1], legs[2], legs[3]});
                    }
    }
}

// induced paths of given length, used by the D~n / E~ searches
template <class R>
std::vector<std::vector<int>> induced_paths(const CurveGraph<R>& g, int len) {
    const int n = g.size();
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(path.size()) == len) {
            if (path.front() < path.back()) out.push_back(path);
            return;
        }
        int last = path.back();
        for (int w = 0; w < n; ++w) {
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            if (g.weight[last][w] != 1) continue;
            bool chord = false;
            for (size_t t = 0; t + 1 < path.size(); ++t)
                if (g.weight[path[t]][w] >= 1) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            path.push_back(w);
            self(self);
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        extend(extend);
    }
    return out;
}

template <class R>
bool isolated_from(const CurveGraph<R>& g, int v, const std::vector<int>& set, std::initializer_list<int> except) {
    for (int u : set) {
        bool skip = false;
        for (int e : except) skip = skip || (u == e);
        if (skip) continue;
        if (g.weight[v][u] != 0) return false;
    }
    return true;
}

template <class R>
void find_dn(const CurveGraph<R>& g, std::vector<AdeConfig>& out,
             std::set<std::pair<std::string, std::vector<int>>>& seen) {
    const int n = g.size();
    // D~m, m >= 5: spine of m-3 >= 2 nodes with two legs at each end
    for (int spine_len = 2; spine_len + 4 <= n; ++spine_len) {
        for (auto& spine : induced_paths(g, spine_len)) {
            int head = spine.front(), tail = spine.back();
            std::vector<int> head_legs, tail_legs;
            for (int v = 0; v < n; ++v) {
                if (std::find(spine.begin(), spine.end(), v) != spine.end()) continue;
                if (g.weight[head][v] == 1 && isolated_from(g, v, spine, {head})) head_legs.push_back(v);
                if (g.weight[tail][v] == 1 && isolated_from(g, v, spine, {tail})) tail_legs.push_back(v);
            }
            for (size_t a = 0; a < head_legs.size(); ++a)
                for (size_t b = a + 1; b < head_legs.size(); ++b)
                    for (size_t c = 0; c < tail_legs.size(); ++c)
                        for (size_t d = c + 1; d < tail_legs.size(); ++d) {
                            int la = head_legs[a], lb = head_legs[b], lc = tail_legs[c], ld = tail_legs[d];
                            std::set<int> uniq{la, lb, lc, ld};
                            if (uniq.size() != 4) continue;
                            bool ok = true;
                            for (int x : {la, lb})
                                for (int y : {lc, ld}) ok = ok && g.weight[x][y] == 0;
                            ok = ok && g.weight[la][lb] == 0 && g.weight[lc][ld] == 0;
                            if (!ok) continue;
                            std::vector<int> layout = {la, lb};
                            layout.insert(layout.end(), spine.begin(), spine.end());
                            layout.push_back(lc);
                            layout.push_back(ld);
                            emit_config(out, seen, g, AffineType::D, spine_len + 3, std::move(layout));
                        }
        }
    }
}

template <class R>
void find_e6(const CurveGraph<R>& g, std::vector<AdeConfig>& out,
             std::set<std::pair<std::string, std::vector<int>>>& seen) {
    const int n = g.size();
    for (int c = 0; c < n; ++c) {
        std::vector<int> nb;
        for (int v = 0; v < n; ++v)
            if (g.weight[c][v] == 1) nb.push_back(v);
        if (nb.size() < 3) continue;
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j)
                for (size_t k = j + 1; k < nb.size(); ++k) {
                    int mids[3] = {nb[i], nb[j], nb[k]};
                    if (g.weight[mids[0]][mids[1]] || g.weight[mids[0]][mids[2]] || g.weight[mids[1]][mids[2]])
                        continue;
                    // choose an end for each arm
                    std::vector<std::vector<int>> ends(3);
                    for (int a = 0; a < 3; ++a)
                        for (int v = 0; v < n; ++v) {
                            if (v == c || v == mids[0] || v == mids[1] || v == mids[2]) continue;
                            if (g.weight[mids[a]][v] != 1 || g.weight[c][v] != 0) continue;
                            if (g.weight[mids[(a + 1) % 3]][v] != 0 || g.weight[mids[(a + 2) % 3]][v] != 0) continue;
                            ends[a].push_back(v);
                        }
                    for (int ea : ends[0])
                        for (int eb : ends[1])
                            for (int ec : ends[2]) {
                                std::set<int> uniq{ea, eb, ec};
                                if (uniq.size() != 3) continue;
                                if (g.weight[ea][eb] || g.weight[ea][ec] || g.weight[eb][ec]) continue;
                                emit_config(out, seen, g, AffineType::E6, 6,
                                            {c, mids[0], ea, mids[1], eb, mids[2], ec});
                            }
                }
    }
}

template <class R>
void find_e7_e8(const CurveGraph<R>& g, std::vector<AdeConfig>& out,
                std::set<std::pair<std::string, std::vector<int>>>& seen) {
    const int n = g.size();
    // E~7: induced 7-chain with a branch attached to the middle node only
    for (auto& chain : induced_paths(g, 7))
        for (int b = 0; b < n; ++b) {
            if (std::find(chain.begin(), chain.end(), b) != chain.end()) continue;
            if (g.weight[chain[3]][b] != 1) continue;
            if (!isolated_from(g, b, chain, {chain[3]})) continue;
            std::vector<int> layout = chain;
            layout.push_back(b);
            emit_config(out, seen, g, AffineType::E7, 7, std::move(layout));
        }
    // E~8: induced 8-chain with a branch at the third node
    for (auto& chain0 : induced_paths(g, 8)) {
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<int> chain = chain0;
            if (dir) std::reverse(chain.begin(), chain.end());
            for (int b = 0; b < n; ++b) {
                if (std::find(chain.begin(), chain.end(), b) != chain.end()) continue;
                if (g.weight[chain[2]][b] != 1) continue;
                if (!isolated_from(g, b, chain, {chain[2]})) continue;
                std::vector<int> layout = chain;
                layout.push_back(b);
                emit_config(out, seen, g, AffineType::E8, 8, std::move(layout));
            }
        }
    }
}

}  // namespace detail

// All vertex subsets of the curve graph whose induced weighted subgraph is
// an extended Dynkin diagram, with their affine marks.
template <class R>
std::vector<AdeConfig> find_ade_configurations(const CurveGraph<R>& g) {
    std::vector<AdeConfig> out;
    std::set<std::pair<std::string, std::vector<int>>> seen;
    detail::find_cycles(g, out, seen);
    detail::find_d4(g, out, seen);
    detail::find_dn(g, out, seen);
    detail::find_e6(g, out, seen);
    detail::find_e7_e8(g, out, seen);
    std::sort(out.begin(), out.end(), [&](const AdeConfig& a, const AdeConfig& b) {
        if (a.layout.size() != b.layout.size()) return a.layout.size() < b.layout.size();
        std::string an = a.type_name(), bn = b.type_name();
        if (an != bn) return an < bn;
        return a.sorted_vertices < b.sorted_vertices;
    });
    return out;
}

// ---- turning a configuration into a fibration ------------------------------

namespace detail {

struct ClusterShape {
    // arms from the (unique) branch node, or the path itself for A_k
    int center = -1;
    std::vector<std::vector<int>> arms;  // each arm from center outwards
    bool is_path = false;
    std::vector<int> path;
};

template <class R>
std::optional<ClusterShape> recognize_root_cluster(const CurveGraph<R>& g, const std::vector<int>& verts) {
    ClusterShape shape;
    std::map<int, std::vector<int>> adj;
    for (int v : verts)
        for (int u : verts)
            if (v != u && g.weight[v][u] == 1) adj[v].push_back(u);
    for (int v : verts)
        if (g.weight[v][v] != 0) return std::nullopt;
    int branch = -1, branch_count = 0;
    for (int v : verts) {
        size_t d = adj[v].size();
        if (d > 3) return std::nullopt;
        if (d == 3) {
            branch = v;
            ++branch_count;
        }
    }
    if (branch_count > 1) return std::nullopt;
    if (branch_count == 0) {
        // must be a path: exactly two vertices of degree <= 1
        std::vector<int> ends;
        for (int v : verts)
            if (adj[v].size() <= 1) ends.push_back(v);
        if (verts.size() == 1) {
            shape.is_path = true;
            shape.path = verts;
            return shape;
        }
        if (ends.size() != 2) return std::nullopt;  // cycle: not a root diagram
        shape.is_path = true;
        int prev = -1, cur = std::min(ends[0], ends[1]);
        shape.path.push_back(cur);
        while (shape.path.size() < verts.size()) {
            int nxt = -1;
            for (int u : adj[cur])
                if (u != prev) nxt = u;
            if (nxt < 0) return std::nullopt;
            shape.path.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        return shape;
    }
    shape.center = branch;
    for (int first : adj[branch]) {
        std::vector<int> arm{first};
        int prev = branch, cur = first;
        while (true) {
            int nxt = -1;
            for (int u : adj[cur])
                if (u != prev) {
                    if (nxt >= 0) return std::nullopt;
                    nxt = u;
                }
            if (nxt < 0) break;
            arm.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        shape.arms.push_back(arm);
    }
    std::sort(shape.arms.begin(), shape.arms.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.size() < b.size(); });
    size_t total = 1;
    for (auto& a : shape.arms) total += a.size();
    if (total != verts.size()) return std::nullopt;  // disconnected or cyclic
    return shape;
}

}  // namespace detail

// Completes a visible fibral cluster to a full Kodaira fiber of the pencil
// |F'|: the missing component class is forced by F' = sum of marked
// components.  Supports one missing component (A_k -> I_{k+1},
// D4 -> I0*, E6 -> IV*, E7 -> III*) or none (cluster already affine).
template <class R>
KodairaFiber complete_cluster_fiber(const std::vector<int>& cluster, const DivisorClass<R>& fiber_class,
                                    const CurveGraph<R>& g, FibrationData<R>& f) {
    auto marks = detail::affine_marks(g.weight, cluster);
    if (marks) throw UnsupportedError("complete_cluster_fiber: affine cluster completion not implemented");

    auto shape = detail::recognize_root_cluster(g, cluster);
    if (!shape) throw UnsupportedError("complete_cluster_fiber: unrecognized fibral cluster");

    auto add_vertex = [&](int v) { return f.add_class(g.labels[v], g.classes[v]); };
    auto derived = [&](const DivisorClass<R>& sum, const std::string& label) {
        DivisorClass<R> missing = cls_sub(fiber_class, sum);
        if (pairing(f.gram, missing, missing) != R(-2))
            throw ConsistencyError("complete_cluster_fiber: derived component is not a (-2)-class");
        return f.add_class(label, missing);
    };
    std::string miss_label = "aux" + std::to_string(f.classes.size());

    KodairaFiber fib;
    if (shape->is_path) {
        // A_k path closes to the I_{k+1} cycle
        DivisorClass<R> sum(fiber_class.size(), R(0));
        for (int v : shape->path) sum = cls_add(sum, g.classes[v]);
        fib.kind = FiberKind::In;
        fib.in_n = static_cast<int>(shape->path.size()) + 1;
        for (int v : shape->path) fib.comps.push_back(add_vertex(v));
        fib.comps.push_back(derived(sum, miss_label));
        fib.marks.assign(fib.in_n, 1);
        // the derived component must close the cycle
        const auto& m = f.classes[fib.comps.back()];
        R end_pairing(static_cast<int>(shape->path.size() == 1 ? 2 : 1));
        if (pairing(f.gram, m, g.classes[shape->path.front()]) != end_pairing ||
            pairing(f.gram, m, g.classes[shape->path.back()]) != end_pairing)
            throw ConsistencyError("complete_cluster_fiber: I_n closure failed");
        return fib;
    }

    std::vector<size_t> arm_sizes;
    for (auto& a : shape->arms) arm_sizes.push_back(a.size());
    if (arm_sizes == std::vector<size_t>{1, 1, 1}) {
        // D4 -> I0*: missing fourth leg
        DivisorClass<R> sum = cls_scale(R(2), g.classes[shape->center]);
        for (auto& a : shape->arms) sum = cls_add(sum, g.classes[a[0]]);
        fib.kind = FiberKind::I0Star;
        fib.comps.push_back(add_vertex(shape->center));
        for (auto& a : shape->arms) fib.comps.push_back(add_vertex(a[0]));
        fib.comps.push_back(derived(sum, miss_label));
        fib.marks = {2, 1, 1, 1, 1};
        return fib;
    }
    if (arm_sizes == std::vector<size_t>{1, 2, 2}) {
        // E6 -> IV*: missing end of the short arm
        DivisorClass<R> sum = cls_scale(R(3), g.classes[shape->center]);
        sum = cls_add(sum, cls_scale(R(2), g.classes[shape->arms[0][0]]));
        for (int a : {1, 2}) {
            sum = cls_add(sum, cls_scale(R(2), g.classes[shape->arms[a][0]]));
            sum = cls_add(sum, g.classes[shape->arms[a][1]]);
        }
        fib.kind = FiberKind::IVStar;
        fib.comps.push_back(add_vertex(shape->center));
        fib.comps.push_back(add_vertex(shape->arms[1][0]));
        fib.comps.push_back(add_vertex(shape->arms[1][1]));
        fib.comps.push_back(add_vertex(shape->arms[2][0]));
        fib.comps.push_back(add_vertex(shape->arms[2][1]));
        fib.comps.push_back(add_vertex(shape->arms[0][0]));
        fib.comps.push_back(derived(sum, miss_label));
        fib.marks = {3, 2, 1, 2, 1, 2, 1};
        if (pairing(f.gram, f.classes[fib.comps.back()], g.classes[shape->arms[0][0]]) != R(1))
            throw ConsistencyError("complete_cluster_fiber: IV* arm closure failed");
        return fib;
    }
    if (arm_sizes == std::vector<size_t>{1, 2, 3}) {
        // E7 -> III*: missing end of the middle arm
        DivisorClass<R> sum = cls_scale(R(4), g.classes[shape->center]);
        sum = cls_add(sum, cls_scale(R(2), g.classes[shape->arms[0][0]]));
        sum = cls_add(sum, cls_scale(R(3), g.classes[shape->arms[1][0]]));
        sum = cls_add(sum, cls_scale(R(2), g.classes[shape->arms[1][1]]));
        sum = cls_add(sum, cls_scale(R(3), g.classes[shape->arms[2][0]]));
        sum = cls_add(sum, cls_scale(R(2), g.classes[shape->arms[2][1]]));
        sum = cls_add(sum, g.classes[shape->arms[2][2]]);
        fib.kind = FiberKind::IIIStar;
        fib.comps.push_back(derived(sum, miss_label));
        fib.comps.push_back(add_vertex(shape->arms[1][1]));
        fib.comps.push_back(add_vertex(shape->arms[1][0]));
        fib.comps.push_back(add_vertex(shape->center));
        fib.comps.push_back(add_vertex(shape->arms[2][0]));
        fib.comps.push_back(add_vertex(shape->arms[2][1]));
        fib.comps.push_back(add_vertex(shape->arms[2][2]));
        fib.comps.push_back(add_vertex(shape->arms[0][0]));
        fib.marks = {1, 2, 3, 4, 3, 2, 1, 2};
        if (pairing(f.gram, f.classes[fib.comps[0]], g.classes[shape->arms[1][1]]) != R(1))
            throw ConsistencyError("complete_cluster_fiber: III* chain closure failed");
        return fib;
    }
    throw UnsupportedError("complete_cluster_fiber: cluster shape outside the supported fiber types");
}

// Builds the elliptic fibration whose fiber class is the configuration's
// weighted sum.  Known curves split into fiber components, sections and
// multisections according to C.F'; invisible components of further
// reducible fibers are derived from the fiber-class relation.
template <class R>
FibrationData<R> induce_fibration(const AdeConfig& cfg, const CurveGraph<R>& g, const NsModel<R>& model,
                                  const std::string& name) {
    FibrationData<R> f;
    f.name = name;
    f.chi = 2;
    f.gram = model.gram;
    f.fiber_class = config_fiber_class(cfg, g);
    if (pairing(f.gram, f.fiber_class, f.fiber_class) != R(0))
        throw ConsistencyError("induce_fibration: fiber class is not isotropic");

    KodairaFiber primary;
    switch (cfg.type) {
        case AffineType::A:
            primary.kind = FiberKind::In;
            primary.in_n = cfg.index + 1;
            break;
        case AffineType::D:
            if (cfg.index != 4) throw UnsupportedError("induce_fibration: D~n fibers with n > 4 are unsupported");
            primary.kind = FiberKind::I0Star;
            break;
        case AffineType::E6: primary.kind = FiberKind::IVStar; break;
        case AffineType::E7: primary.kind = FiberKind::IIIStar; break;
        case AffineType::E8: throw UnsupportedError("induce_fibration: II* fibers are unsupported");
    }
    primary.marks = cfg.marks;
    for (int v : cfg.layout) primary.comps.push_back(f.add_class(g.labels[v], g.classes[v]));
    f.fibers.push_back(primary);

    // classify the remaining known curves by their fiber degree
    std::vector<int> fibral, section_curves;
    for (int v = 0; v < g.size(); ++v) {
        if (std::find(cfg.layout.begin(), cfg.layout.end(), v) != cfg.layout.end()) continue;
        R deg = pairing(f.gram, g.classes[v], f.fiber_class);
        if (deg == R(0))
            fibral.push_back(v);
        else if (deg == R(1))
            section_curves.push_back(v);
        // degree >= 2: multisection; they induce sections via reduction
    }

    // cluster the extra fibral curves into connected components
    std::vector<bool> used(fibral.size(), false);
    for (size_t i = 0; i < fibral.size(); ++i) {
        if (used[i]) continue;
        std::vector<int> cluster{fibral[i]};
        used[i] = true;
        for (size_t head = 0; head < cluster.size(); ++head)
            for (size_t j = 0; j < fibral.size(); ++j) {
                if (used[j]) continue;
                if (g.weight[cluster[head]][fibral[j]] >= 1) {
                    cluster.push_back(fibral[j]);
                    used[j] = true;
                }
            }
        std::sort(cluster.begin(), cluster.end());
        f.fibers.push_back(complete_cluster_fiber(cluster, f.fiber_class, g, f));
    }

    int euler = 0;
    for (const auto& fib : f.fibers) euler += fib.euler();
    f.residual_euler = 12 * f.chi - euler;
    if (f.residual_euler < 0) throw ConsistencyError("induce_fibration: Euler numbers exceed 12*chi");

    if (section_curves.empty()) throw PreconditionError("induce_fibration: pencil without known section");
    std::sort(section_curves.begin(), section_curves.end(),
              [&](int a, int b) { return g.sort_keys[a] < g.sort_keys[b]; });

    // zero components first, then the section records
    {
        DivisorClass<R> zero_cls = g.classes[section_curves.front()];
        for (auto& fib : f.fibers) {
            int met = -1;
            for (int pos = 0; pos < fib.size(); ++pos)
                if (pairing(f.gram, zero_cls, f.classes[fib.comps[pos]]) == R(1)) {
                    if (met >= 0) throw ConsistencyError("induce_fibration: zero section meets two components");
                    met = pos;
                }
            if (met < 0 || !fib.is_simple(met))
                throw ConsistencyError("induce_fibration: zero section misses a simple component");
            fib.zero = met;
        }
    }
    for (int v : section_curves) f.sections.push_back(section_from_pairings<R>(g.labels[v], g.classes[v], f));
    f.zero_section = f.sections.front();
    return f;
}

}  // namespace salemk3
