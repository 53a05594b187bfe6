#ifndef BOXKIT_SPLIT_WITNESS_HPP
#define BOXKIT_SPLIT_WITNESS_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boxkit/coloring.hpp"
#include "boxkit/errors.hpp"
#include "boxkit/graph.hpp"
#include "boxkit/recognition.hpp"

namespace boxkit {

// A per-vertex family of sets certifying a boxicity bound: over a proper
// coloring with classes V_i = (v_{i,1}..v_{i,n(i)}), each vertex v_{i,j}
// carries a set X_{i,j} with N(v_{i,j}) ⊆ X_{i,j} ⊆ V \ V_i. Pivots are
// 1-based: class i's sets must descend under inclusion up to position
// pivot[i] and ascend from position pivot[i]+1 on; pivot[i] = n(i) encodes a
// single descending chain.
struct WitnessFamily {
    ColorClasses coloring;
    std::vector<int> pivots;
    std::vector<std::vector<std::vector<int>>> x_sets;
};

struct WitnessReport {
    bool containment_ok = true;
    bool chains_ok = true;
    bool exclusion_ok = true;
    std::vector<std::string> violations;

    bool ok() const { return containment_ok && chains_ok && exclusion_ok; }
};

struct SplitMember {
    Graph graph;
    SplitPartition partition;
};

struct SplitIntervalFamily {
    std::vector<SplitMember> members;
    std::vector<std::string> notes;
};

namespace detail {

// Rejects malformed witness shapes (sizes, pivot ranges, vertex ids) with
// std::invalid_argument; semantic conditions are judged elsewhere.
inline void witness_shape_check(const Graph& g, const WitnessFamily& w) {
    if (!verify_coloring(g, w.coloring))
        throw std::invalid_argument("witness coloring is not a proper coloring of the graph");
    std::size_t t = w.coloring.classes.size();
    if (w.pivots.size() != t || w.x_sets.size() != t)
        throw std::invalid_argument("witness pivot/x-set count does not match the class count");
    int n = g.vertex_count();
    for (std::size_t i = 0; i < t; ++i) {
        std::size_t ni = w.coloring.classes[i].size();
        if (ni == 0)
            throw std::invalid_argument("witness class " + std::to_string(i + 1) + " is empty");
        if (w.x_sets[i].size() != ni)
            throw std::invalid_argument("witness x-set row " + std::to_string(i + 1) +
                                        " does not match the class size");
        if (w.pivots[i] < 1 || std::size_t(w.pivots[i]) > ni)
            throw std::invalid_argument("witness pivot for class " + std::to_string(i + 1) +
                                        " is outside 1..n(i)");
        for (const auto& xs : w.x_sets[i])
            for (int x : xs)
                if (x < 0 || x >= n)
                    throw std::invalid_argument("witness x-set contains vertex " +
                                                std::to_string(x) + " outside the graph");
    }
}

inline Bitset to_bitset(int n, const std::vector<int>& verts) {
    Bitset b(n);
    for (int v : verts) b.set(v);
    return b;
}

inline std::string xref(std::size_t i, std::size_t j) {
    return "X[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
}

// Mechanical member construction: base edges, plus v_{i,j}–x for every
// x in X_{i,j}, plus the complete graph on V \ V_i. No semantic judgment —
// callers verify the outcome or the witness as their contracts demand.
inline SplitMember build_member(const Graph& g, const WitnessFamily& w, int member) {
    int n = g.vertex_count();
    const auto& cls = w.coloring.classes[std::size_t(member)];
    GraphBuilder gb(g);
    for (std::size_t j = 0; j < cls.size(); ++j)
        for (int x : w.x_sets[std::size_t(member)][j])
            if (x != cls[j]) gb.add_edge(cls[j], x);
    Bitset in_class = to_bitset(n, cls);
    std::vector<int> rest;
    rest.reserve(std::size_t(n) - cls.size());
    for (int v = 0; v < n; ++v)
        if (!in_class.test(v)) rest.push_back(v);
    for (std::size_t a = 0; a < rest.size(); ++a)
        for (std::size_t b = a + 1; b < rest.size(); ++b) gb.add_edge(rest[a], rest[b]);
    std::vector<int> s_sorted = cls;
    std::sort(s_sorted.begin(), s_sorted.end());
    return SplitMember{gb.build(), SplitPartition{std::move(s_sorted), std::move(rest)}};
}

}  // namespace detail

// Checks the three semantic conditions of a witness family independently:
// containment (N(v_{i,j}) ⊆ X_{i,j} ⊆ V \ V_i), the descending/ascending
// inclusion chains around each pivot, and the cross-class exclusion rule
// (for nonadjacent v_{i,s}, v_{j,t} in distinct classes, v_{i,s} ∉ X_{j,t}
// or v_{j,t} ∉ X_{i,s}). Every failure is recorded with its indices.
inline WitnessReport validate_witness(const Graph& g, const WitnessFamily& w) {
    detail::witness_shape_check(g, w);
    int n = g.vertex_count();
    std::size_t t = w.coloring.classes.size();

    std::vector<std::vector<detail::Bitset>> X(t);
    std::vector<detail::Bitset> class_mask;
    class_mask.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
        class_mask.push_back(detail::to_bitset(n, w.coloring.classes[i]));
        X[i].reserve(w.x_sets[i].size());
        for (const auto& xs : w.x_sets[i]) X[i].push_back(detail::to_bitset(n, xs));
    }

    WitnessReport rep;
    for (std::size_t i = 0; i < t; ++i) {
        const auto& cls = w.coloring.classes[i];
        for (std::size_t j = 0; j < cls.size(); ++j) {
            int v = cls[j];
            if (!g.neighbors(v).subset_of(X[i][j])) {
                auto missing = g.neighbors(v);
                missing.subtract(X[i][j]);
                rep.containment_ok = false;
                rep.violations.push_back(detail::xref(i, j) + " omits neighbor " +
                                         std::to_string(missing.first()) + " of vertex " +
                                         std::to_string(v));
            }
            if (X[i][j].intersects(class_mask[i])) {
                auto inside = X[i][j];
                inside &= class_mask[i];
                rep.containment_ok = false;
                rep.violations.push_back(detail::xref(i, j) + " contains vertex " +
                                         std::to_string(inside.first()) + " of its own class");
            }
        }
    }

    for (std::size_t i = 0; i < t; ++i) {
        std::size_t k = std::size_t(w.pivots[i]);
        std::size_t ni = w.coloring.classes[i].size();
        for (std::size_t j = 0; j + 1 < k; ++j)
            if (!X[i][j + 1].subset_of(X[i][j])) {
                rep.chains_ok = false;
                rep.violations.push_back("descending chain broken: " + detail::xref(i, j) +
                                         " does not contain " + detail::xref(i, j + 1));
            }
        for (std::size_t j = k; j + 1 < ni; ++j)
            if (!X[i][j].subset_of(X[i][j + 1])) {
                rep.chains_ok = false;
                rep.violations.push_back("ascending chain broken: " + detail::xref(i, j + 1) +
                                         " does not contain " + detail::xref(i, j));
            }
    }

    std::vector<std::pair<int, int>> where(std::size_t(n), {-1, -1});
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < w.coloring.classes[i].size(); ++j)
            where[std::size_t(w.coloring.classes[i][j])] = {int(i), int(j)};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            auto [iu, ju] = where[std::size_t(u)];
            auto [iv, jv] = where[std::size_t(v)];
            if (iu == iv) continue;
            if (X[std::size_t(iv)][std::size_t(jv)].test(u) &&
                X[std::size_t(iu)][std::size_t(ju)].test(v)) {
                rep.exclusion_ok = false;
                rep.violations.push_back(
                    "condition (ii) fails for pair (" + std::to_string(u) + ", " +
                    std::to_string(v) + "): " + std::to_string(u) + " in " +
                    detail::xref(std::size_t(iv), std::size_t(jv)) + " and " + std::to_string(v) +
                    " in " + detail::xref(std::size_t(iu), std::size_t(ju)));
            }
        }
    return rep;
}

// Member graph H_i for class index i (0-based): base edges, the X
// augmentation for class i, and a clique on everything outside class i.
// The witness must validate; the returned partition is (V_i, V \ V_i).
inline SplitMember build_H(const Graph& g, const WitnessFamily& w, int i) {
    WitnessReport rep = validate_witness(g, w);
    if (!rep.ok()) {
        std::string msg = "witness validation failed";
        if (!rep.violations.empty()) msg += ": " + rep.violations.front();
        throw VerifyError(msg);
    }
    if (i < 0 || std::size_t(i) >= w.coloring.classes.size())
        throw std::invalid_argument("class index out of range");
    return detail::build_member(g, w, i);
}

// Builds every member mechanically, then verifies the outcomes: each member
// must be split with the intended partition, must be an interval graph, and
// the members' edge sets must intersect to exactly the base edge set. The
// comparability premise is run as an informational cross-check (it is
// sufficient, not necessary, for intervalness).
inline SplitIntervalFamily build_family(const Graph& g, const WitnessFamily& w) {
    detail::witness_shape_check(g, w);
    int n = g.vertex_count();
    std::size_t t = w.coloring.classes.size();

    SplitIntervalFamily fam;
    std::vector<detail::Bitset> meet;
    meet.reserve(std::size_t(n));
    for (int v = 0; v < n; ++v) {
        auto all = detail::Bitset::full(n);
        all.reset(v);
        meet.push_back(std::move(all));
    }

    for (std::size_t i = 0; i < t; ++i) {
        SplitMember m = detail::build_member(g, w, int(i));
        const auto& S = m.partition.independent_set;
        for (std::size_t a = 0; a < S.size(); ++a)
            for (std::size_t b = a + 1; b < S.size(); ++b)
                if (m.graph.has_edge(S[a], S[b]))
                    throw VerifyError("member " + std::to_string(i + 1) +
                                      " is not split with its class independent: vertices " +
                                      std::to_string(S[a]) + " and " + std::to_string(S[b]) +
                                      " became adjacent");
        if (!is_interval(m.graph))
            throw VerifyError("member " + std::to_string(i + 1) + " is not an interval graph");
        if (!neighborhood_comparability_premise(m.graph, m.partition))
            fam.notes.push_back("member " + std::to_string(i + 1) +
                                ": interval holds but the neighborhood-comparability premise "
                                "fails (the premise is sufficient only)");
        for (int v = 0; v < n; ++v) meet[std::size_t(v)] &= m.graph.neighbors(v);
        fam.members.push_back(std::move(m));
    }

    for (int u = 0; u < n; ++u) {
        auto extra = meet[std::size_t(u)];
        extra.subtract(g.neighbors(u));
        if (!extra.empty())
            throw VerifyError("edge intersection differs from the base graph: non-edge (" +
                              std::to_string(std::min(u, extra.first())) + ", " +
                              std::to_string(std::max(u, extra.first())) +
                              ") survives in every member");
    }
    return fam;
}

namespace detail {

// Chain test for a candidate class order: neighborhoods descend under
// inclusion up to the pivot and ascend after it.
inline bool chains_with_pivot(const Graph& g, const std::vector<int>& order, int pivot) {
    for (int j = 0; j + 1 < pivot; ++j)
        if (!g.neighbors(order[std::size_t(j + 1)]).subset_of(g.neighbors(order[std::size_t(j)])))
            return false;
    for (std::size_t j = std::size_t(pivot); j + 1 < order.size(); ++j)
        if (!g.neighbors(order[j]).subset_of(g.neighbors(order[j + 1]))) return false;
    return true;
}

// Exhaustive arrangement search: all permutations of the class (ascending
// start), pivots tried largest-first. Complete but factorial; callers cap
// the class size.
inline std::optional<std::pair<std::vector<int>, int>> arrange_class_exhaustive(
    const Graph& g, std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    do {
        for (int pivot = int(verts.size()); pivot >= 1; --pivot)
            if (chains_with_pivot(g, verts, pivot)) return std::make_pair(verts, pivot);
    } while (std::next_permutation(verts.begin(), verts.end()));
    return std::nullopt;
}

// Poset route for large classes: an arrangement exists iff the class's
// neighborhoods split into two inclusion chains, i.e. iff the
// incomparability graph on the class is bipartite. One side becomes the
// descending prefix, the other the ascending suffix.
inline std::optional<std::pair<std::vector<int>, int>> arrange_class_chain_cover(
    const Graph& g, std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    std::size_t m = verts.size();
    std::vector<std::vector<char>> incomparable(m, std::vector<char>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            bool cmp = g.neighbors(verts[a]).subset_of(g.neighbors(verts[b])) ||
                       g.neighbors(verts[b]).subset_of(g.neighbors(verts[a]));
            incomparable[a][b] = incomparable[b][a] = !cmp;
        }
    std::vector<int> side(m, -1);
    for (std::size_t s = 0; s < m; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<std::size_t> queue{s};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            std::size_t x = queue[qi];
            for (std::size_t y = 0; y < m; ++y) {
                if (!incomparable[x][y]) continue;
                if (side[y] < 0) {
                    side[y] = 1 - side[std::size_t(x)];
                    queue.push_back(y);
                } else if (side[y] == side[x]) {
                    return std::nullopt;  // odd incomparability cycle: no 2-chain cover
                }
            }
        }
    }
    auto by_inclusion = [&](int u, int v) {
        int cu = g.neighbors(u).count(), cv = g.neighbors(v).count();
        if (cu != cv) return cu < cv;
        return u < v;
    };
    std::vector<int> desc, asc;
    for (std::size_t a = 0; a < m; ++a) (side[a] == 0 ? desc : asc).push_back(verts[a]);
    std::sort(desc.begin(), desc.end(), by_inclusion);
    std::reverse(desc.begin(), desc.end());
    std::sort(asc.begin(), asc.end(), by_inclusion);
    int pivot = int(desc.size());
    std::vector<int> order = std::move(desc);
    order.insert(order.end(), asc.begin(), asc.end());
    if (pivot == 0) {
        pivot = 1;  // pivot ranges over 1..n(i); a pure ascending order keeps position 1 as a
                    // one-element descending prefix
        if (!chains_with_pivot(g, order, pivot)) return std::nullopt;
    }
    return std::make_pair(std::move(order), pivot);
}

inline std::optional<std::pair<std::vector<int>, int>> arrange_class(const Graph& g,
                                                                     const std::vector<int>& verts) {
    if (verts.size() <= 8) return arrange_class_exhaustive(g, verts);
    return arrange_class_chain_cover(g, verts);
}

}  // namespace detail

// Derives a witness whose X sets are exact neighborhoods by reordering each
// color class so the neighborhoods chain (descending, then ascending about
// a pivot). Absent when some class admits no such arrangement; the
// cross-class exclusion condition holds automatically for exact
// neighborhoods.
inline std::optional<WitnessFamily> from_neighborhoods(const Graph& g, const ColorClasses& c) {
    if (!verify_coloring(g, c))
        throw std::invalid_argument("coloring is not a proper coloring of the graph");
    for (const auto& cls : c.classes)
        if (cls.empty()) throw std::invalid_argument("coloring has an empty class");
    WitnessFamily w;
    for (const auto& cls : c.classes) {
        auto arranged = detail::arrange_class(g, cls);
        if (!arranged) return std::nullopt;
        auto& [order, pivot] = *arranged;
        std::vector<std::vector<int>> row;
        row.reserve(order.size());
        for (int v : order) row.push_back(g.neighbor_list(v));
        w.coloring.classes.push_back(std::move(order));
        w.pivots.push_back(pivot);
        w.x_sets.push_back(std::move(row));
    }
    return w;
}

}  // namespace boxkit

#endif
