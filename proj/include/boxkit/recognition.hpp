#ifndef BOXKIT_RECOGNITION_HPP
#define BOXKIT_RECOGNITION_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boxkit/graph.hpp"

namespace boxkit {

struct SplitPartition {
    std::vector<int> independent_set;
    std::vector<int> clique;
};

// An asteroidal triple u < v < w together with witness paths: path_uv joins
// u and v while avoiding every neighbor of w, and cyclically for the rest.
struct ATriple {
    int u = -1, v = -1, w = -1;
    std::vector<int> path_uv, path_vw, path_wu;
};

namespace detail {

// Maximum-cardinality search. Returns the visit order (ties broken toward
// the lowest vertex id) and whether the reversal of that order eliminates
// the graph perfectly, i.e. whether the graph is chordal.
inline std::pair<std::vector<int>, bool> mcs_visit_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> weight(n, 0), visit, pos(n, -1);
    visit.reserve(std::size_t(n));
    std::vector<char> numbered(std::size_t(n), 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[std::size_t(v)] && (best < 0 || weight[std::size_t(v)] > weight[std::size_t(best)]))
                best = v;
        numbered[std::size_t(best)] = 1;
        pos[std::size_t(best)] = step;
        visit.push_back(best);
        g.neighbors(best).for_each([&](int u) {
            if (!numbered[std::size_t(u)]) ++weight[std::size_t(u)];
        });
    }
    // For each vertex, its earlier-visited neighbors must form a clique.
    // It suffices to check them against the latest-visited one.
    for (int i = 0; i < n; ++i) {
        int v = visit[std::size_t(i)];
        int p = -1;
        g.neighbors(v).for_each([&](int u) {
            if (pos[std::size_t(u)] < i && (p < 0 || pos[std::size_t(u)] > pos[std::size_t(p)])) p = u;
        });
        if (p < 0) continue;
        bool ok = true;
        g.neighbors(v).for_each([&](int u) {
            if (u != p && pos[std::size_t(u)] < i && !g.has_edge(p, u)) ok = false;
        });
        if (!ok) return {std::move(visit), false};
    }
    return {std::move(visit), true};
}

// Maximal cliques of a chordal graph: every maximal clique appears as a
// visited vertex together with its earlier-visited neighbors. Results are
// sorted by size descending, then lexicographically.
inline std::vector<std::vector<int>> chordal_maximal_cliques(const Graph& g,
                                                             const std::vector<int>& visit) {
    int n = g.vertex_count();
    std::vector<int> pos(std::size_t(n), -1);
    for (int i = 0; i < n; ++i) pos[std::size_t(visit[std::size_t(i)])] = i;
    std::vector<Bitset> cand;
    cand.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) {
        int v = visit[std::size_t(i)];
        Bitset c(n);
        c.set(v);
        g.neighbors(v).for_each([&](int u) {
            if (pos[std::size_t(u)] < i) c.set(u);
        });
        cand.push_back(std::move(c));
    }
    std::vector<Bitset> keep;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cand.size() && maximal; ++j)
            if (j != i && cand[i].subset_of(cand[j]) && !(cand[i] == cand[j])) maximal = false;
        // among equal candidates keep the first
        for (std::size_t j = 0; j < i && maximal; ++j)
            if (cand[i] == cand[j]) maximal = false;
        if (maximal) keep.push_back(cand[i]);
    }
    std::vector<std::vector<int>> out;
    out.reserve(keep.size());
    for (const auto& c : keep) out.push_back(c.to_vector());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

// Component labels of g restricted to vertices outside `blocked`;
// blocked vertices get label -1. Labels are assigned in ascending order of
// the least vertex of each component.
inline std::vector<int> components_avoiding(const Graph& g, const Bitset& blocked) {
    int n = g.vertex_count();
    std::vector<int> comp(std::size_t(n), -1);
    Bitset seen = blocked;
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        seen.set(s);
        comp[std::size_t(s)] = c;
        stack.assign(1, s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            g.neighbors(u).for_each([&](int v) {
                if (!seen.test(v)) {
                    seen.set(v);
                    comp[std::size_t(v)] = c;
                    stack.push_back(v);
                }
            });
        }
        ++c;
    }
    return comp;
}

// Shortest path from s to t using only vertices in `allowed` (which must
// contain both endpoints). BFS layer by layer; the predecessor of each
// vertex is the lowest-id candidate, so the path is deterministic.
inline std::vector<int> bfs_path(const Graph& g, const Bitset& allowed, int s, int t) {
    int n = g.vertex_count();
    std::vector<int> pred(std::size_t(n), -2);
    std::vector<int> queue{s};
    pred[std::size_t(s)] = -1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        if (u == t) break;
        g.neighbors(u).for_each([&](int v) {
            if (allowed.test(v) && pred[std::size_t(v)] == -2) {
                pred[std::size_t(v)] = u;
                queue.push_back(v);
            }
        });
    }
    if (pred[std::size_t(t)] == -2) return {};
    std::vector<int> path;
    for (int x = t; x != -1; x = pred[std::size_t(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

// comp[w][v] = component of v in g minus the closed neighborhood of w
inline std::vector<std::vector<int>> at_component_matrix(const Graph& g) {
    int n = g.vertex_count();
    auto comp = std::vector<std::vector<int>>(std::size_t(n));
    for (int w = 0; w < n; ++w) {
        Bitset blocked = g.neighbors(w);
        blocked.set(w);
        comp[std::size_t(w)] = components_avoiding(g, blocked);
    }
    return comp;
}

}  // namespace detail

// Perfect elimination ordering if the graph is chordal, otherwise nothing.
// In the returned order, each vertex's neighbors among later vertices form
// a clique.
inline std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g) {
    auto [visit, chordal] = detail::mcs_visit_order(g);
    if (!chordal) return std::nullopt;
    return std::vector<int>(visit.rbegin(), visit.rend());
}

inline bool is_chordal(const Graph& g) { return detail::mcs_visit_order(g).second; }

// All asteroidal triples (or just the first, in lexicographic order of
// (u,v,w)) with witness paths attached. A triple qualifies when each pair
// lies in one component of the graph minus the third vertex's closed
// neighborhood, which is the same as being joined by a path avoiding the
// third vertex's neighbors.
inline std::vector<ATriple> asteroidal_triples(const Graph& g, bool find_all = false) {
    int n = g.vertex_count();
    auto comp = detail::at_component_matrix(g);
    std::vector<ATriple> out;
    auto full = detail::Bitset::full(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w) {
                const auto &cu = comp[std::size_t(u)], &cv = comp[std::size_t(v)],
                           &cw = comp[std::size_t(w)];
                if (cw[std::size_t(u)] < 0 || cw[std::size_t(u)] != cw[std::size_t(v)]) continue;
                if (cv[std::size_t(u)] < 0 || cv[std::size_t(u)] != cv[std::size_t(w)]) continue;
                if (cu[std::size_t(v)] < 0 || cu[std::size_t(v)] != cu[std::size_t(w)]) continue;
                ATriple t;
                t.u = u;
                t.v = v;
                t.w = w;
                auto allowed_minus = [&](int x) {
                    auto a = full;
                    a.subtract(g.neighbors(x));
                    a.reset(x);
                    return a;
                };
                t.path_uv = detail::bfs_path(g, allowed_minus(w), u, v);
                t.path_vw = detail::bfs_path(g, allowed_minus(u), v, w);
                t.path_wu = detail::bfs_path(g, allowed_minus(v), w, u);
                out.push_back(std::move(t));
                if (!find_all) return out;
            }
    return out;
}

namespace detail {

inline bool has_asteroidal_triple(const Graph& g) {
    int n = g.vertex_count();
    auto comp = at_component_matrix(g);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w) {
                const auto &cu = comp[std::size_t(u)], &cv = comp[std::size_t(v)],
                           &cw = comp[std::size_t(w)];
                if (cw[std::size_t(u)] < 0 || cw[std::size_t(u)] != cw[std::size_t(v)]) continue;
                if (cv[std::size_t(u)] < 0 || cv[std::size_t(u)] != cv[std::size_t(w)]) continue;
                if (cu[std::size_t(v)] < 0 || cu[std::size_t(v)] != cu[std::size_t(w)]) continue;
                return true;
            }
    return false;
}

}  // namespace detail

// Interval = chordal with no asteroidal triple.
inline bool is_interval(const Graph& g) {
    return is_chordal(g) && !detail::has_asteroidal_triple(g);
}

// Split partition (independent set, clique) if one exists. A graph is split
// exactly when it and its complement are both chordal; the partition is
// recovered by scanning maximal cliques for one whose complement is
// independent.
inline std::optional<SplitPartition> is_split(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return SplitPartition{{}, {}};
    auto [visit, chordal] = detail::mcs_visit_order(g);
    if (!chordal) return std::nullopt;
    if (!is_chordal(complement(g))) return std::nullopt;
    auto cliques = detail::chordal_maximal_cliques(g, visit);
    for (const auto& K : cliques) {
        detail::Bitset mask(n);
        for (int v : K) mask.set(v);
        std::vector<int> rest;
        rest.reserve(std::size_t(n) - K.size());
        for (int v = 0; v < n; ++v)
            if (!mask.test(v)) rest.push_back(v);
        bool indep = true;
        for (std::size_t i = 0; i < rest.size() && indep; ++i)
            for (std::size_t j = i + 1; j < rest.size() && indep; ++j)
                if (g.has_edge(rest[i], rest[j])) indep = false;
        if (indep) return SplitPartition{std::move(rest), K};
    }
    throw std::logic_error("is_split: doubly chordal graph with no extractable partition");
}

namespace detail {

// Throws std::invalid_argument unless p is a genuine split partition of g:
// the two sides partition V, the first is independent, the second a clique.
inline void check_split_partition(const Graph& g, const SplitPartition& p) {
    int n = g.vertex_count();
    Bitset seen(n);
    auto mark = [&](const std::vector<int>& part) {
        for (int v : part) {
            if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range");
            if (seen.test(v)) throw std::invalid_argument("partition repeats vertex " + std::to_string(v));
            seen.set(v);
        }
    };
    mark(p.independent_set);
    mark(p.clique);
    if (seen.count() != n) throw std::invalid_argument("partition does not cover the graph");
    for (std::size_t i = 0; i < p.independent_set.size(); ++i)
        for (std::size_t j = i + 1; j < p.independent_set.size(); ++j)
            if (g.has_edge(p.independent_set[i], p.independent_set[j]))
                throw std::invalid_argument("independent side has an edge");
    for (std::size_t i = 0; i < p.clique.size(); ++i)
        for (std::size_t j = i + 1; j < p.clique.size(); ++j)
            if (!g.has_edge(p.clique[i], p.clique[j]))
                throw std::invalid_argument("clique side misses an edge");
}

}  // namespace detail

// True when among any three vertices of the independent side, some two have
// neighborhoods comparable under inclusion. Sufficient for the split graph
// to be interval.
inline bool neighborhood_comparability_premise(const Graph& g, const SplitPartition& p) {
    detail::check_split_partition(g, p);
    const auto& S = p.independent_set;
    std::size_t m = S.size();
    std::vector<std::vector<char>> cmp(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            cmp[i][j] = g.neighbors(S[i]).subset_of(g.neighbors(S[j])) ||
                        g.neighbors(S[j]).subset_of(g.neighbors(S[i]));
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k)
                if (!cmp[i][j] && !cmp[i][k] && !cmp[j][k]) return false;
    return true;
}

}  // namespace boxkit

#endif
