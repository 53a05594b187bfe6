#ifndef BOXKIT_REALIZATION_HPP
#define BOXKIT_REALIZATION_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boxkit/errors.hpp"
#include "boxkit/graph.hpp"
#include "boxkit/recognition.hpp"
#include "boxkit/split_witness.hpp"

namespace boxkit {

// Closed integer interval [first, second] per vertex; two vertices are
// adjacent in the realized graph exactly when their intervals intersect.
struct IntervalRealization {
    std::vector<std::pair<int, int>> intervals;
};

// k closed integer intervals per vertex; two vertices are adjacent exactly
// when their boxes intersect, i.e. when the intervals overlap in every one
// of the k coordinates. k = 0 is the complete-graph convention (every box
// is the single point of 0-space).
struct BoxRepresentation {
    int k = 0;
    std::vector<std::vector<std::pair<int, int>>> boxes;
};

namespace detail {

inline bool intervals_overlap(std::pair<int, int> a, std::pair<int, int> b) {
    return std::max(a.first, b.first) <= std::min(a.second, b.second);
}

}  // namespace detail

// True iff the intervals' intersection graph is exactly g.
inline bool verify_realization(const Graph& g, const IntervalRealization& r) {
    int n = g.vertex_count();
    if (int(r.intervals.size()) != n)
        throw std::invalid_argument("realization covers " + std::to_string(r.intervals.size()) +
                                    " vertices but the graph has " + std::to_string(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (detail::intervals_overlap(r.intervals[std::size_t(u)],
                                          r.intervals[std::size_t(v)]) != g.has_edge(u, v))
                return false;
    return true;
}

// Analytic realization of a split graph whose independent-side
// neighborhoods chain (descending to the pivot, ascending after it) in the
// given order s_1..s_m. Descending s_j sits at the point -j, ascending s_j
// at the point m-j+1, and each clique vertex spans [-L, R] where L and R
// reach exactly as far as its chain neighbors require; every clique
// interval contains 0.
inline IntervalRealization realize_chain_split(const Graph& h, const SplitPartition& p,
                                               const std::vector<int>& order, int pivot) {
    detail::check_split_partition(h, p);
    int n = h.vertex_count();
    int m = int(order.size());
    {
        std::vector<int> a = order, b = p.independent_set;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            throw std::invalid_argument("order must be a permutation of the independent side");
    }
    if (m == 0 ? pivot != 0 : (pivot < 1 || pivot > m))
        throw std::invalid_argument("pivot must lie in 1..|S| (0 for an empty side)");
    if (!detail::chains_with_pivot(h, order, pivot))
        throw std::invalid_argument(
            "chain precondition violated: neighborhoods do not descend to the pivot and ascend "
            "after it");

    IntervalRealization out;
    out.intervals.assign(std::size_t(n), {0, 0});
    std::vector<int> position(std::size_t(n), 0);  // nonzero exactly on the independent side
    for (int j = 1; j <= m; ++j) {
        int pos = (j <= pivot) ? -j : m - j + 1;
        position[std::size_t(order[std::size_t(j - 1)])] = pos;
        out.intervals[std::size_t(order[std::size_t(j - 1)])] = {pos, pos};
    }
    for (int x : p.clique) {
        int lo = 0, hi = 0;
        h.neighbors(x).for_each([&](int s) {
            int pos = position[std::size_t(s)];
            lo = std::min(lo, pos);
            hi = std::max(hi, pos);
        });
        out.intervals[std::size_t(x)] = {lo, hi};
    }
    if (!verify_realization(h, out))
        throw std::logic_error("realize_chain_split: construction failed its own verification");
    return out;
}

namespace detail {

// Backtracking search for an order of the maximal cliques in which every
// vertex's cliques are consecutive; returns clique indices in order.
inline bool consecutive_arrangement(const std::vector<std::vector<int>>& cliques, int n,
                                    std::vector<int>& arrangement) {
    std::size_t q = cliques.size();
    std::vector<char> used(q, 0);
    // 0 = unseen, 1 = open (appeared, may continue), 2 = closed
    std::vector<char> state(std::size_t(n), 0);
    arrangement.clear();

    auto rec = [&](auto&& self) -> bool {
        if (arrangement.size() == q) return true;
        for (std::size_t c = 0; c < q; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (int v : cliques[c])
                if (state[std::size_t(v)] == 2) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            std::vector<int> opened, closed;
            for (int v : cliques[c])
                if (state[std::size_t(v)] == 0) {
                    state[std::size_t(v)] = 1;
                    opened.push_back(v);
                }
            for (int v = 0; v < n; ++v)
                if (state[std::size_t(v)] == 1 &&
                    !std::binary_search(cliques[c].begin(), cliques[c].end(), v)) {
                    state[std::size_t(v)] = 2;
                    closed.push_back(v);
                }
            used[c] = 1;
            arrangement.push_back(int(c));
            if (self(self)) return true;
            arrangement.pop_back();
            used[c] = 0;
            for (int v : closed) state[std::size_t(v)] = 1;
            for (int v : opened) state[std::size_t(v)] = 0;
        }
        return false;
    };
    return rec(rec);
}

}  // namespace detail

// An interval realization exactly when the graph is an interval graph:
// maximal cliques are arranged consecutively and each vertex spans the
// positions of the cliques containing it. Endpoints lie in
// [0, clique count).
inline std::optional<IntervalRealization> realize_interval(const Graph& g) {
    auto [visit, chordal] = detail::mcs_visit_order(g);
    if (!chordal) return std::nullopt;
    auto cliques = detail::chordal_maximal_cliques(g, visit);
    std::vector<int> arrangement;
    if (!detail::consecutive_arrangement(cliques, g.vertex_count(), arrangement))
        return std::nullopt;

    int n = g.vertex_count();
    IntervalRealization out;
    out.intervals.assign(std::size_t(n), {0, 0});
    std::vector<int> lo(std::size_t(n), -1), hi(std::size_t(n), -1);
    for (std::size_t pos = 0; pos < arrangement.size(); ++pos)
        for (int v : cliques[std::size_t(arrangement[pos])]) {
            if (lo[std::size_t(v)] < 0) lo[std::size_t(v)] = int(pos);
            hi[std::size_t(v)] = int(pos);
        }
    for (int v = 0; v < n; ++v) out.intervals[std::size_t(v)] = {lo[std::size_t(v)], hi[std::size_t(v)]};
    if (!verify_realization(g, out))
        throw std::logic_error("realize_interval: arrangement failed its own verification");
    return out;
}

// True iff the boxes' intersection graph is exactly g (overlap required in
// all k coordinates simultaneously).
inline bool verify_boxes(const Graph& g, const BoxRepresentation& b) {
    int n = g.vertex_count();
    if (int(b.boxes.size()) != n)
        throw std::invalid_argument("box representation covers " + std::to_string(b.boxes.size()) +
                                    " vertices but the graph has " + std::to_string(n));
    for (const auto& box : b.boxes)
        if (int(box.size()) != b.k)
            throw std::invalid_argument("box with " + std::to_string(box.size()) +
                                        " coordinates in a " + std::to_string(b.k) +
                                        "-dimensional representation");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool meet = true;
            for (int c = 0; c < b.k && meet; ++c)
                meet = detail::intervals_overlap(b.boxes[std::size_t(u)][std::size_t(c)],
                                                 b.boxes[std::size_t(v)][std::size_t(c)]);
            if (meet != g.has_edge(u, v)) return false;
        }
    return true;
}

// Product of per-member interval realizations: vertex v's box is the
// sequence of v's intervals across the members, giving a |family|-
// dimensional representation of the base graph.
inline BoxRepresentation assemble_boxes(const Graph& g, const SplitIntervalFamily& fam,
                                        const std::vector<IntervalRealization>& realizations) {
    if (realizations.size() != fam.members.size())
        throw std::invalid_argument("expected one realization per family member (" +
                                    std::to_string(fam.members.size()) + " members, " +
                                    std::to_string(realizations.size()) + " realizations)");
    int n = g.vertex_count();
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        if (fam.members[i].graph.vertex_count() != n)
            throw std::invalid_argument("member " + std::to_string(i + 1) +
                                        " is not on the base vertex set");
        if (!verify_realization(fam.members[i].graph, realizations[i]))
            throw std::invalid_argument("realization " + std::to_string(i + 1) +
                                        " does not realize member " + std::to_string(i + 1));
    }
    BoxRepresentation out;
    out.k = int(fam.members.size());
    out.boxes.assign(std::size_t(n), {});
    for (int v = 0; v < n; ++v) {
        out.boxes[std::size_t(v)].reserve(std::size_t(out.k));
        for (std::size_t i = 0; i < realizations.size(); ++i)
            out.boxes[std::size_t(v)].push_back(realizations[i].intervals[std::size_t(v)]);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool meet = true;
            for (int c = 0; c < out.k && meet; ++c)
                meet = detail::intervals_overlap(out.boxes[std::size_t(u)][std::size_t(c)],
                                                 out.boxes[std::size_t(v)][std::size_t(c)]);
            if (meet != g.has_edge(u, v))
                throw VerifyError("assembled boxes do not realize the graph: pair (" +
                                  std::to_string(u) + ", " + std::to_string(v) + ") " +
                                  (meet ? "intersects but is not an edge" : "misses but is an edge"));
        }
    return out;
}

}  // namespace boxkit

#endif
