#ifndef BOXKIT_CIRCULANT_HPP
#define BOXKIT_CIRCULANT_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boxkit/coloring.hpp"
#include "boxkit/errors.hpp"
#include "boxkit/graph.hpp"
#include "boxkit/recognition.hpp"
#include "boxkit/split_witness.hpp"

namespace boxkit {

// Parameters of the circulant family: a vertices, adjacency exactly at
// cyclic distance >= b, decomposed as a = n*b + r with 0 <= r < b.
struct CirculantParams {
    int a = 0, b = 0, n = 0, r = 0;
};

inline CirculantParams circulant_params(int a, int b) {
    if (b < 1 || a < 2 * b)
        throw std::invalid_argument("circulant parameters require a >= 2b >= 2 (got a=" +
                                    std::to_string(a) + ", b=" + std::to_string(b) + ")");
    return CirculantParams{a, b, a / b, a % b};
}

// Graph on {0..a-1} with u ~ v iff (u-v) mod a lies in {b..a-b}, i.e. the
// cyclic distance between u and v is at least b.
inline Graph gen_circulant(int a, int b) {
    circulant_params(a, b);
    GraphBuilder gb(a);
    for (int u = 0; u < a; ++u)
        for (int v = u + 1; v < a; ++v) {
            int d = v - u;
            if (d >= b && d <= a - b) gb.add_edge(u, v);
        }
    return gb.build();
}

namespace detail {

inline int ceil_half(int x) { return (x + 1) / 2; }

}  // namespace detail

// The canonical n-coloring of the circulant on n*b vertices: class i
// (1-based) lists vertices (i-1)b .. (i-1)b + b-1 in position order, each a
// window of b cyclically consecutive vertices.
inline ColorClasses coloring_41(int n, int b) {
    if (n < 2 || b < 1) throw std::invalid_argument("coloring requires n >= 2 and b >= 1");
    ColorClasses c;
    c.classes.reserve(std::size_t(n));
    for (int i = 1; i <= n; ++i) {
        std::vector<int> cls;
        cls.reserve(std::size_t(b));
        for (int j = 1; j <= b; ++j) cls.push_back((i - 1) * b + j - 1);
        c.classes.push_back(std::move(cls));
    }
    return c;
}

// Explicit witness family for the circulant on a = n*b vertices over
// coloring_41: every pivot is ceil(b/2), and X_{i,j} is the graph
// neighborhood of v_{i,j} augmented by a run of class-(i-1) vertices on the
// descending side or class-(i+1) vertices on the ascending side. Class
// arithmetic wraps modulo n.
inline WitnessFamily witness_41(int n, int b) {
    ColorClasses coloring = coloring_41(n, b);
    Graph g = gen_circulant(n * b, b);
    int c = detail::ceil_half(b);

    WitnessFamily w;
    w.coloring = coloring;
    w.pivots.assign(std::size_t(n), c);
    w.x_sets.reserve(std::size_t(n));
    for (int i = 1; i <= n; ++i) {
        const auto& prev = coloring.classes[std::size_t((i - 2 + n) % n)];
        const auto& next = coloring.classes[std::size_t(i % n)];
        const auto& cls = coloring.classes[std::size_t(i - 1)];
        std::vector<std::vector<int>> row;
        row.reserve(std::size_t(b));
        for (int j = 1; j <= b; ++j) {
            detail::Bitset x = g.neighbors(cls[std::size_t(j - 1)]);
            if (b % 2 == 0) {
                if (j <= b / 2)
                    for (int t = j; t <= b / 2; ++t) x.set(prev[std::size_t(t - 1)]);
                else
                    for (int t = b / 2 + 1; t <= j; ++t) x.set(next[std::size_t(t - 1)]);
            } else {
                if (j <= c)
                    for (int t = j; t <= c; ++t) x.set(prev[std::size_t(t - 1)]);
                else
                    for (int t = c; t <= j; ++t) x.set(next[std::size_t(t - 1)]);
            }
            row.push_back(x.to_vector());
        }
        w.x_sets.push_back(std::move(row));
    }
    return w;
}

// The canonical (n+1)-coloring of the circulant on a = n*b + r vertices
// (0 < r < b): the first k = n-b+r+1 classes are windows of size b, the
// remaining classes windows of size b-1.
inline ColorClasses coloring_42(int n, int b, int r) {
    if (n < 2 || b < 2 || r < 1 || r >= b)
        throw std::invalid_argument("coloring requires n >= 2, b >= 2, 1 <= r < b");
    if (n < b - r - 1)
        throw std::invalid_argument("hypothesis violated: need n >= b - r - 1 (got n=" +
                                    std::to_string(n) + ", b=" + std::to_string(b) +
                                    ", r=" + std::to_string(r) + ")");
    int k = n - b + r + 1;
    ColorClasses c;
    c.classes.reserve(std::size_t(n + 1));
    for (int i = 1; i <= k; ++i) {
        std::vector<int> cls;
        for (int j = 1; j <= b; ++j) cls.push_back((i - 1) * b + j - 1);
        c.classes.push_back(std::move(cls));
    }
    for (int i = k + 1; i <= n + 1; ++i) {
        std::vector<int> cls;
        for (int j = 1; j <= b - 1; ++j) cls.push_back((i - 1) * (b - 1) + j - 1 + k);
        c.classes.push_back(std::move(cls));
    }
    return c;
}

// Explicit witness family for the circulant on a = n*b + r vertices over
// coloring_42. Pivots are ceil(|V_i|/2); the augmentation run for X_{i,j}
// depends on the sizes of the neighboring classes and the parity of |V_i|,
// with index ranges clamped to the neighbor's size (an empty range adds
// nothing). Class arithmetic wraps modulo n+1.
inline WitnessFamily witness_42(int n, int b, int r) {
    ColorClasses coloring = coloring_42(n, b, r);
    Graph g = gen_circulant(n * b + r, b);
    int ncls = n + 1;

    WitnessFamily w;
    w.coloring = coloring;
    w.x_sets.reserve(std::size_t(ncls));
    for (int i = 1; i <= ncls; ++i) {
        const auto& cls = coloring.classes[std::size_t(i - 1)];
        const auto& prev = coloring.classes[std::size_t((i - 2 + ncls) % ncls)];
        const auto& next = coloring.classes[std::size_t(i % ncls)];
        int sz = int(cls.size());
        int szp = int(prev.size());
        int szn = int(next.size());
        int c = detail::ceil_half(sz);
        w.pivots.push_back(c);
        std::vector<std::vector<int>> row;
        row.reserve(std::size_t(sz));
        for (int j = 1; j <= sz; ++j) {
            detail::Bitset x = g.neighbors(cls[std::size_t(j - 1)]);
            int lo, hi;
            if (j <= c) {
                if (szp == b) {
                    lo = j;
                    hi = c;
                } else {
                    lo = std::max(1, j - 1);
                    hi = c - 1;
                }
                for (int t = lo; t <= hi; ++t) x.set(prev[std::size_t(t - 1)]);
            } else {
                if (sz % 2 == 0) {
                    lo = (sz == b) ? sz / 2 + 1 : sz / 2 + 2;
                    hi = (sz == b) ? std::min(j, szn) : std::min(j + 1, szn);
                } else {
                    lo = (sz == b) ? c : c + 1;
                    hi = (sz == b) ? std::min(j, szn) : std::min(j + 1, szn);
                }
                for (int t = lo; t <= hi; ++t) x.set(next[std::size_t(t - 1)]);
            }
            row.push_back(x.to_vector());
        }
        w.x_sets.push_back(std::move(row));
    }
    return w;
}

// The asteroidal triple (1, ceil(b/2), b) present in every circulant with
// a >= 3b and b >= 3, verified by the component criterion with witness
// paths attached.
inline ATriple at_witness(int a, int b) {
    if (b < 3 || a < 3 * b)
        throw std::invalid_argument("asteroidal witness requires a >= 3b and b >= 3 (got a=" +
                                    std::to_string(a) + ", b=" + std::to_string(b) + ")");
    Graph g = gen_circulant(a, b);
    ATriple t;
    t.u = 1;
    t.v = detail::ceil_half(b);
    t.w = b;
    auto full = detail::Bitset::full(a);
    auto check_pair = [&](int x, int y, int third) {
        detail::Bitset blocked = g.neighbors(third);
        blocked.set(third);
        auto comp = detail::components_avoiding(g, blocked);
        if (comp[std::size_t(x)] < 0 || comp[std::size_t(x)] != comp[std::size_t(y)])
            throw VerifyError("triple (" + std::to_string(t.u) + ", " + std::to_string(t.v) +
                              ", " + std::to_string(t.w) + ") is not asteroidal: vertices " +
                              std::to_string(x) + " and " + std::to_string(y) +
                              " are separated by the neighborhood of " + std::to_string(third));
        auto allowed = full;
        allowed.subtract(g.neighbors(third));
        allowed.reset(third);
        return detail::bfs_path(g, allowed, x, y);
    };
    t.path_uv = check_pair(t.u, t.v, t.w);
    t.path_vw = check_pair(t.v, t.w, t.u);
    t.path_wu = check_pair(t.w, t.u, t.v);
    return t;
}

}  // namespace boxkit

#endif
