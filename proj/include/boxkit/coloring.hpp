#ifndef BOXKIT_COLORING_HPP
#define BOXKIT_COLORING_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "boxkit/graph.hpp"

namespace boxkit {

// A proper coloring given as its color classes, in the order the colors were
// introduced; vertices inside each class ascend.
struct ColorClasses {
    std::vector<std::vector<int>> classes;

    int color_count() const { return int(classes.size()); }

    std::vector<int> color_of_vertex(int n) const {
        std::vector<int> col(std::size_t(n), -1);
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) col[std::size_t(v)] = int(c);
        return col;
    }
};

namespace detail {

// Branch and bound with a greedy-coloring upper bound on how much the
// candidate set can extend the current clique.
inline void max_clique_expand(const Graph& g, std::vector<int>& cur, const Bitset& cand,
                              std::vector<int>& best) {
    if (cand.empty()) {
        if (cur.size() > best.size()) best = cur;
        return;
    }
    auto vs = cand.to_vector();
    std::vector<int> color(vs.size(), 0);
    std::vector<Bitset> classes;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::size_t c = 0;
        while (c < classes.size() && classes[c].intersects(g.neighbors(vs[i]))) ++c;
        if (c == classes.size()) classes.emplace_back(g.vertex_count());
        classes[c].set(vs[i]);
        color[i] = int(c) + 1;
    }
    std::vector<std::size_t> idx(vs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (color[a] != color[b]) return color[a] < color[b];
        return vs[a] < vs[b];
    });
    Bitset rest = cand;
    for (std::size_t k = idx.size(); k-- > 0;) {
        int v = vs[idx[k]];
        if (cur.size() + std::size_t(color[idx[k]]) <= best.size()) return;
        Bitset next = rest;
        next &= g.neighbors(v);
        cur.push_back(v);
        max_clique_expand(g, cur, next, best);
        cur.pop_back();
        rest.reset(v);
    }
}

// Backtracking k-coloring over `order`; a vertex may reuse any color seen so
// far or open exactly the next fresh one, which prunes color permutations.
inline bool try_color(const Graph& g, int k, const std::vector<int>& order,
                      std::vector<int>& color, std::size_t depth, int max_used) {
    if (depth == order.size()) return true;
    int v = order[depth];
    int limit = std::min(max_used + 1, k - 1);
    for (int c = 0; c <= limit; ++c) {
        bool ok = true;
        g.neighbors(v).for_each([&](int u) {
            if (color[std::size_t(u)] == c) ok = false;
        });
        if (!ok) continue;
        color[std::size_t(v)] = c;
        if (try_color(g, k, order, color, depth + 1, std::max(max_used, c))) return true;
        color[std::size_t(v)] = -1;
    }
    return false;
}

inline std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(std::size_t(g.vertex_count()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return order;
}

inline ColorClasses classes_from_colors(const std::vector<int>& color) {
    int k = 0;
    for (int c : color) k = std::max(k, c + 1);
    ColorClasses out;
    out.classes.assign(std::size_t(k), {});
    for (std::size_t v = 0; v < color.size(); ++v)
        out.classes[std::size_t(color[v])].push_back(int(v));
    return out;
}

}  // namespace detail

// True iff the classes partition the vertex set and each class is
// independent. Within-class order carries meaning elsewhere but is
// irrelevant to validity.
inline bool verify_coloring(const Graph& g, const ColorClasses& c) {
    int n = g.vertex_count();
    std::vector<char> seen(std::size_t(n), 0);
    int covered = 0;
    for (const auto& cls : c.classes) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
            int v = cls[i];
            if (v < 0 || v >= n || seen[std::size_t(v)]) return false;
            seen[std::size_t(v)] = 1;
            ++covered;
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (g.has_edge(v, cls[j])) return false;
        }
    }
    return covered == n;
}

// A maximum clique, as an ascending vertex list.
inline std::vector<int> max_clique(const Graph& g) {
    std::vector<int> best, cur;
    detail::max_clique_expand(g, cur, detail::Bitset::full(g.vertex_count()), best);
    std::sort(best.begin(), best.end());
    return best;
}

inline int clique_number(const Graph& g) { return int(max_clique(g).size()); }

// A maximum independent set = a maximum clique of the complement.
inline std::vector<int> max_independent_set(const Graph& g) { return max_clique(complement(g)); }

// Exact independence number; guarded because the search is exponential.
inline int independence_number(const Graph& g, int guard = 25) {
    if (g.vertex_count() > guard)
        throw std::invalid_argument("independence_number: size guard exceeded (" +
                                    std::to_string(g.vertex_count()) + " vertices > guard " +
                                    std::to_string(guard) + ")");
    return int(max_independent_set(g).size());
}

// Greedy coloring along the given vertex order (a permutation of 0..n-1):
// each vertex takes the smallest color absent from its colored neighbors.
inline ColorClasses greedy_coloring(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (int(order.size()) != n) throw std::invalid_argument("order must list every vertex once");
    std::vector<char> seen(std::size_t(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[std::size_t(v)])
            throw std::invalid_argument("order must list every vertex once");
        seen[std::size_t(v)] = 1;
    }
    std::vector<int> color(std::size_t(n), -1);
    for (int v : order) {
        std::vector<char> used(std::size_t(n) + 1, 0);
        g.neighbors(v).for_each([&](int u) {
            if (color[std::size_t(u)] >= 0) used[std::size_t(color[std::size_t(u)])] = 1;
        });
        int c = 0;
        while (used[std::size_t(c)]) ++c;
        color[std::size_t(v)] = c;
    }
    return detail::classes_from_colors(color);
}

// Greedy coloring in natural vertex order.
inline ColorClasses greedy_coloring(const Graph& g) {
    std::vector<int> order(std::size_t(g.vertex_count()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
    return greedy_coloring(g, order);
}

// An optimum proper coloring: the clique number seeds the lower bound and k
// grows until the backtracking search succeeds.
inline ColorClasses optimal_coloring(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return ColorClasses{};
    auto order = detail::degree_order(g);
    int lo = clique_number(g);
    for (int k = lo; k <= n; ++k) {
        std::vector<int> color(std::size_t(n), -1);
        if (detail::try_color(g, k, order, color, 0, -1)) return detail::classes_from_colors(color);
    }
    throw std::logic_error("optimal_coloring: search space exhausted");
}

struct ChromaticResult {
    int value = 0;
    ColorClasses witness;
};

// Exact chromatic number together with an optimal coloring as witness;
// guarded because the search is exponential.
inline ChromaticResult chromatic_number(const Graph& g, int guard = 20) {
    if (g.vertex_count() < 1) throw std::invalid_argument("chromatic_number: empty graph");
    if (g.vertex_count() > guard)
        throw std::invalid_argument("chromatic_number: size guard exceeded (" +
                                    std::to_string(g.vertex_count()) + " vertices > guard " +
                                    std::to_string(guard) + ")");
    ColorClasses w = optimal_coloring(g);
    return ChromaticResult{w.color_count(), std::move(w)};
}

}  // namespace boxkit

#endif
