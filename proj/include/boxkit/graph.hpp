#ifndef BOXKIT_GRAPH_HPP
#define BOXKIT_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boxkit/detail/bitset.hpp"

namespace boxkit {

// Simple undirected graph on vertices 0..n-1, immutable once built.
// Adjacency is kept as one bitset row per vertex; all listing functions
// return vertices and edges in ascending order.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return adj_[std::size_t(u)].test(v); }
    const detail::Bitset& neighbors(int v) const { return adj_[std::size_t(v)]; }
    int degree(int v) const { return adj_[std::size_t(v)].count(); }
    std::vector<int> neighbor_list(int v) const { return adj_[std::size_t(v)].to_vector(); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            adj_[std::size_t(u)].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    bool is_complete() const { return m_ == std::size_t(n_) * (n_ - 1) / 2; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    friend class GraphBuilder;
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<detail::Bitset> adj_;
};

// The one place edges get added. Duplicate edges are fine; self-loops and
// out-of-range endpoints are not.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) {
        if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
        g_.n_ = n;
        g_.adj_.assign(std::size_t(n), detail::Bitset(n));
    }
    explicit GraphBuilder(const Graph& base) : g_(base) {}

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
        if (g_.adj_[std::size_t(u)].test(v)) return;
        g_.adj_[std::size_t(u)].set(v);
        g_.adj_[std::size_t(v)].set(u);
        ++g_.m_;
    }

    Graph build() { return std::move(g_); }

private:
    Graph g_;
};

inline Graph new_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

// kinds: complete [n], path [n], cycle [n>=3], complete_multipartite
// [part sizes...], crown [side n>=2] (complete bipartite minus a perfect
// matching, sides {0..n-1} and {n..2n-1} with i matched to n+i)
inline Graph generate(const std::string& kind, const std::vector<int>& params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("generate " + kind + ": expected " + std::to_string(k) +
                                        " parameter(s)");
    };
    if (kind == "complete") {
        want(1);
        int n = params[0];
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
        return b.build();
    }
    if (kind == "path") {
        want(1);
        int n = params[0];
        if (n < 1) throw std::invalid_argument("generate path: need n >= 1");
        GraphBuilder b(n);
        for (int u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
        return b.build();
    }
    if (kind == "cycle") {
        want(1);
        int n = params[0];
        if (n < 3) throw std::invalid_argument("generate cycle: need n >= 3");
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
        return b.build();
    }
    if (kind == "complete_multipartite") {
        if (params.empty())
            throw std::invalid_argument("generate complete_multipartite: need part sizes");
        int n = 0;
        for (int p : params) {
            if (p < 1) throw std::invalid_argument("generate complete_multipartite: part sizes must be positive");
            n += p;
        }
        std::vector<int> part;
        part.reserve(std::size_t(n));
        for (std::size_t i = 0; i < params.size(); ++i)
            part.insert(part.end(), std::size_t(params[i]), int(i));
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (part[std::size_t(u)] != part[std::size_t(v)]) b.add_edge(u, v);
        return b.build();
    }
    if (kind == "crown") {
        want(1);
        int n = params[0];
        if (n < 2) throw std::invalid_argument("generate crown: need side size n >= 2");
        GraphBuilder b(2 * n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) b.add_edge(u, n + v);
        return b.build();
    }
    throw std::invalid_argument("generate: unknown kind '" + kind + "'");
}

inline Graph complement(const Graph& g) {
    int n = g.vertex_count();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) b.add_edge(u, v);
    return b.build();
}

inline std::vector<std::pair<int, int>> non_edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

// Induced subgraph on s. Vertices are relabeled 0..|s|-1 in ascending order
// of original id; the returned map sends new ids back to original ones.
inline std::pair<Graph, std::vector<int>> induced(const Graph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced: vertex out of range: " + std::to_string(v));
    GraphBuilder b(int(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) b.add_edge(int(i), int(j));
    return {b.build(), std::move(s)};
}

inline bool is_cycle_graph(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    // 2-regular and connected
    std::vector<int> stack{0};
    detail::Bitset seen(n);
    seen.set(0);
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        g.neighbors(u).for_each([&](int v) {
            if (!seen.test(v)) {
                seen.set(v);
                ++reached;
                stack.push_back(v);
            }
        });
    }
    return reached == n;
}

}  // namespace boxkit

#endif
