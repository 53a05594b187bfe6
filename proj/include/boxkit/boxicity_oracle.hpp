#ifndef BOXKIT_BOXICITY_ORACLE_HPP
#define BOXKIT_BOXICITY_ORACLE_HPP

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "boxkit/errors.hpp"
#include "boxkit/graph.hpp"
#include "boxkit/recognition.hpp"

namespace boxkit {

// For a base graph with non-edges e_0 < e_1 < ... (lexicographic), each
// catalog entry is the set of non-edges EXCLUDED by some interval
// supergraph (encoded as a bitmask over the non-edge list), filtered to the
// inclusion-maximal entries. Exactness rests on: k interval supergraphs
// intersect to E(G) iff their excluded sets cover all non-edges, and any
// excluded set may be replaced by a maximal catalog superset without
// shrinking coverage — so covering with maximal entries only is complete.
struct CompletionCatalog {
    Graph base;
    std::vector<std::pair<int, int>> non_edges;
    std::vector<std::uint64_t> excluded_masks;  // maximal; popcount desc, then value asc

    std::vector<std::pair<int, int>> excluded_pairs(std::size_t idx) const {
        std::vector<std::pair<int, int>> out;
        std::uint64_t m = excluded_masks.at(idx);
        while (m) {
            out.push_back(non_edges[std::size_t(std::countr_zero(m))]);
            m &= m - 1;
        }
        return out;
    }

    // The interval supergraph realizing entry idx: base plus every
    // non-edge the entry does not exclude.
    Graph completion_graph(std::size_t idx) const {
        GraphBuilder gb(base);
        std::uint64_t excl = excluded_masks.at(idx);
        for (std::size_t b = 0; b < non_edges.size(); ++b)
            if (!(excl >> b & 1)) gb.add_edge(non_edges[b].first, non_edges[b].second);
        return gb.build();
    }
};

namespace detail {

inline Graph graph_plus_mask(const Graph& base, const std::vector<std::pair<int, int>>& pairs,
                             std::uint64_t mask) {
    GraphBuilder gb(base);
    while (mask) {
        const auto& e = pairs[std::size_t(std::countr_zero(mask))];
        gb.add_edge(e.first, e.second);
        mask &= mask - 1;
    }
    return gb.build();
}

}  // namespace detail

// Enumerates every subset of the non-edges, keeps those whose addition
// yields an interval graph, records each one's excluded set (the non-edges
// NOT added), and filters to the inclusion-maximal excluded sets.
inline CompletionCatalog interval_completions(const Graph& g, int limit = 20) {
    CompletionCatalog cat;
    cat.base = g;
    cat.non_edges = non_edges(g);
    int M = int(cat.non_edges.size());
    if (M > limit)
        throw std::invalid_argument("non-edge guard exceeded: " + std::to_string(M) +
                                    " non-edges > limit " + std::to_string(limit));
    if (M > 25)
        throw std::invalid_argument("completion enumeration supports at most 25 non-edges (got " +
                                    std::to_string(M) + ")");

    const std::uint32_t count = std::uint32_t(1) << M;
    const std::uint32_t full = count - 1;
    std::vector<std::uint8_t> excl(count, 0);
    for (std::uint32_t added = 0; added < count; ++added)
        if (is_interval(detail::graph_plus_mask(g, cat.non_edges, added))) excl[full ^ added] = 1;

    // dom[m] = some excluded set contains m
    std::vector<std::uint8_t> dom = excl;
    for (int b = 0; b < M; ++b)
        for (std::uint32_t m = 0; m < count; ++m)
            if (!(m >> b & 1)) dom[m] |= dom[m | (std::uint32_t(1) << b)];

    for (std::uint32_t m = 0; m < count; ++m) {
        if (!excl[m]) continue;
        bool maximal = true;
        for (int b = 0; b < M && maximal; ++b)
            if (!(m >> b & 1) && dom[m | (std::uint32_t(1) << b)]) maximal = false;
        if (maximal) cat.excluded_masks.push_back(m);
    }
    std::sort(cat.excluded_masks.begin(), cat.excluded_masks.end(),
              [](std::uint64_t a, std::uint64_t b) {
                  int pa = std::popcount(a), pb = std::popcount(b);
                  if (pa != pb) return pa > pb;
                  return a < b;
              });
    return cat;
}

// Least number of catalog entries covering every non-edge (0 exactly for
// complete graphs), by branch and bound on the least-covered non-edge.
// k_max < 0 means unbounded; otherwise exceeding k_max is an error.
inline int cover_minimum(const CompletionCatalog& cat, int k_max = -1) {
    int M = int(cat.non_edges.size());
    if (M == 0) return 0;

    const std::uint64_t full = (std::uint64_t(1) << M) - 1;
    auto coverers = std::vector<std::vector<int>>(std::size_t(M));
    for (std::size_t idx = 0; idx < cat.excluded_masks.size(); ++idx) {
        std::uint64_t m = cat.excluded_masks[idx];
        while (m) {
            coverers[std::size_t(std::countr_zero(m))].push_back(int(idx));
            m &= m - 1;
        }
    }
    for (int b = 0; b < M; ++b)
        if (coverers[std::size_t(b)].empty())
            throw std::logic_error("boxicity_exact: non-edge admits no interval completion");

    int best = M + 1;
    auto dfs = [&](auto&& self, std::uint64_t covered, int depth) -> void {
        if (covered == full) {
            best = std::min(best, depth);
            return;
        }
        if (depth + 1 >= best) return;
        int pick = -1;
        for (int b = 0; b < M; ++b) {
            if (covered >> b & 1) continue;
            if (pick < 0 || coverers[std::size_t(b)].size() < coverers[std::size_t(pick)].size())
                pick = b;
        }
        for (int idx : coverers[std::size_t(pick)])
            self(self, covered | cat.excluded_masks[std::size_t(idx)], depth + 1);
    };
    dfs(dfs, 0, 0);

    if (k_max >= 0 && best > k_max)
        throw VerifyError("boxicity exceeds the requested bound: exact cover needs " +
                          std::to_string(best) + " entries > k_max " + std::to_string(k_max));
    return best;
}

inline int boxicity_exact(const Graph& g, int k_max = -1, int limit = 20) {
    return cover_minimum(interval_completions(g, limit), k_max);
}

// Report of a search for two interval completions of a crown graph whose
// excluded sets jointly cover all non-edges (which would certify boxicity
// <= 2). Randomized mode samples seeded trials; exhaustive mode enumerates
// every completion pair implicitly and, finding none, proves the boxicity
// exceeds 2.
struct CrownSearchReport {
    int side = 0;
    int non_edge_count = 0;
    long long trials = 0;  // executed; stops at the successful trial
    std::uint64_t seed = 0;
    bool exhaustive = false;
    bool found_cover = false;
    bool proven_exceeds_two = false;
    int best_coverage = 0;    // max |E1 ∪ E2| over examined (exhaustive: all) pairs
    long long best_trial = -1;  // 1-based trial achieving best_coverage; -1 when n/a
    std::pair<int, int> uncovered_example{-1, -1};
    std::vector<std::pair<int, int>> cover_added_first, cover_added_second;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed + stream * 0x9E3779B97F4A7C15ULL);
}

// Hand-rolled Fisher–Yates so shuffles are identical across platforms
// (std::shuffle is not portable across standard libraries).
template <class Rng>
inline void shuffle_ints(std::vector<int>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[std::size_t(rng() % i)]);
}

// Greedy interval completion by removal: starting from all non-edges added
// (a complete graph), drop them in the given order whenever the graph stays
// interval. One pass only; the result is maximal along this order but not
// necessarily globally maximal. Returns the mask of non-edges kept (added).
inline std::uint64_t greedy_completion_mask(const Graph& base,
                                            const std::vector<std::pair<int, int>>& ne,
                                            const std::vector<int>& removal_order,
                                            std::uint64_t start) {
    std::uint64_t added = start;
    for (int idx : removal_order) {
        if (!(added >> idx & 1)) continue;
        std::uint64_t cand = added & ~(std::uint64_t(1) << idx);
        if (is_interval(graph_plus_mask(base, ne, cand))) added = cand;
    }
    return added;
}

struct CrownTrialOutcome {
    long long found_trial = LLONG_MAX;
    std::uint64_t found_a1 = 0, found_a2 = 0;
    int best_cov = -1;
    long long best_trial = -1;
    std::uint64_t best_a1 = 0, best_a2 = 0;
};

}  // namespace detail

// Seeded randomized search (reproducible for a fixed seed regardless of
// jobs): each trial builds one random greedy completion, then a second one
// biased to re-exclude exactly the edges the first one added, and measures
// how much of the non-edge set the two excluded sets cover together.
inline CrownSearchReport crown_search(int n, long long trials, std::uint64_t seed, int jobs = 1) {
    if (n < 2 || n > 7)
        throw std::invalid_argument("crown side must be between 2 and 7 (got " +
                                    std::to_string(n) + ")");
    if (trials < 0) throw std::invalid_argument("trial count must be nonnegative");
    if (jobs < 1) throw std::invalid_argument("jobs must be positive");

    Graph base = generate("crown", {n});
    std::vector<std::pair<int, int>> ne = non_edges(base);
    const int M = int(ne.size());
    const std::uint64_t full = (std::uint64_t(1) << M) - 1;

    CrownSearchReport rep;
    rep.side = n;
    rep.non_edge_count = M;
    rep.seed = seed;

    std::atomic<long long> found_floor{LLONG_MAX};
    auto run_trial = [&](long long t, detail::CrownTrialOutcome& out) {
        std::mt19937_64 rng(detail::derive_seed(seed, std::uint64_t(t)));
        std::vector<int> order1(std::size_t(M), 0);
        for (int i = 0; i < M; ++i) order1[std::size_t(i)] = i;
        detail::shuffle_ints(order1, rng);
        std::uint64_t a1 = detail::greedy_completion_mask(base, ne, order1, full);

        std::vector<int> firsts, rests;
        for (int b = 0; b < M; ++b) (a1 >> b & 1 ? firsts : rests).push_back(b);
        detail::shuffle_ints(firsts, rng);
        detail::shuffle_ints(rests, rng);
        firsts.insert(firsts.end(), rests.begin(), rests.end());
        std::uint64_t a2 = detail::greedy_completion_mask(base, ne, firsts, full);

        int cov = M - std::popcount(a1 & a2);
        if (cov > out.best_cov) {
            out.best_cov = cov;
            out.best_trial = t;
            out.best_a1 = a1;
            out.best_a2 = a2;
        }
        if (cov == M && t < out.found_trial) {
            out.found_trial = t;
            out.found_a1 = a1;
            out.found_a2 = a2;
        }
    };

    int workers = int(std::min<long long>(jobs, std::max<long long>(trials, 1)));
    auto outcomes = std::vector<detail::CrownTrialOutcome>(std::size_t(workers));
    std::vector<std::thread> pool;
    long long chunk = trials / workers, extra = trials % workers;
    long long next_start = 1;
    for (int w = 0; w < workers; ++w) {
        long long len = chunk + (w < extra ? 1 : 0);
        long long lo = next_start, hi = next_start + len;
        next_start = hi;
        pool.emplace_back([&, lo, hi, w]() {
            for (long long t = lo; t < hi; ++t) {
                if (t >= found_floor.load(std::memory_order_relaxed)) break;
                run_trial(t, outcomes[std::size_t(w)]);
                if (outcomes[std::size_t(w)].found_trial < LLONG_MAX) {
                    long long cur = found_floor.load(std::memory_order_relaxed);
                    while (outcomes[std::size_t(w)].found_trial < cur &&
                           !found_floor.compare_exchange_weak(cur,
                                                              outcomes[std::size_t(w)].found_trial,
                                                              std::memory_order_relaxed)) {
                    }
                    break;
                }
            }
        });
    }
    for (auto& th : pool) th.join();

    detail::CrownTrialOutcome merged;
    for (const auto& o : outcomes) {
        if (o.found_trial < merged.found_trial) {
            merged.found_trial = o.found_trial;
            merged.found_a1 = o.found_a1;
            merged.found_a2 = o.found_a2;
        }
        if (o.best_cov > merged.best_cov ||
            (o.best_cov == merged.best_cov && o.best_trial >= 0 &&
             (merged.best_trial < 0 || o.best_trial < merged.best_trial))) {
            merged.best_cov = o.best_cov;
            merged.best_trial = o.best_trial;
            merged.best_a1 = o.best_a1;
            merged.best_a2 = o.best_a2;
        }
    }

    auto mask_pairs = [&](std::uint64_t m) {
        std::vector<std::pair<int, int>> out;
        while (m) {
            out.push_back(ne[std::size_t(std::countr_zero(m))]);
            m &= m - 1;
        }
        return out;
    };

    if (merged.found_trial < LLONG_MAX) {
        rep.found_cover = true;
        rep.trials = merged.found_trial;
        rep.best_trial = merged.found_trial;
        rep.best_coverage = M;
        rep.cover_added_first = mask_pairs(merged.found_a1);
        rep.cover_added_second = mask_pairs(merged.found_a2);
    } else {
        rep.trials = trials;
        rep.best_coverage = std::max(merged.best_cov, 0);
        rep.best_trial = merged.best_trial;
        if (merged.best_trial >= 0) {
            std::uint64_t overlap = merged.best_a1 & merged.best_a2;
            if (overlap) rep.uncovered_example = ne[std::size_t(std::countr_zero(overlap))];
        }
    }
    return rep;
}

// Full enumeration over all 2^(n²) edge subsets: decides outright whether
// two interval completions can cover every non-edge. When no pair covers,
// the crown's boxicity provably exceeds 2, and the report carries the best
// possible pair coverage (via a lattice distance transform) with an example
// non-edge no best pair covers.
inline CrownSearchReport crown_search_exhaustive(int n, int jobs = 1) {
    if (n < 2 || n > 5)
        throw std::invalid_argument("exhaustive crown mode supports sides 2..5 (got " +
                                    std::to_string(n) + ")");
    if (jobs < 1) throw std::invalid_argument("jobs must be positive");

    Graph base = generate("crown", {n});
    std::vector<std::pair<int, int>> ne = non_edges(base);
    const int M = int(ne.size());
    const std::uint32_t count = std::uint32_t(1) << M;
    const std::uint32_t full = count - 1;

    CrownSearchReport rep;
    rep.side = n;
    rep.non_edge_count = M;
    rep.exhaustive = true;

    // interval[A] = crown plus the edge subset A is an interval graph
    std::vector<std::uint8_t> interval_table(count, 0);
    {
        int workers = std::min<int>(jobs, 64);
        std::vector<std::thread> pool;
        std::uint64_t chunk = (std::uint64_t(count) + std::uint64_t(workers) - 1) /
                              std::uint64_t(workers);
        for (int w = 0; w < workers; ++w) {
            std::uint64_t lo = std::uint64_t(w) * chunk;
            std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, count);
            pool.emplace_back([&, lo, hi]() {
                for (std::uint64_t a = lo; a < hi; ++a)
                    if (is_interval(detail::graph_plus_mask(base, ne, a)))
                        interval_table[std::size_t(a)] = 1;
            });
        }
        for (auto& th : pool) th.join();
    }

    // reaches[S] = some interval completion's added set is contained in S
    std::vector<std::uint8_t> reaches = interval_table;
    for (int b = 0; b < M; ++b) {
        const std::uint32_t bit = std::uint32_t(1) << b;
        for (std::uint32_t m = 0; m < count; ++m)
            if (m & bit) reaches[m] |= reaches[m ^ bit];
    }

    auto minimize_added = [&](std::uint32_t s) {
        // descend to an actual interval completion inside s
        bool shrunk = true;
        while (shrunk) {
            shrunk = false;
            std::uint32_t m = s;
            while (m) {
                std::uint32_t bit = m & (0u - m);
                m ^= bit;
                if (reaches[s ^ bit]) {
                    s ^= bit;
                    shrunk = true;
                }
            }
        }
        return s;
    };
    auto mask_pairs = [&](std::uint32_t m) {
        std::vector<std::pair<int, int>> out;
        std::uint64_t w = m;
        while (w) {
            out.push_back(ne[std::size_t(std::countr_zero(w))]);
            w &= w - 1;
        }
        return out;
    };

    // A pair (A1, A2) of completions covers all non-edges iff A1 ∩ A2 = ∅.
    for (std::uint32_t a1 = 0; a1 < count; ++a1) {
        if (!interval_table[a1]) continue;
        if (reaches[full ^ a1]) {
            rep.found_cover = true;
            rep.best_coverage = M;
            rep.cover_added_first = mask_pairs(a1);
            rep.cover_added_second = mask_pairs(minimize_added(full ^ a1));
            return rep;
        }
    }

    // No disjoint pair: the minimum possible |A1 ∩ A2| bounds the best
    // coverage exactly. need_bits[S] = fewest elements to add to S before it
    // contains a completion.
    rep.proven_exceeds_two = true;
    std::vector<std::uint8_t> need_bits(count, 255);
    for (int cnt = M; cnt >= 0; --cnt)
        for (std::uint32_t m = 0; m < count; ++m) {
            if (std::popcount(m) != cnt) continue;
            if (reaches[m]) {
                need_bits[m] = 0;
                continue;
            }
            std::uint8_t bestv = 255;
            for (int b = 0; b < M; ++b)
                if (!(m >> b & 1)) bestv = std::min(bestv, need_bits[m | (std::uint32_t(1) << b)]);
            need_bits[m] = std::uint8_t(bestv + 1);
        }

    int min_overlap = M + 1;
    std::uint32_t arg_a1 = 0;
    for (std::uint32_t a1 = 0; a1 < count; ++a1) {
        if (!interval_table[a1]) continue;
        int k = need_bits[full ^ a1];
        if (k < min_overlap) {
            min_overlap = k;
            arg_a1 = a1;
        }
    }
    rep.best_coverage = M - min_overlap;
    std::uint32_t s = full ^ arg_a1;
    while (!reaches[s]) {
        for (int b = 0; b < M; ++b)
            if (!(s >> b & 1) && need_bits[s | (std::uint32_t(1) << b)] == need_bits[s] - 1) {
                s |= std::uint32_t(1) << b;
                break;
            }
    }
    std::uint32_t a2 = minimize_added(s);
    std::uint32_t overlap = arg_a1 & a2;
    if (overlap) rep.uncovered_example = ne[std::size_t(std::countr_zero(overlap))];
    return rep;
}

}  // namespace boxkit

#endif
