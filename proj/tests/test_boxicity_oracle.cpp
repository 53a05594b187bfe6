#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <catch_amalgamated.hpp>

#include <boxkit/boxicity_oracle.hpp>
#include <boxkit/graph.hpp>
#include <boxkit/recognition.hpp>

#include "oracles.hpp"

using boxkit::CompletionCatalog;
using boxkit::CrownSearchReport;
using boxkit::Graph;

namespace {

// independent re-enumeration of maximal excluded sets, no shared code paths
std::set<std::uint64_t> brute_maximal_excluded(const Graph& g) {
    auto ne = boxkit::non_edges(g);
    int M = int(ne.size());
    std::uint64_t full = (std::uint64_t(1) << M) - 1;
    std::vector<std::uint64_t> all;
    for (std::uint64_t added = 0; added <= full; ++added) {
        boxkit::GraphBuilder gb(g);
        for (int b = 0; b < M; ++b)
            if (added >> b & 1) gb.add_edge(ne[std::size_t(b)].first, ne[std::size_t(b)].second);
        if (boxkit::is_interval(gb.build())) all.push_back(full ^ added);
    }
    std::set<std::uint64_t> maximal;
    for (std::uint64_t m : all) {
        bool dominated = false;
        for (std::uint64_t other : all)
            if (other != m && (m & other) == m) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.insert(m);
    }
    return maximal;
}

bool reports_equal(const CrownSearchReport& a, const CrownSearchReport& b) {
    return a.side == b.side && a.non_edge_count == b.non_edge_count && a.trials == b.trials &&
           a.seed == b.seed && a.exhaustive == b.exhaustive && a.found_cover == b.found_cover &&
           a.proven_exceeds_two == b.proven_exceeds_two && a.best_coverage == b.best_coverage &&
           a.best_trial == b.best_trial && a.uncovered_example == b.uncovered_example &&
           a.cover_added_first == b.cover_added_first &&
           a.cover_added_second == b.cover_added_second;
}

// a found cover must be a genuine certificate: both completions interval,
// their added sets disjoint
void check_cover_certificate(const CrownSearchReport& rep) {
    Graph base = boxkit::generate("crown", {rep.side});
    boxkit::GraphBuilder g1(base), g2(base);
    for (auto [u, v] : rep.cover_added_first) g1.add_edge(u, v);
    for (auto [u, v] : rep.cover_added_second) g2.add_edge(u, v);
    REQUIRE(boxkit::is_interval(g1.build()));
    REQUIRE(boxkit::is_interval(g2.build()));
    std::set<std::pair<int, int>> first(rep.cover_added_first.begin(),
                                        rep.cover_added_first.end());
    for (auto e : rep.cover_added_second) REQUIRE(first.count(e) == 0);
}

}  // namespace

TEST_CASE("completion catalog of a four-cycle") {
    Graph c4 = boxkit::generate("cycle", {4});
    CompletionCatalog cat = boxkit::interval_completions(c4);
    REQUIRE(cat.non_edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
    REQUIRE(cat.excluded_masks == std::vector<std::uint64_t>{1, 2});
    REQUIRE(cat.excluded_pairs(0) == std::vector<std::pair<int, int>>{{0, 2}});
    REQUIRE(cat.excluded_pairs(1) == std::vector<std::pair<int, int>>{{1, 3}});
    // each completion graph adds exactly the other diagonal
    REQUIRE(cat.completion_graph(0).has_edge(1, 3));
    REQUIRE_FALSE(cat.completion_graph(0).has_edge(0, 2));
    REQUIRE(boxkit::is_interval(cat.completion_graph(0)));
}

TEST_CASE("complete graphs yield the single empty entry") {
    CompletionCatalog cat = boxkit::interval_completions(boxkit::generate("complete", {4}));
    REQUIRE(cat.non_edges.empty());
    REQUIRE(cat.excluded_masks == std::vector<std::uint64_t>{0});
    REQUIRE(boxkit::cover_minimum(cat) == 0);
}

TEST_CASE("catalog entries are sound") {
    for (const char* kind : {"cycle", "path"}) {
        for (int n : {5, 6}) {
            Graph g = boxkit::generate(kind, {n});
            CompletionCatalog cat = boxkit::interval_completions(g);
            REQUIRE_FALSE(cat.excluded_masks.empty());
            for (std::size_t i = 0; i < cat.excluded_masks.size(); ++i) {
                Graph comp = cat.completion_graph(i);
                REQUIRE(boxkit::is_interval(comp));
                for (auto [u, v] : cat.excluded_pairs(i)) REQUIRE_FALSE(comp.has_edge(u, v));
                // excluded plus added partitions the non-edge set
                REQUIRE(comp.edge_count() ==
                        g.edge_count() + cat.non_edges.size() - cat.excluded_pairs(i).size());
            }
            // sorted by popcount descending, ties by value
            for (std::size_t i = 0; i + 1 < cat.excluded_masks.size(); ++i) {
                int pa = std::popcount(cat.excluded_masks[i]);
                int pb = std::popcount(cat.excluded_masks[i + 1]);
                REQUIRE((pa > pb || (pa == pb && cat.excluded_masks[i] < cat.excluded_masks[i + 1])));
            }
        }
    }
}

TEST_CASE("catalog matches an independent maximality enumeration") {
    std::vector<Graph> subjects;
    subjects.push_back(boxkit::generate("cycle", {5}));
    subjects.push_back(boxkit::generate("cycle", {6}));
    subjects.push_back(boxkit::generate("path", {5}));
    subjects.push_back(boxkit::new_graph(5, {{0, 1}, {0, 2}, {0, 3}}));  // claw + isolated
    subjects.push_back(boxkit::new_graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}));
    std::mt19937_64 rng(99);
    for (int t = 0; t < 30; ++t) subjects.push_back(oracle::random_graph(5, 300 + 60 * (t % 8), rng));

    for (const Graph& g : subjects) {
        if (boxkit::non_edges(g).size() > 12) continue;
        CompletionCatalog cat = boxkit::interval_completions(g);
        std::set<std::uint64_t> got(cat.excluded_masks.begin(), cat.excluded_masks.end());
        REQUIRE(got.size() == cat.excluded_masks.size());
        REQUIRE(got == brute_maximal_excluded(g));
    }
}

TEST_CASE("non-edge guards") {
    Graph c4 = boxkit::generate("cycle", {4});
    REQUIRE_THROWS_WITH(boxkit::interval_completions(c4, 1),
                        Catch::Matchers::ContainsSubstring("non-edge guard exceeded: 2"));
    Graph empty8 = boxkit::new_graph(8, {});
    REQUIRE_THROWS_WITH(boxkit::interval_completions(empty8, 30),
                        Catch::Matchers::ContainsSubstring("at most 25 non-edges (got 28)"));
}

TEST_CASE("exact boxicity of named graphs") {
    for (int n = 1; n <= 4; ++n)
        REQUIRE(boxkit::boxicity_exact(boxkit::generate("complete", {n})) == 0);
    REQUIRE(boxkit::boxicity_exact(boxkit::generate("path", {2})) == 0);  // P2 = K2 is complete
    for (int n = 3; n <= 4; ++n)
        REQUIRE(boxkit::boxicity_exact(boxkit::generate("path", {n})) == 1);
    REQUIRE(boxkit::boxicity_exact(boxkit::new_graph(4, {{0, 1}, {0, 2}, {0, 3}})) == 1);
    REQUIRE(boxkit::boxicity_exact(boxkit::generate("crown", {2})) == 1);  // two disjoint edges
    REQUIRE(boxkit::boxicity_exact(boxkit::generate("cycle", {4})) == 2);
    REQUIRE(boxkit::boxicity_exact(boxkit::generate("cycle", {5})) == 2);
    REQUIRE(boxkit::boxicity_exact(boxkit::generate("cycle", {7})) == 2);
    REQUIRE(boxkit::boxicity_exact(boxkit::generate("crown", {3})) == 2);
    REQUIRE(boxkit::boxicity_exact(boxkit::generate("complete_multipartite", {2, 2, 2})) == 3);
}

TEST_CASE("boxicity characterizations at the bottom of the scale") {
    // box = 0 iff complete; box <= 1 iff interval
    for (int n = 1; n <= 4; ++n) {
        std::uint64_t masks = 1ull << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            Graph g = oracle::mask_graph(n, mask);
            int box = boxkit::boxicity_exact(g);
            INFO("n=" << n << " mask=" << mask);
            REQUIRE((box == 0) == g.is_complete());
            REQUIRE((box <= 1) == boxkit::is_interval(g));
        }
    }
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        int n = 5 + t % 2;
        Graph g = oracle::random_graph(n, 550 + 50 * (t % 6), rng);
        if (boxkit::non_edges(g).size() > 12) continue;
        int box = boxkit::boxicity_exact(g);
        REQUIRE((box == 0) == g.is_complete());
        REQUIRE((box <= 1) == boxkit::is_interval(g));
    }
}

TEST_CASE("bounded cover requests fail loudly") {
    Graph c4 = boxkit::generate("cycle", {4});
    REQUIRE(boxkit::boxicity_exact(c4, 2) == 2);
    REQUIRE_THROWS_WITH(boxkit::boxicity_exact(c4, 1),
                        Catch::Matchers::ContainsSubstring("exact cover needs 2"));
}

TEST_CASE("crown search rejects bad parameters") {
    REQUIRE_THROWS_AS(boxkit::crown_search(1, 10, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(boxkit::crown_search(8, 10, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(boxkit::crown_search(3, -1, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(boxkit::crown_search(3, 10, 1, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(boxkit::crown_search_exhaustive(6), std::invalid_argument);
    REQUIRE_THROWS_AS(boxkit::crown_search_exhaustive(1), std::invalid_argument);
    REQUIRE_THROWS_AS(boxkit::crown_search_exhaustive(3, 0), std::invalid_argument);
}

TEST_CASE("crown search is deterministic across thread counts and reruns") {
    CrownSearchReport a = boxkit::crown_search(4, 60, 12345, 1);
    CrownSearchReport b = boxkit::crown_search(4, 60, 12345, 4);
    CrownSearchReport c = boxkit::crown_search(4, 60, 12345, 3);
    REQUIRE(reports_equal(a, b));
    REQUIRE(reports_equal(a, c));
    CrownSearchReport d = boxkit::crown_search(4, 60, 54321, 1);
    REQUIRE(d.seed == 54321);

    CrownSearchReport e1 = boxkit::crown_search(5, 40, 9, 1);
    CrownSearchReport e2 = boxkit::crown_search(5, 40, 9, 4);
    REQUIRE(reports_equal(e1, e2));
}

TEST_CASE("two disjoint edges admit a two-cover immediately") {
    CrownSearchReport rep = boxkit::crown_search(2, 50, 1);
    REQUIRE(rep.side == 2);
    REQUIRE(rep.non_edge_count == 4);
    REQUIRE(rep.found_cover);
    REQUIRE(rep.trials == 1);
    REQUIRE(rep.best_coverage == 4);
    check_cover_certificate(rep);
}

TEST_CASE("the six-cycle crown admits a two-cover") {
    CrownSearchReport rep = boxkit::crown_search(3, 1000, 1);
    REQUIRE(rep.found_cover);
    REQUIRE(rep.best_coverage == rep.non_edge_count);
    check_cover_certificate(rep);
}

TEST_CASE("randomized search reports honest partial coverage") {
    CrownSearchReport rep = boxkit::crown_search(5, 200, 1, 2);
    REQUIRE(rep.side == 5);
    REQUIRE(rep.non_edge_count == 25);  // 2*C(5,2) within the sides plus the 5 removed pairs
    if (rep.found_cover) {
        check_cover_certificate(rep);
    } else {
        REQUIRE(rep.trials == 200);
        REQUIRE(rep.best_coverage < 25);
        REQUIRE(rep.best_coverage > 0);
        REQUIRE(rep.best_trial >= 1);
        auto ne = boxkit::non_edges(boxkit::generate("crown", {5}));
        REQUIRE(std::find(ne.begin(), ne.end(), rep.uncovered_example) != ne.end());
        REQUIRE_FALSE(rep.proven_exceeds_two);  // sampling proves nothing
    }
}

TEST_CASE("exhaustive crown decision is deterministic and self-consistent") {
    CrownSearchReport a = boxkit::crown_search_exhaustive(3, 1);
    CrownSearchReport b = boxkit::crown_search_exhaustive(3, 4);
    REQUIRE(reports_equal(a, b));
    REQUIRE(a.exhaustive);
    REQUIRE(a.found_cover);  // box(C6) = 2, so a disjoint completion pair exists
    REQUIRE(a.best_coverage == 9);
    check_cover_certificate(a);

    CrownSearchReport e2 = boxkit::crown_search_exhaustive(2);
    REQUIRE(e2.found_cover);
    REQUIRE(e2.cover_added_first.empty());
    REQUIRE(e2.cover_added_second.empty());

    CrownSearchReport q = boxkit::crown_search_exhaustive(4, 2);
    CrownSearchReport q2 = boxkit::crown_search_exhaustive(4, 3);
    REQUIRE(reports_equal(q, q2));
    if (q.found_cover) {
        check_cover_certificate(q);
        REQUIRE(q.best_coverage == q.non_edge_count);
    } else {
        REQUIRE(q.proven_exceeds_two);
        REQUIRE(q.best_coverage < q.non_edge_count);
        auto ne = boxkit::non_edges(boxkit::generate("crown", {4}));
        REQUIRE(std::find(ne.begin(), ne.end(), q.uncovered_example) != ne.end());
    }
}

TEST_CASE("exhaustive decision agrees with the exact boxicity oracle") {
    // crown(3) = C6 has 9 non-edges, within the oracle guard
    int box = boxkit::boxicity_exact(boxkit::generate("crown", {3}));
    CrownSearchReport rep = boxkit::crown_search_exhaustive(3);
    REQUIRE((box <= 2) == rep.found_cover);

    // crown(4) has 12 non-edges; cross-check the decision both ways
    int box4 = boxkit::boxicity_exact(boxkit::generate("crown", {4}));
    CrownSearchReport rep4 = boxkit::crown_search_exhaustive(4);
    REQUIRE((box4 <= 2) == rep4.found_cover);
}
