#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include <catch_amalgamated.hpp>

#include <boxkit/circulant.hpp>
#include <boxkit/coloring.hpp>
#include <boxkit/recognition.hpp>
#include <boxkit/split_witness.hpp>

using boxkit::Graph;

TEST_CASE("parameter validation") {
    REQUIRE_THROWS_WITH(boxkit::gen_circulant(3, 2),
                        Catch::Matchers::ContainsSubstring("a >= 2b >= 2"));
    REQUIRE_THROWS_AS(boxkit::gen_circulant(4, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(boxkit::gen_circulant(1, 1), std::invalid_argument);
    auto p = boxkit::circulant_params(7, 2);
    REQUIRE(p.a == 7);
    REQUIRE(p.b == 2);
    REQUIRE(p.n == 3);
    REQUIRE(p.r == 1);
}

TEST_CASE("adjacency rule: difference ranges over {b..a-b} mod a") {
    Graph g = boxkit::gen_circulant(6, 2);
    std::vector<std::pair<int, int>> want{{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4},
                                          {1, 5}, {2, 4}, {2, 5}, {3, 5}};
    REQUIRE(g.edges() == want);

    for (int a : {4, 5, 6, 9}) REQUIRE(boxkit::gen_circulant(a, 1).is_complete());

    for (int b : {2, 3}) {
        Graph m = boxkit::gen_circulant(2 * b, b);  // perfect matching
        REQUIRE(m.edge_count() == std::size_t(b));
        for (int v = 0; v < 2 * b; ++v) REQUIRE(m.degree(v) == 1);
    }

    // each vertex sees exactly the a-2b+1 difference values
    for (int b = 1; b <= 5; ++b)
        for (int a = 2 * b; a <= 2 * b + 6; ++a) {
            Graph h = boxkit::gen_circulant(a, b);
            for (int v = 0; v < a; ++v) REQUIRE(h.degree(v) == a - 2 * b + 1);
            // arithmetic form of the neighborhood
            for (int v = 0; v < a; ++v) {
                std::set<int> want_nb;
                for (int d = b; d <= a - b; ++d) want_nb.insert((v + d) % a);
                std::vector<int> got = h.neighbor_list(v);
                REQUIRE(std::set<int>(got.begin(), got.end()) == want_nb);
            }
        }
}

TEST_CASE("order-2b+1 instances are cycles") {
    for (int b = 2; b <= 6; ++b)
        REQUIRE(boxkit::is_cycle_graph(boxkit::gen_circulant(2 * b + 1, b)));
}

TEST_CASE("divisible-order coloring") {
    REQUIRE_THROWS_AS(boxkit::coloring_41(1, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(boxkit::coloring_41(2, 0), std::invalid_argument);
    for (int n = 2; n <= 5; ++n)
        for (int b = 1; b <= 5; ++b) {
            Graph g = boxkit::gen_circulant(n * b, b);
            boxkit::ColorClasses cc = boxkit::coloring_41(n, b);
            REQUIRE(cc.color_count() == n);
            for (const auto& cls : cc.classes) REQUIRE(cls.size() == std::size_t(b));
            REQUIRE(boxkit::verify_coloring(g, cc));
        }
}

TEST_CASE("divisible-order witness: frozen instances") {
    boxkit::WitnessFamily w32 = boxkit::witness_41(3, 2);
    REQUIRE(w32.coloring.classes ==
            std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}});
    REQUIRE(w32.pivots == std::vector<int>{1, 1, 1});
    REQUIRE(w32.x_sets ==
            std::vector<std::vector<std::vector<int>>>{{{2, 3, 4}, {3, 4, 5}},
                                                       {{0, 4, 5}, {0, 1, 5}},
                                                       {{0, 1, 2}, {1, 2, 3}}});

    boxkit::WitnessFamily w23 = boxkit::witness_41(2, 3);
    REQUIRE(w23.coloring.classes == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});
    REQUIRE(w23.pivots == std::vector<int>{2, 2});
    REQUIRE(w23.x_sets ==
            std::vector<std::vector<std::vector<int>>>{{{3, 4}, {4}, {4, 5}},
                                                       {{0, 1}, {1}, {1, 2}}});

    boxkit::WitnessFamily w22 = boxkit::witness_41(2, 2);
    REQUIRE(w22.x_sets ==
            std::vector<std::vector<std::vector<int>>>{{{2}, {3}}, {{0}, {1}}});
}

TEST_CASE("divisible-order witness validates across the grid") {
    for (int n = 2; n <= 5; ++n)
        for (int b = 1; b <= 5; ++b) {
            Graph g = boxkit::gen_circulant(n * b, b);
            boxkit::WitnessFamily w = boxkit::witness_41(n, b);
            INFO("n=" << n << " b=" << b);
            REQUIRE(boxkit::validate_witness(g, w).ok());
        }
}

TEST_CASE("remainder-order coloring") {
    REQUIRE_THROWS_AS(boxkit::coloring_42(2, 3, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(boxkit::coloring_42(2, 3, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(boxkit::coloring_42(1, 3, 1), std::invalid_argument);
    REQUIRE_THROWS_WITH(boxkit::coloring_42(2, 5, 1),
                        Catch::Matchers::ContainsSubstring("n >= b - r - 1"));

    // k = n-b+r+1 classes of size b, the rest of size b-1, n+1 classes total
    boxkit::ColorClasses c231 = boxkit::coloring_42(2, 3, 1);
    REQUIRE(c231.classes == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}, {5, 6}});

    // k = 0: every class has size b-1
    boxkit::ColorClasses c241 = boxkit::coloring_42(2, 4, 1);
    REQUIRE(c241.color_count() == 3);
    for (const auto& cls : c241.classes) REQUIRE(cls.size() == 3);
    REQUIRE(boxkit::verify_coloring(boxkit::gen_circulant(9, 4), c241));

    for (int n = 2; n <= 5; ++n)
        for (int b = 2; b <= 5; ++b)
            for (int r = 1; r < b; ++r) {
                if (n < b - r - 1 || n * b + r > 25) continue;
                Graph g = boxkit::gen_circulant(n * b + r, b);
                boxkit::ColorClasses cc = boxkit::coloring_42(n, b, r);
                INFO("n=" << n << " b=" << b << " r=" << r);
                REQUIRE(cc.color_count() == n + 1);
                REQUIRE(boxkit::verify_coloring(g, cc));
            }
}

TEST_CASE("remainder-order witness: frozen instance and grid validation") {
    boxkit::WitnessFamily w = boxkit::witness_42(2, 3, 1);
    REQUIRE(w.coloring.classes == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}, {5, 6}});
    REQUIRE(w.x_sets ==
            std::vector<std::vector<std::vector<int>>>{{{3, 4, 5}, {4, 5}, {4, 5, 6}},
                                                       {{0, 6}, {0, 1}},
                                                       {{1, 2}, {2, 3}}});

    for (int n = 2; n <= 5; ++n)
        for (int b = 2; b <= 5; ++b)
            for (int r = 1; r < b; ++r) {
                if (n < b - r - 1 || n * b + r > 25) continue;
                Graph g = boxkit::gen_circulant(n * b + r, b);
                boxkit::WitnessFamily wf = boxkit::witness_42(n, b, r);
                INFO("n=" << n << " b=" << b << " r=" << r);
                REQUIRE(boxkit::validate_witness(g, wf).ok());
            }
}

TEST_CASE("chromatic numbers of both families") {
    REQUIRE(boxkit::chromatic_number(boxkit::gen_circulant(6, 2)).value == 3);
    REQUIRE(boxkit::chromatic_number(boxkit::gen_circulant(7, 2)).value == 4);
    REQUIRE(boxkit::chromatic_number(boxkit::gen_circulant(9, 3)).value == 3);
    REQUIRE(boxkit::chromatic_number(boxkit::gen_circulant(10, 3)).value == 4);
}

TEST_CASE("independence number equals the span parameter") {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{6, 2}, {7, 2}, {9, 3}, {11, 4}, {20, 5}})
        REQUIRE(boxkit::independence_number(boxkit::gen_circulant(a, b)) == b);
}

TEST_CASE("asteroidal witness triple") {
    REQUIRE_THROWS_WITH(boxkit::at_witness(8, 3),
                        Catch::Matchers::ContainsSubstring("a >= 3b and b >= 3"));
    REQUIRE_THROWS_AS(boxkit::at_witness(6, 2), std::invalid_argument);

    boxkit::ATriple t9 = boxkit::at_witness(9, 3);
    REQUIRE(t9.u == 1);
    REQUIRE(t9.v == 2);
    REQUIRE(t9.w == 3);

    boxkit::ATriple t12 = boxkit::at_witness(12, 4);
    REQUIRE(t12.u == 1);
    REQUIRE(t12.v == 2);
    REQUIRE(t12.w == 4);

    for (int b : {3, 4, 5})
        for (int a = 3 * b; a <= 3 * b + 3; ++a) {
            Graph g = boxkit::gen_circulant(a, b);
            boxkit::ATriple t = boxkit::at_witness(a, b);
            INFO("a=" << a << " b=" << b);
            REQUIRE(t.u == 1);
            REQUIRE(t.v == (b + 1) / 2);
            REQUIRE(t.w == b);
            auto check_path = [&](const std::vector<int>& path, int s, int e, int avoid) {
                REQUIRE(path.front() == s);
                REQUIRE(path.back() == e);
                for (std::size_t i = 0; i + 1 < path.size(); ++i)
                    REQUIRE(g.has_edge(path[i], path[i + 1]));
                for (int v : path) {
                    REQUIRE(v != avoid);
                    REQUIRE_FALSE(g.has_edge(v, avoid));
                }
            };
            check_path(t.path_uv, t.u, t.v, t.w);
            check_path(t.path_vw, t.v, t.w, t.u);
            check_path(t.path_wu, t.w, t.u, t.v);
        }
}
