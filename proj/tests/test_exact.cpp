#include <doctest.h>

#include <random>

#include "bm/exact.hpp"
#include "test_util.hpp"

using namespace bm;
namespace tu = test_util;

TEST_CASE("solve_exact on the forbidden fixtures") {
    CHECK(!solve_exact(make_instance(tu::complete(5)), 1).has_value());
    CHECK(!solve_exact(make_instance(tu::wheel(4)), 1).has_value());
    CHECK(!solve_exact(make_instance(tu::pool(3)), 1).has_value());
    CHECK(!solve_exact(make_instance(tu::pool(5)), 1).has_value());
    CHECK(!solve_exact(make_instance(tu::pool(7)), 1).has_value());
    CHECK(!solve_exact(make_instance(tu::double_diamond()), 1).has_value());
}

TEST_CASE("solve_exact easy YES instances") {
    auto c5 = make_instance(tu::cycle(5));
    auto cert = solve_exact(c5, 1);
    REQUIRE(cert.has_value());
    CHECK(cert->matching.size() == 1);
    CHECK(verifies(c5, *cert, 1));

    auto k4 = make_instance(tu::complete(4));
    auto pm = solve_exact(k4, 1);
    REQUIRE(pm.has_value());
    CHECK(pm->matching.size() == 2);
    CHECK(verifies(k4, *pm, 1));
}

TEST_CASE("Petersen graph is (2,1)-colorable") {
    // Cubic, so the degree bound already promises YES; pin it via both paths.
    auto inst = make_instance(tu::petersen());
    auto brute = solve_brute(inst, 1);
    REQUIRE(brute.has_value());
    auto exact = solve_exact(inst, 1);
    REQUIRE(exact.has_value());
    CHECK(verifies(inst, *exact, 1));
}

TEST_CASE("solve_brute fixtures") {
    auto k4 = make_instance(tu::complete(4));
    auto pm = solve_brute(k4, 1);
    REQUIRE(pm.has_value());
    CHECK(pm->matching.size() == 2);

    // K4 with one edge of each perfect matching forbidden has no solution.
    auto blocked = make_instance(tu::complete(4), {{0, 1}, {0, 2}, {0, 3}});
    CHECK(!solve_brute(blocked, 1).has_value());
    CHECK(!solve_exact(blocked, 1).has_value());

    auto single = make_instance(Graph::from_edges(2, {{0, 1}}));
    auto cert = solve_brute(single, 1);
    REQUIRE(cert.has_value());
    CHECK(cert->matching == std::vector<Edge>{{0, 1}});

    CHECK_THROWS_AS((void)solve_brute(make_instance(Graph::from_edges(27, {})), 1),
                    std::invalid_argument);
}

TEST_CASE("forbidden edges require d = 1") {
    auto inst = make_instance(tu::complete(3), {{0, 1}});
    CHECK_THROWS_AS((void)solve_exact(inst, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)solve_brute(inst, 0), std::invalid_argument);
}

TEST_CASE("exact agrees with brute on all graphs up to 6 vertices (spot sizes)") {
    for (int n = 1; n <= 5; ++n) {
        auto pairs = tu::pair_list(n);
        for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
            auto inst = make_instance(tu::graph_from_mask(n, pairs, mask));
            for (int d = 0; d <= 2; ++d) {
                auto e = solve_exact(inst, d);
                auto b = solve_brute(inst, d);
                REQUIRE(e.has_value() == b.has_value());
                if (e) {
                    Certificate probe = *e;
                    if (d != 1) probe.matching.clear();
                    CHECK(verifies(inst, probe, d));
                }
            }
        }
    }
}

TEST_CASE("exact agrees with brute under random forbidden sets") {
    std::mt19937_64 rng(777);
    auto pairs = tu::pair_list(7);
    for (int iter = 0; iter < 400; ++iter) {
        auto g = tu::graph_from_mask(7, pairs, rng() & ((1ull << pairs.size()) - 1));
        auto es = g.edges();
        std::vector<Edge> forb;
        for (auto e : es)
            if (rng() % 3 == 0) forb.push_back(e);
        auto inst = make_instance(g, forb);
        auto e = solve_exact(inst, 1);
        auto b = solve_brute(inst, 1);
        REQUIRE(e.has_value() == b.has_value());
        if (e) CHECK(verifies(inst, *e, 1));
    }
}

TEST_CASE("d=0 reduces to bipartiteness and YES is monotone in d") {
    std::mt19937_64 rng(31337);
    auto pairs = tu::pair_list(8);
    for (int iter = 0; iter < 200; ++iter) {
        auto g = tu::graph_from_mask(8, pairs, rng() & ((1ull << pairs.size()) - 1));
        auto inst = make_instance(g);
        CHECK(solve_exact(inst, 0).has_value() == is_bipartite(g).has_value());
        for (int d = 0; d <= 2; ++d)
            if (solve_exact(inst, d)) CHECK(solve_exact(inst, d + 1).has_value());
    }
}

TEST_CASE("enumerate_all counts canonical solutions") {
    // Triangle: one solution per choice of the monochromatic edge.
    CHECK(count_solutions(make_instance(tu::complete(3)), 1) == 3);

    // C4 counts computed by the brute oracle: the proper 2-coloring plus the
    // two opposite-edge-pair matchings.
    auto c4 = make_instance(tu::cycle(4));
    std::uint64_t by_brute = 0;
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        if (mask & 1) continue;  // canonical: vertex 0 has color 0
        std::vector<int> col(4);
        for (int v = 0; v < 4; ++v) col[v] = (mask >> v) & 1;
        auto cert = certificate_from_coloring(c4.graph, col);
        if (verifies(c4, cert, 1)) ++by_brute;
    }
    CHECK(by_brute == 3);
    CHECK(count_solutions(c4, 1) == by_brute);

    // Visitor sees every certificate and each verifies.
    std::uint64_t seen = 0;
    enumerate_all(c4, 1, [&](const Certificate& cert) {
        CHECK(verifies(c4, cert, 1));
        CHECK(cert.coloring[0] == 0);
        ++seen;
    });
    CHECK(seen == 3);
}

TEST_CASE("enumerate_all canonicalizes per component") {
    // Two disjoint triangles: 3 x 3 canonical solutions.
    std::vector<Edge> es{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
    auto inst = make_instance(Graph::from_edges(6, es));
    CHECK(count_solutions(inst, 1) == 9);
}

TEST_CASE("enumeration count matches brute count on random instances") {
    std::mt19937_64 rng(2024);
    auto pairs = tu::pair_list(6);
    for (int iter = 0; iter < 300; ++iter) {
        auto g = tu::graph_from_mask(6, pairs, rng() & ((1ull << pairs.size()) - 1));
        std::vector<Edge> forb;
        for (auto e : g.edges())
            if (rng() % 4 == 0) forb.push_back(e);
        auto inst = make_instance(g, forb);

        // Oracle: scan all colorings, keep those canonical per component.
        auto comps = g.components();
        std::vector<int> roots;
        for (auto& c : comps) roots.push_back(c[0]);
        std::uint64_t expected = 0;
        for (std::uint32_t mask = 0; mask < (1u << 6); ++mask) {
            bool canonical = true;
            for (int r : roots)
                if ((mask >> r) & 1) canonical = false;
            if (!canonical) continue;
            std::vector<int> col(6);
            for (int v = 0; v < 6; ++v) col[v] = (mask >> v) & 1;
            if (verifies(inst, certificate_from_coloring(g, col), 1)) ++expected;
        }
        CHECK(count_solutions(inst, 1) == expected);
    }
}

TEST_CASE("empty and trivial instances") {
    auto empty = make_instance(Graph::from_edges(0, {}));
    auto cert = solve_exact(empty, 1);
    REQUIRE(cert.has_value());
    CHECK(cert->coloring.empty());
    CHECK(solve_brute(empty, 1).has_value());
    CHECK(count_solutions(empty, 1) == 1);

    auto isolated = make_instance(Graph::from_edges(3, {}));
    auto c3 = solve_exact(isolated, 0);
    REQUIRE(c3.has_value());
    CHECK(c3->coloring == std::vector<int>{0, 0, 0});
}
