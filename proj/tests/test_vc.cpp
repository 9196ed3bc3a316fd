#include <doctest.h>

#include <random>

#include "bm/exact.hpp"
#include "bm/generators.hpp"
#include "bm/vc.hpp"
#include "test_util.hpp"

using namespace bm;
namespace tu = test_util;

TEST_CASE("find_vertex_cover") {
    auto c4 = tu::cycle(4);
    auto cover = find_vertex_cover(c4, 2);
    REQUIRE(cover.has_value());
    CHECK(cover->size() <= 2);
    for (auto [u, v] : c4.edges())
        CHECK((std::binary_search(cover->begin(), cover->end(), u) ||
               std::binary_search(cover->begin(), cover->end(), v)));

    CHECK(!find_vertex_cover(tu::complete(4), 2).has_value());
    CHECK(find_vertex_cover(tu::complete(4), 3).has_value());
}

TEST_CASE("solve_vc fixtures") {
    // P5 is bipartite: any split works with an empty matching.
    auto p5 = tu::path(5);
    auto cert = solve_vc(p5, {1, 3});
    REQUIRE(cert.has_value());
    CHECK(cert->matching.empty());
    CHECK(verifies(make_instance(p5), *cert, 1));

    auto k4 = tu::complete(4);
    auto pm = solve_vc(k4, {0, 1, 2});
    REQUIRE(pm.has_value());
    CHECK(pm->matching.size() == 2);
    CHECK(verifies(make_instance(k4), *pm, 1));

    auto w4 = tu::wheel(4);
    auto wcover = find_vertex_cover(w4, 3);
    REQUIRE(wcover.has_value());
    CHECK(!solve_vc(w4, *wcover).has_value());
}

TEST_CASE("solve_vc rejects non-covers") {
    CHECK_THROWS_AS((void)solve_vc(tu::cycle(4), {0}), std::invalid_argument);
}

TEST_CASE("solve_vc agrees with the exact solver on random planted covers") {
    for (int iter = 0; iter < 150; ++iter) {
        auto planted = random_planted_vc(12, 4, 9000 + iter);
        const auto& inst = planted.instance;
        VcStats stats;
        auto by_vc = solve_vc(inst.graph, planted.cover, &stats);
        auto by_exact = solve_exact(inst, 1);
        REQUIRE(by_vc.has_value() == by_exact.has_value());
        if (by_vc) CHECK(verifies(inst, *by_vc, 1));
        CHECK(stats.max_depth <= static_cast<int>(planted.cover.size()) + 1);
    }
}

TEST_CASE("solve_vc with computed covers matches brute on random graphs") {
    std::mt19937_64 rng(616);
    auto pairs = tu::pair_list(8);
    for (int iter = 0; iter < 120; ++iter) {
        auto g = tu::graph_from_mask(8, pairs, rng() & ((1ull << pairs.size()) - 1));
        std::optional<std::vector<int>> cover;
        for (int k = 0; k <= 8 && !cover; ++k) cover = find_vertex_cover(g, k);
        REQUIRE(cover.has_value());
        auto by_vc = solve_vc(g, *cover);
        auto by_brute = solve_brute(make_instance(g), 1);
        REQUIRE(by_vc.has_value() == by_brute.has_value());
        if (by_vc) CHECK(verifies(make_instance(g), *by_vc, 1));
    }
}

TEST_CASE("solve_vc with a full cover equals brute on small random graphs") {
    std::mt19937_64 rng(515);
    auto pairs = tu::pair_list(7);
    for (int iter = 0; iter < 150; ++iter) {
        auto g = tu::graph_from_mask(7, pairs, rng() & ((1ull << pairs.size()) - 1));
        std::vector<int> cover;  // every vertex: trivially a cover
        for (int v = 0; v < 7; ++v) cover.push_back(v);
        auto by_vc = solve_vc(g, cover);
        auto by_brute = solve_brute(make_instance(g), 1);
        REQUIRE(by_vc.has_value() == by_brute.has_value());
        if (by_vc) CHECK(verifies(make_instance(g), *by_vc, 1));
    }
}
