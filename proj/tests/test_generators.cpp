#include <doctest.h>

#include "bm/generators.hpp"
#include "bm/structure.hpp"
#include "test_util.hpp"

using namespace bm;

TEST_CASE("generators are deterministic per seed") {
    CHECK(emit_instance(random_subcubic(20, 7)) == emit_instance(random_subcubic(20, 7)));
    CHECK(emit_instance(random_cograph(14, 9)) == emit_instance(random_cograph(14, 9)));
    CHECK(emit_instance(random_block_composed(18, 4, 30)) ==
          emit_instance(random_block_composed(18, 4, 30)));
    CHECK(emit_formula(random_sat3_formula(5, 4, 3)) == emit_formula(random_sat3_formula(5, 4, 3)));
    // different seeds actually vary
    CHECK(emit_instance(random_subcubic(20, 7)) != emit_instance(random_subcubic(20, 8)));
}

TEST_CASE("degree-capped generators respect the cap") {
    for (int iter = 0; iter < 50; ++iter) {
        CHECK(random_subcubic(30, 1000 + iter).graph.max_degree() <= 3);
        CHECK(random_max_degree(30, 5, 2000 + iter).graph.max_degree() <= 5);
    }
}

TEST_CASE("planted covers cover") {
    for (int iter = 0; iter < 50; ++iter) {
        auto planted = random_planted_vc(24, 6, 3000 + iter);
        std::vector<char> in_cover(24, 0);
        for (int v : planted.cover) in_cover[v] = 1;
        for (auto [u, v] : planted.instance.graph.edges()) CHECK((in_cover[u] || in_cover[v]));
    }
}

TEST_CASE("cographs are P5-free") {
    for (int iter = 0; iter < 50; ++iter)
        CHECK(is_P5_free(random_cograph(12, 4000 + iter).graph));
}

TEST_CASE("chordal construction has no long induced cycles") {
    // a perfect-elimination build cannot create an induced cycle >= 4; spot
    // check via the triangle-only classifier on triangle-free... instead,
    // verify simpliciality directly by replaying the insertion order is not
    // possible here, so check a weaker consequence: every cycle of length >= 4
    // has a chord, i.e. no induced C4/C5.
    for (int iter = 0; iter < 40; ++iter) {
        auto g = random_chordal(10, 6000 + iter).graph;
        const int n = g.num_vertices();
        // induced C4 or C5 search by brute force
        std::vector<int> cyc;
        bool found = false;
        auto rec = [&](auto&& self) -> void {
            if (found) return;
            std::size_t len = cyc.size();
            if (len >= 4 && g.has_edge(cyc.back(), cyc.front())) {
                bool induced = true;
                for (std::size_t i = 0; i < len && induced; ++i)
                    for (std::size_t j = i + 1; j < len && induced; ++j) {
                        bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
                        if (!consecutive && g.has_edge(cyc[i], cyc[j])) induced = false;
                    }
                if (induced) {
                    found = true;
                    return;
                }
            }
            if (len == 5) return;
            for (int v = cyc.front() + 1; v < n; ++v) {
                if (std::find(cyc.begin(), cyc.end(), v) != cyc.end()) continue;
                if (!g.has_edge(cyc.back(), v)) continue;
                cyc.push_back(v);
                self(self);
                cyc.pop_back();
            }
        };
        for (int s = 0; s < n && !found; ++s) {
            cyc.assign(1, s);
            rec(rec);
        }
        CHECK(!found);
    }
}

TEST_CASE("block-composed graphs stay in the triangle-only class") {
    for (int iter = 0; iter < 60; ++iter) {
        auto inst = random_block_composed(20, 7000 + iter, 25);
        CHECK(all_odd_cycles_are_triangles(inst.graph) == TriState::yes);
        for (auto [u, v] : inst.forbidden) CHECK(inst.graph.has_edge(u, v));
    }
}
