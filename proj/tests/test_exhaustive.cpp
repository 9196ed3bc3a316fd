// Cross-validation of every solver against the brute oracle over all labeled
// graphs on up to five vertices (1024 graphs at n=5), with forbidden-edge
// draws where the solver supports them.

#include <doctest.h>

#include <random>

#include "bm/classpoly.hpp"
#include "bm/exact.hpp"
#include "bm/kernel.hpp"
#include "bm/pipeline.hpp"
#include "bm/structure.hpp"
#include "bm/vc.hpp"
#include "test_util.hpp"

using namespace bm;
namespace tu = test_util;

namespace {

template <typename Fn>
void for_all_graphs(int max_n, Fn&& fn) {
    for (int n = 1; n <= max_n; ++n) {
        auto pairs = tu::pair_list(n);
        for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask)
            fn(tu::graph_from_mask(n, pairs, mask));
    }
}

}  // namespace

TEST_CASE("all solvers agree with brute on every graph with n <= 5") {
    std::mt19937_64 rng(123321);
    for_all_graphs(5, [&](const Graph& g) {
        auto inst = make_instance(g);
        const bool expected = solve_brute(inst, 1).has_value();

        CHECK(solve_exact(inst, 1).has_value() == expected);
        CHECK(solve_auto(inst).certificate.has_value() == expected);

        std::vector<int> full_cover(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v) full_cover[v] = v;
        CHECK(solve_vc(g, full_cover).has_value() == expected);

        auto dom = solve_domset(g, 3);
        if (dom.status != DomsetResult::Status::no_domset)
            CHECK((dom.status == DomsetResult::Status::yes) == expected);

        if (all_odd_cycles_are_triangles(g) == TriState::yes) {
            auto tri = solve_triangle_only(inst);
            REQUIRE(tri.status != TriangleOnlyResult::Status::promise_violation);
            CHECK((tri.status == TriangleOnlyResult::Status::yes) == expected);
        }

        auto kr = kernelize(inst);
        if (kr.decided_no) {
            CHECK(!expected);
        } else {
            CHECK(solve_exact(kr.kernel, 1).has_value() == expected);
        }
    });
}

TEST_CASE("forbidden-edge solvers agree with brute on every graph with n <= 5") {
    std::mt19937_64 rng(456654);
    for_all_graphs(5, [&](const Graph& g) {
        auto es = g.edges();
        if (es.empty()) return;
        for (int draw = 0; draw < 2; ++draw) {
            std::vector<Edge> forb;
            for (auto e : es)
                if (rng() % 3 == 0) forb.push_back(e);
            auto inst = make_instance(g, forb);
            const bool expected = solve_brute(inst, 1).has_value();
            CHECK(solve_exact(inst, 1).has_value() == expected);
            CHECK(solve_auto(inst).certificate.has_value() == expected);
            if (all_odd_cycles_are_triangles(g) == TriState::yes) {
                auto tri = solve_triangle_only(inst);
                REQUIRE(tri.status != TriangleOnlyResult::Status::promise_violation);
                CHECK((tri.status == TriangleOnlyResult::Status::yes) == expected);
            }
            auto kr = kernelize(inst);
            if (kr.decided_no) CHECK(!expected);
            else CHECK(solve_exact(kr.kernel, 1).has_value() == expected);
        }
    });
}

TEST_CASE("solvers are deterministic") {
    std::mt19937_64 rng(987);
    auto pairs = tu::pair_list(8);
    for (int iter = 0; iter < 40; ++iter) {
        auto g = tu::graph_from_mask(8, pairs, rng() & ((1ull << pairs.size()) - 1));
        auto inst = make_instance(g);
        CHECK(solve_exact(inst, 1) == solve_exact(inst, 1));
        CHECK(solve_brute(inst, 1) == solve_brute(inst, 1));
        auto a = solve_auto(inst), b = solve_auto(inst);
        CHECK(a.certificate == b.certificate);
        auto dom1 = solve_domset(g, 3), dom2 = solve_domset(g, 3);
        CHECK(dom1.certificate == dom2.certificate);
    }
}
