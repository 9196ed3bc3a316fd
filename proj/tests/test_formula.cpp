#include <doctest.h>

#include "bm/formula.hpp"
#include "bm/generators.hpp"

using namespace bm;

TEST_CASE("brute_one_in_three basics") {
    CHECK(brute_one_in_three({3, {{1, 2, 3}}}));
    CHECK(brute_one_in_three({0, {}}));

    // (x1,x2,x3) and (-x1,-x2,-x3): exactly-one-true plus exactly-one-false
    // means exactly two true out of three as well, impossible
    Formula f{3, {{1, 2, 3}, {-1, -2, -3}}};
    bool expected = false;
    for (int mask = 0; mask < 8; ++mask) {
        auto val = [&](int v) { return (mask >> (v - 1)) & 1; };
        int t1 = val(1) + val(2) + val(3);
        int t2 = (1 - val(1)) + (1 - val(2)) + (1 - val(3));
        if (t1 == 1 && t2 == 1) expected = true;
    }
    CHECK(brute_one_in_three(f) == expected);

    CHECK_THROWS_AS((void)brute_one_in_three({25, {}}), std::invalid_argument);
}

TEST_CASE("transform_formula splits busy variables") {
    // variable 1 occurs three times: three fresh variables and three binders
    Formula f{3, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}};
    auto t = transform_formula(f);
    CHECK(t.num_vars == 3 + 3 + 3 + 3);  // every variable occurs 3 times here
    CHECK(t.clauses.size() == 3 + 9);
    CHECK(is_well_formed_sat3(t));

    // twice-occurring variables stay untouched
    Formula g{4, {{1, 2, 3}, {1, 2, 4}}};
    auto tg = transform_formula(g);
    CHECK(tg.num_vars == 4);
    CHECK(tg.clauses == g.clauses);
    CHECK(is_well_formed_sat3(tg));

    CHECK_THROWS_AS((void)transform_formula(Formula{2, {{1, -2, 1}}}), std::invalid_argument);
}

TEST_CASE("transform_formula preserves exactly-one-true satisfiability") {
    for (int iter = 0; iter < 200; ++iter) {
        auto f = random_formula(5, 5, 40000 + iter);
        auto t = transform_formula(f);
        CHECK(is_well_formed_sat3(t));
        CHECK(brute_one_in_three(f) == brute_one_in_three(t));
    }
}

TEST_CASE("well-formedness checks") {
    CHECK(is_well_formed_sat3({3, {{1, 2}, {2, 3, -1}}}));
    CHECK(!is_well_formed_sat3({3, {{1, 2, 3, 1}}}));     // size 4
    CHECK(!is_well_formed_sat3({3, {{1, 1, 2}}}));        // repeated variable
    CHECK(!is_well_formed_sat3({2, {{1, 2}, {1, 2}, {1, -2}, {2, -1}}}));  // var 1: 4 occurrences
    CHECK(!is_well_formed_sat3({2, {{-1, 2}, {-1, 2}}}));  // negative twice
}

TEST_CASE("formula parse/emit round trip") {
    Formula f{4, {{1, -2, 3}, {2, 4}}};
    auto again = parse_formula_text(emit_formula(f));
    CHECK(again == f);

    CHECK_THROWS_AS((void)parse_formula_text("p x13 2 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS((void)parse_formula_text("1 2 0\n"), ParseError);
    CHECK_THROWS_AS((void)parse_formula_text("p x13 1 1\n1 2 0\n"), ParseError);
}

TEST_CASE("random_sat3_formula is well-formed") {
    for (int iter = 0; iter < 100; ++iter) {
        auto f = random_sat3_formula(5, 4, 777000 + iter);
        CHECK(is_well_formed_sat3(f));
    }
}
