#pragma once

#include <map>
#include <string>
#include <vector>

#include "bm/formula.hpp"
#include "bm/graph.hpp"

namespace bm {

struct LabeledGadget {
    Graph graph;
    std::map<std::string, int> labels;

    int label(const std::string& name) const;
    bool has_label(const std::string& name) const { return labels.count(name) != 0; }
};

// The 7-vertex head: neck of degree 2, port h6 of degree 3, maximum degree 4,
// exactly one bipartizing matching, which matches both the neck and the port.
// In its unique 2-coloring the port takes the color opposite to the neck, so
// an edge from the port relays the neck's color outward. Labels: "neck",
// "h1".."h6", "port" (= h6).
LabeledGadget build_head();

// k-pool: internal cycle p1..pk plus borders b1..bk, bi adjacent to pi and
// p(i+1). 2k vertices, 3k edges. Labels "p1".."pk", "b1".."bk".
LabeledGadget build_pool(int k);

// Pool with the border bk (the one adjacent to p1 and pk) removed.
LabeledGadget build_pool_minus_border(int k);

// Clause gadget for clauses of 2 or 3 literals: a (2*size+1)-pool minus its
// last border, internal-cycle edges other than p1p2, p3p4 (and p5p6 for size
// 3) subdivided twice with a head on each subdivision vertex, and literal
// ports l(k,w)/l(k,b) hung with heads off consecutive borders. Enumerating
// its matchings yields exactly `size` color patterns over the port pairs,
// each making exactly one pair monochromatic. Labels: pool labels plus
// "l<k>w", "l<k>b".
LabeledGadget build_clause_gadget(int size);

// Variable gadget: a 7-pool minus border with p2p3, p3p4, p4p5, p6p7
// subdivided (heads on subdivision vertices), ports d(1,*), d(2,w), d(3,*) on
// the surviving borders, and an extra vertex d(2,b) carrying a head. The
// plain variant attaches d(2,b) straight to p4 (maximum degree 5); the
// modified variant relays it through the port of the head sitting on the
// subdivision vertex next to p4, keeping maximum degree 4. Exactly two color
// patterns exist over the d-pairs and d(3,*) always patterns opposite to
// d(1,*)/d(2,*). Labels: "d<k>w", "d<k>b" and pool labels.
LabeledGadget build_variable_gadget(bool modified);

// Full hardness construction: one clause gadget per clause, one modified
// variable gadget per variable, literal ports wired to variable ports
// (positive occurrences to d(1,*) then d(2,*), the negative one to d(3,*)).
// The graph is satisfiable-equivalent to exactly-one-true satisfiability of f
// and has maximum degree 4. Labels are prefixed "c<j>." and "x<i>.".
LabeledGadget build_reduction(const Formula& f);

}  // namespace bm
