#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bm/graph.hpp"

namespace bm {

// Visits every vertex subset of size <= k dominating g, in ascending
// lexicographic order of the sorted subsets; returns the visit count.
std::uint64_t enumerate_dominating_sets(const Graph& g, int k,
                                        const std::function<void(const std::vector<int>&)>& visitor);

struct DomsetResult {
    enum class Status { yes, no, no_domset };
    Status status = Status::no;
    std::optional<Certificate> certificate;
};

// Decision via one dominating set D of size <= k: every bipartition of D with
// both sides inducing maximum degree <= 1 is combined with every choice of at
// most one outside matching partner per D-vertex; all remaining vertices are
// then forced opposite to their D-side and the completed coloring is checked.
// Any valid coloring restricts to such a triple, so a single dominating set
// suffices for completeness.
DomsetResult solve_domset(const Graph& g, int k);

// P5-free graphs: domination number of each component is at most 4 unless the
// component is already a NO (it then contains a K5), so a no-domset signal
// maps to NO.
std::optional<Certificate> solve_p5_free(const Graph& g);

struct TriangleOnlyResult {
    enum class Status { yes, no, promise_violation };
    Status status = Status::no;
    std::optional<Certificate> certificate;
};

// Allowed bipartizing matching for graphs whose odd cycles are all triangles:
// leaf blocks of the block-cut tree are solved locally (bipartite, K4, or a
// book of triangles on one shared edge) and peeled; when a leaf block must
// match its cut vertex, the cut vertex's remaining edges become forbidden.
// A block outside those shapes is a class-promise violation.
TriangleOnlyResult solve_triangle_only(const Instance& inst);

}  // namespace bm
