#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bm/graph.hpp"

namespace bm {

// Standard 2^k edge-branching vertex cover; a cover of size <= k or absent.
std::optional<std::vector<int>> find_vertex_cover(const Graph& g, int k);

struct VcStats {
    std::uint64_t branch_nodes = 0;
    int max_depth = 0;  // Z-branch decisions along the deepest explored path
};

// Bounded search tree over bipartitions of the cover: for each split of the
// cover with both sides inducing maximum degree <= 1, outside vertices are
// forced where two same-side neighbors appear, the leftovers are classified
// by their (A,B) contact pattern, and the (1,1) vertices are branched two
// ways. Throws std::invalid_argument if `cover` is not a vertex cover.
std::optional<Certificate> solve_vc(const Graph& g, const std::vector<int>& cover,
                                    VcStats* stats = nullptr);

}  // namespace bm
