#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bm/graph.hpp"

namespace bm {

// Forbidden-substructure witnesses. A witness is a NO-certificate: the listed
// vertices contain the claimed structure as a subgraph, and no graph with such
// a structure has a bipartizing matching.
enum class WitnessKind {
    K5,
    wheel,                             // vertices = [hub, cycle...], k = cycle length
    odd_pool,                          // vertices = [p_1..p_k, b_1..b_k], k odd
    double_diamond,                    // unused by detectors; kept for CLI input
    two_disjoint_P3_in_neighborhood,   // vertices = [v, a1,b1,c1, a2,b2,c2]
};

const char* to_string(WitnessKind k);

struct Witness {
    WitnessKind kind;
    std::vector<int> vertices;
    std::optional<int> k;
};

// Re-verifies a witness edge by edge, independently of the detectors.
bool witness_verifies(const Graph& g, const Witness& w);

// 5-clique search over common-neighborhood intersections.
std::optional<Witness> find_K5(const Graph& g);

// Hub plus a k-cycle subgraph in its neighborhood, 4 <= k <= min(kmax, 6).
// Larger wheels always contain two disjoint P3 in the hub neighborhood, so the
// search stops at 6 and defers to find_two_disjoint_P3.
std::optional<Witness> find_wheel(const Graph& g, int kmax);

// A vertex v and two vertex-disjoint 3-vertex paths inside G[N(v)].
std::optional<Witness> find_two_disjoint_P3(const Graph& g);

// Guided backtracking for an odd k-pool subgraph, odd 3 <= k <= kmax. The
// search is exponential in the worst case; it charges one unit per backtrack
// node and reports budget exhaustion distinctly from absence.
struct PoolSearchResult {
    enum class Status { found, absent, budget_exhausted };
    Status status = Status::absent;
    std::optional<Witness> witness;
};

inline constexpr std::uint64_t kDefaultPoolBudget = 1'000'000;

PoolSearchResult find_odd_pool(const Graph& g, int kmax,
                               std::uint64_t budget = kDefaultPoolBudget);

// Class checks gating the polynomial algorithms.
enum class TriState { yes, no, unknown };

// Decides whether every odd cycle of g is a triangle, for any size, via the
// block classification: each biconnected block must be bipartite, a K4, or a
// set of triangles sharing one edge.
TriState all_odd_cycles_are_triangles(const Graph& g);

// No induced path on five vertices; brute enumeration with pruning.
bool is_P5_free(const Graph& g);

// Non-bipartite block shapes used both by the class check above and by the
// triangle-only solver.
struct BlockShape {
    enum class Kind { bipartite, k4, book, other } kind = Kind::other;
    // For books: the shared edge {u, v} and the pages (each adjacent to both
    // ends of the shared edge). A triangle is a 1-page book, a diamond a
    // 2-page book.
    int spine_u = -1, spine_v = -1;
    std::vector<int> pages;
};

// Classifies an arbitrary graph known to be 2-connected (a block); vertices
// are ids of the host graph, `verts` lists them.
BlockShape classify_block(const Graph& host, const std::vector<int>& verts);

}  // namespace bm
