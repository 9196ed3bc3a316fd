#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bm {

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph on vertex ids 0..n-1.
// Adjacency is kept as sorted neighbor lists; for n <= 1024 a bitset row per
// vertex is kept alongside for O(1) membership and fast common-neighborhood
// intersection. Instances are immutable once built.
class Graph {
public:
    Graph() = default;

    // edges may be in any order/orientation; throws std::invalid_argument on
    // self-loops, duplicates, or out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    bool has_edge(int u, int v) const;

    // All edges as normalized (u < v) pairs, lexicographically sorted.
    std::vector<Edge> edges() const;

    // Number of common neighbors of u and v.
    int common_neighbor_count(int u, int v) const;
    std::vector<int> common_neighbors(int u, int v) const;

    // Subgraph induced by `keep` (sorted ascending). Vertex i of the result is
    // keep[i]; the returned map is exactly `keep`.
    Graph induced(const std::vector<int>& keep) const;

    // Connected components, each sorted ascending, ordered by smallest member.
    std::vector<std::vector<int>> components() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<std::uint64_t>> bits_;  // empty when n_ > 1024

    bool bit(int u, int v) const {
        return (bits_[u][static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }
};

// A graph plus a set of forbidden edges (edges no matching may use).
struct Instance {
    Graph graph;
    std::vector<Edge> forbidden;  // normalized, sorted, each an edge of graph

    bool is_forbidden(int u, int v) const;
};

Instance make_instance(Graph g, std::vector<Edge> forbidden = {});

// 2-coloring plus the monochromatic edges it induces.
struct Certificate {
    std::vector<int> coloring;   // one entry per vertex, 0 or 1
    std::vector<Edge> matching;  // normalized, sorted

    bool operator==(const Certificate&) const = default;
};

// Builds the certificate whose matching is exactly the monochromatic edges of
// `coloring` (no validity check).
Certificate certificate_from_coloring(const Graph& g, std::vector<int> coloring);

enum class VerifyResult {
    ok,
    degree_violation,    // some vertex has > d same-colored neighbors
    matching_violation,  // cert.matching is not a matching over graph edges
    forbidden_edge_used,
    matching_mismatch,   // cert.matching differs from the monochromatic edges
};

const char* to_string(VerifyResult r);

// True certificate check, independent of any solver: every vertex has at most
// d neighbors of its own color; for d == 1 the monochromatic edges must avoid
// inst.forbidden; cert.matching must equal the monochromatic edge set exactly
// (and must be empty, with empty forbidden set, when d != 1).
VerifyResult verify_certificate(const Instance& inst, const Certificate& cert, int d);

inline bool verifies(const Instance& inst, const Certificate& cert, int d) {
    return verify_certificate(inst, cert, d) == VerifyResult::ok;
}

// Proper 2-coloring if g is bipartite. Deterministic: components are rooted at
// their smallest vertex id, the root gets color 0.
std::optional<std::vector<int>> is_bipartite(const Graph& g);

// Biconnected components. Every edge lies in exactly one block; bridges are
// 2-vertex blocks; isolated vertices belong to no block.
struct BlockTree {
    std::vector<std::vector<int>> blocks;  // vertex sets, sorted ascending
    std::vector<int> cut_vertices;         // sorted ascending
    std::vector<std::vector<int>> block_cuts;  // cut vertices per block

    bool is_cut_vertex(int v) const;
};

BlockTree block_cut_tree(const Graph& g);

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Edge-list format: 1-based ids in files, 0-based in memory.
//   c <comment>
//   p bm <n> <m>
//   e <u> <v>
//   f <u> <v>     (forbidden; must repeat an existing edge)
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
std::string emit_instance(const Instance& inst);

// Stable FNV-1a digest of the normalized instance, as fixed-width hex.
std::string instance_digest(const Instance& inst);

}  // namespace bm
