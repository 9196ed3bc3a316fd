#pragma once

#include <cstdint>
#include <vector>

#include "bm/formula.hpp"
#include "bm/graph.hpp"

namespace bm {

// All generators are deterministic in (parameters, seed).

Instance random_max_degree(int n, int max_degree, std::uint64_t seed);

inline Instance random_subcubic(int n, std::uint64_t seed) {
    return random_max_degree(n, 3, seed);
}

// Graph whose edges all touch the planted cover (so vc(G) <= cover size).
struct PlantedVc {
    Instance instance;
    std::vector<int> cover;
};
PlantedVc random_planted_vc(int n, int vc, std::uint64_t seed);

// Random cotree (union/join recursion); cographs are P4-free.
Instance random_cograph(int n, std::uint64_t seed);

// Random clique-tree construction; every added vertex is simplicial at
// insertion time.
Instance random_chordal(int n, std::uint64_t seed);

// Blocks drawn from {bridge, even cycle, triangle, K4, book} glued at cut
// vertices, so every odd cycle is a triangle. `forbidden_rate_percent` of the
// edges (deterministically per seed) land in the forbidden set.
Instance random_block_composed(int n, std::uint64_t seed, int forbidden_rate_percent = 0);

// Positive 3-CNF with distinct variables per clause.
Formula random_formula(int vars, int clauses, std::uint64_t seed);

// Occurrence-limited instance of the exactly-one-true problem (clause sizes
// 2-3, <= 2 positive and <= 1 negative occurrence per variable). May emit
// fewer clauses than asked once budgets run out.
Formula random_sat3_formula(int vars, int clauses, std::uint64_t seed);

}  // namespace bm
