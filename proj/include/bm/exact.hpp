#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "bm/graph.hpp"

namespace bm {

struct SolveStats {
    std::uint64_t nodes = 0;
};

// Complete backtracking decision procedure for (2,d)-coloring with forbidden
// monochromatic edges (d = 1 gives the allowed-bipartizing-matching problem).
// Absence of a result is a proof of NO: the search is exhaustive. Forbidden
// edges are only meaningful for d == 1 and rejected otherwise.
std::optional<Certificate> solve_exact(const Instance& inst, int d, SolveStats* stats = nullptr);

inline std::optional<Certificate> solve_abm(const Instance& inst, SolveStats* stats = nullptr) {
    return solve_exact(inst, 1, stats);
}

// Reference oracle: enumerates 2^n colorings in counting order (vertex v's
// color is bit v) and returns the first that verifies. Throws
// std::invalid_argument for n > 26.
std::optional<Certificate> solve_brute(const Instance& inst, int d);

// Visits every valid certificate exactly once modulo the global color swap
// (the smallest vertex of each connected component is colored 0) and returns
// the count. Visit order is deterministic.
std::uint64_t enumerate_all(const Instance& inst, int d,
                            const std::function<void(const Certificate&)>& visitor);

inline std::uint64_t count_solutions(const Instance& inst, int d) {
    return enumerate_all(inst, d, [](const Certificate&) {});
}

}  // namespace bm
