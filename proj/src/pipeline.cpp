#include "bm/pipeline.hpp"

#include "bm/kernel.hpp"

namespace bm {

AutoResult solve_auto(const Instance& inst, int d, std::uint64_t pool_budget) {
    AutoResult out;
    if (d != 1) {
        SolveStats stats;
        out.certificate = solve_exact(inst, d, &stats);
        out.nodes = stats.nodes;
        return out;
    }

    // Substructure witnesses rule out any bipartizing matching, with or
    // without forbidden edges.
    const Graph& g = inst.graph;
    if (auto w = find_K5(g)) {
        out.witness = std::move(w);
        return out;
    }
    if (auto w = find_wheel(g, 6)) {
        out.witness = std::move(w);
        return out;
    }
    if (auto w = find_two_disjoint_P3(g)) {
        out.witness = std::move(w);
        return out;
    }
    auto pool = find_odd_pool(g, 9, pool_budget);
    if (pool.status == PoolSearchResult::Status::found) {
        out.witness = std::move(pool.witness);
        return out;
    }

    auto kr = kernelize(inst);
    if (kr.decided_no) return out;
    SolveStats stats;
    auto kcert = solve_exact(kr.kernel, 1, &stats);
    out.nodes = stats.nodes;
    if (kcert) out.certificate = lift_certificate(inst, kr.trace, *kcert);
    return out;
}

}  // namespace bm
