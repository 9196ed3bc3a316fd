#pragma once

#include <optional>
#include <vector>

#include "bm/graph.hpp"

namespace bm {

// Neighborhood-equivalence partition: u ~ v iff N(u)\{v} = N(v)\{u}. Every
// class induces a clique or an independent set; singletons count as both.
struct NDPartition {
    enum class Kind { clique, independent, both };
    std::vector<std::vector<int>> types;  // members sorted; classes ordered by smallest member
    std::vector<Kind> kinds;

    int size() const { return static_cast<int>(types.size()); }
};

NDPartition nd_decompose(const Graph& g);

// One graph-changing kernelization step. Ids refer to the instance the step
// was applied to; old_of_new maps post-step ids back to pre-step ids.
struct KernelStep {
    int rule;                  // 4, 5, 6, or 7
    std::vector<int> removed;  // sorted pre-step ids
    int anchor = -1;           // rule 6: outside neighbor; rule 7: kept representative
    std::vector<Edge> added_forbidden;  // pre-step ids
    std::vector<int> old_of_new;
};

struct KernelTrace {
    std::vector<KernelStep> steps;
};

struct KernelResult {
    bool decided_no = false;
    int no_rule = 0;  // 1, 2, or 3 when decided_no
    Instance kernel;
    KernelTrace trace;
};

// Reduction rules, restarted from the first after every change:
//   1. a K5 answers NO
//   2. a clique type of size 3 with two outside neighbors answers NO
//   3. a triangle with all edges forbidden, or a K4 all of whose perfect
//      matchings meet the forbidden set, answers NO
//   4. clique types of size 4 (isolated K4 components by rule 1) are removed
//   5. isolated triangle types are removed
//   6. a triangle type with exactly one outside neighbor v is removed and all
//      remaining edges at v become forbidden
//   7. independent types of size >= 3 contract to their smallest member,
//      whose incident edges become forbidden
// The kernel has at most 2 * nd(input) vertices.
KernelResult kernelize(const Instance& inst);

// Mechanically re-applies a recorded trace; the result equals the kernel.
Instance replay_trace(const Instance& inst, const KernelTrace& trace);

// Extends a verifying kernel certificate to the input instance by undoing the
// trace back to front.
Certificate lift_certificate(const Instance& inst, const KernelTrace& trace,
                             const Certificate& kernel_cert);

}  // namespace bm
