#pragma once

#include <cstdint>
#include <optional>

#include "bm/exact.hpp"
#include "bm/structure.hpp"

namespace bm {

struct AutoResult {
    std::optional<Certificate> certificate;
    std::optional<Witness> witness;  // substructure NO-certificate, when one fired
    std::uint64_t nodes = 0;
};

// Default decision pipeline: forbidden-substructure detectors, then the
// neighborhood-diversity kernel, then exhaustive search on the kernel, then
// certificate lifting. For d != 1 the detectors and kernel do not apply and
// the exhaustive search runs directly.
AutoResult solve_auto(const Instance& inst, int d = 1,
                      std::uint64_t pool_budget = kDefaultPoolBudget);

}  // namespace bm
