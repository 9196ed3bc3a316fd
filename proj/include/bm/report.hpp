#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "bm/graph.hpp"
#include "bm/structure.hpp"

namespace bm {

// Machine-readable outcome of one solver run. Vertex ids are 1-based in JSON.
struct RunReport {
    std::string answer;  // "yes" or "no"
    std::string algorithm;
    std::optional<Certificate> certificate;
    std::optional<Witness> no_witness;
    std::uint64_t nodes_explored = 0;
    double time_ms = 0.0;
    std::string input_digest;
};

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j, int num_vertices);

nlohmann::json witness_to_json(const Witness& w);

nlohmann::json report_to_json(const RunReport& report);

std::string export_dot(const Instance& inst);

}  // namespace bm
