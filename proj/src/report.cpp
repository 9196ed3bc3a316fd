#include "bm/report.hpp"

#include <sstream>

namespace bm {

using nlohmann::json;

json certificate_to_json(const Certificate& cert) {
    json j;
    j["coloring"] = cert.coloring;
    json m = json::array();
    for (auto [u, v] : cert.matching) m.push_back({u + 1, v + 1});
    j["matching"] = std::move(m);
    return j;
}

Certificate certificate_from_json(const json& j, int num_vertices) {
    Certificate cert;
    cert.coloring = j.at("coloring").get<std::vector<int>>();
    if (static_cast<int>(cert.coloring.size()) != num_vertices)
        throw std::invalid_argument("coloring length does not match the instance");
    for (const auto& pair : j.at("matching")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("matching entries must be pairs");
        cert.matching.push_back(make_edge(pair[0].get<int>() - 1, pair[1].get<int>() - 1));
    }
    std::sort(cert.matching.begin(), cert.matching.end());
    return cert;
}

json witness_to_json(const Witness& w) {
    json j;
    j["kind"] = to_string(w.kind);
    json verts = json::array();
    for (int v : w.vertices) verts.push_back(v + 1);
    j["vertices"] = std::move(verts);
    if (w.k) j["k"] = *w.k;
    return j;
}

json report_to_json(const RunReport& report) {
    json j;
    j["answer"] = report.answer;
    j["algorithm"] = report.algorithm;
    if (report.certificate) {
        j.update(certificate_to_json(*report.certificate));
    } else {
        j["coloring"] = json::array();
        j["matching"] = json::array();
    }
    if (report.no_witness) j["no_witness"] = witness_to_json(*report.no_witness);
    j["nodes_explored"] = report.nodes_explored;
    j["time_ms"] = report.time_ms;
    j["input_digest"] = report.input_digest;
    return j;
}

std::string export_dot(const Instance& inst) {
    std::ostringstream out;
    out << "graph bm {\n";
    for (int v = 0; v < inst.graph.num_vertices(); ++v) out << "  v" << v + 1 << ";\n";
    for (auto [u, v] : inst.graph.edges()) {
        out << "  v" << u + 1 << " -- v" << v + 1;
        if (inst.is_forbidden(u, v)) out << " [style=dashed, color=red]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace bm
