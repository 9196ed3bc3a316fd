#include "bm/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <istream>
#include <queue>
#include <sstream>

namespace bm {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::invalid_argument("parallel edge");
    }
    g.m_ = static_cast<int>(edges.size());
    if (n <= 1024 && n > 0) {
        const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
        g.bits_.assign(n, std::vector<std::uint64_t>(words, 0));
        for (int u = 0; u < n; ++u)
            for (int v : g.adj_[u]) g.bits_[u][static_cast<std::size_t>(v) >> 6] |= 1ull << (v & 63);
    }
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (!bits_.empty()) return bit(u, v);
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::common_neighbor_count(int u, int v) const {
    if (!bits_.empty()) {
        int cnt = 0;
        for (std::size_t w = 0; w < bits_[u].size(); ++w)
            cnt += std::popcount(bits_[u][w] & bits_[v][w]);
        return cnt;
    }
    return static_cast<int>(common_neighbors(u, v).size());
}

std::vector<int> Graph::common_neighbors(int u, int v) const {
    std::vector<int> out;
    std::set_intersection(adj_[u].begin(), adj_[u].end(), adj_[v].begin(), adj_[v].end(),
                          std::back_inserter(out));
    return out;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<int> pos(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (int u : keep)
        for (int v : adj_[u])
            if (u < v && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
    return from_edges(static_cast<int>(keep.size()), es);
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n_, 0);
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Instance::is_forbidden(int u, int v) const {
    return std::binary_search(forbidden.begin(), forbidden.end(), make_edge(u, v));
}

Instance make_instance(Graph g, std::vector<Edge> forbidden) {
    for (auto& e : forbidden) e = make_edge(e.first, e.second);
    std::sort(forbidden.begin(), forbidden.end());
    forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
    for (auto [u, v] : forbidden)
        if (!g.has_edge(u, v)) throw std::invalid_argument("forbidden pair is not an edge");
    return Instance{std::move(g), std::move(forbidden)};
}

Certificate certificate_from_coloring(const Graph& g, std::vector<int> coloring) {
    Certificate cert;
    cert.coloring = std::move(coloring);
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && cert.coloring[u] == cert.coloring[v]) cert.matching.emplace_back(u, v);
    return cert;
}

const char* to_string(VerifyResult r) {
    switch (r) {
        case VerifyResult::ok: return "ok";
        case VerifyResult::degree_violation: return "degree-violation";
        case VerifyResult::matching_violation: return "matching-violation";
        case VerifyResult::forbidden_edge_used: return "forbidden-edge-used";
        case VerifyResult::matching_mismatch: return "matching-mismatch";
    }
    return "?";
}

VerifyResult verify_certificate(const Instance& inst, const Certificate& cert, int d) {
    const Graph& g = inst.graph;
    const int n = g.num_vertices();
    if (static_cast<int>(cert.coloring.size()) != n) return VerifyResult::matching_violation;
    for (int c : cert.coloring)
        if (c != 0 && c != 1) return VerifyResult::matching_violation;

    std::vector<Edge> mono;
    for (int u = 0; u < n; ++u) {
        int same = 0;
        for (int v : g.neighbors(u)) {
            if (cert.coloring[u] == cert.coloring[v]) {
                ++same;
                if (u < v) mono.emplace_back(u, v);
            }
        }
        if (same > d) return VerifyResult::degree_violation;
    }

    if (d == 1) {
        for (const auto& e : mono)
            if (inst.is_forbidden(e.first, e.second)) return VerifyResult::forbidden_edge_used;
    } else {
        if (!cert.matching.empty()) return VerifyResult::matching_violation;
        if (!inst.forbidden.empty()) return VerifyResult::forbidden_edge_used;
        return VerifyResult::ok;
    }

    // cert.matching must be a matching over graph edges and equal mono exactly.
    std::vector<Edge> claimed = cert.matching;
    for (auto& e : claimed) e = make_edge(e.first, e.second);
    std::sort(claimed.begin(), claimed.end());
    std::vector<char> used(n, 0);
    for (auto [u, v] : claimed) {
        if (u < 0 || v < 0 || u >= n || v >= n || !g.has_edge(u, v))
            return VerifyResult::matching_violation;
        if (used[u] || used[v]) return VerifyResult::matching_violation;
        used[u] = used[v] = 1;
    }
    if (claimed != mono) return VerifyResult::matching_mismatch;
    return VerifyResult::ok;
}

std::optional<std::vector<int>> is_bipartite(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> color(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool BlockTree::is_cut_vertex(int v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

BlockTree block_cut_tree(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    auto pop_block = [&](const Edge& until) {
        std::vector<int> verts;
        for (;;) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(e.first);
            verts.push_back(e.second);
            if (e == until) break;
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        blocks.push_back(std::move(verts));
    };

    // Iterative Tarjan lowlink; recursion would overflow on long paths.
    struct Frame {
        int v, parent;
        std::size_t next = 0;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        int root_children = 0;
        std::vector<Frame> stack;
        stack.push_back({root, -1});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < g.neighbors(f.v).size()) {
                int w = g.neighbors(f.v)[f.next++];
                if (w == f.parent) continue;
                if (disc[w] < 0) {
                    if (f.v == root) ++root_children;
                    edge_stack.push_back(make_edge(f.v, w));
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(make_edge(f.v, w));
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, parent = f.parent;
                stack.pop_back();
                if (parent >= 0) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] >= disc[parent]) {
                        pop_block(make_edge(parent, v));
                        is_cut[parent] = 1;
                    }
                }
            }
        }
        if (root_children <= 1) is_cut[root] = 0;
    }

    BlockTree t;
    t.blocks = std::move(blocks);
    std::sort(t.blocks.begin(), t.blocks.end());
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) t.cut_vertices.push_back(v);
    t.block_cuts.resize(t.blocks.size());
    for (std::size_t b = 0; b < t.blocks.size(); ++b)
        for (int v : t.blocks[b])
            if (is_cut[v]) t.block_cuts[b].push_back(v);
    return t;
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

int parse_vertex(const std::string& tok, int n, int line) {
    std::size_t pos = 0;
    int v;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "malformed vertex id '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(line, "malformed vertex id '" + tok + "'");
    if (v < 1 || v > n) throw ParseError(line, "vertex id " + tok + " out of range 1.." + std::to_string(n));
    return v - 1;
}

}  // namespace

Instance parse_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    std::vector<Edge> forb;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError(lineno, "duplicate problem line");
            if (toks.size() != 4 || toks[1] != "bm")
                throw ParseError(lineno, "malformed problem line, expected 'p bm <n> <m>'");
            try {
                n = std::stoi(toks[2]);
                m = std::stoi(toks[3]);
            } catch (const std::exception&) {
                throw ParseError(lineno, "malformed problem line counts");
            }
            if (n < 0 || m < 0) throw ParseError(lineno, "negative counts in problem line");
        } else if (toks[0] == "e" || toks[0] == "f") {
            if (n < 0) throw ParseError(lineno, "edge before problem line");
            if (toks.size() != 3) throw ParseError(lineno, "malformed '" + toks[0] + "' line");
            int u = parse_vertex(toks[1], n, lineno);
            int v = parse_vertex(toks[2], n, lineno);
            if (u == v) throw ParseError(lineno, "self-loop at vertex " + toks[1]);
            Edge e = make_edge(u, v);
            if (toks[0] == "e") {
                if (std::find(edges.begin(), edges.end(), e) != edges.end())
                    throw ParseError(lineno, "duplicate edge " + toks[1] + " " + toks[2]);
                edges.push_back(e);
            } else {
                if (std::find(edges.begin(), edges.end(), e) == edges.end())
                    throw ParseError(lineno, "forbidden pair " + toks[1] + " " + toks[2] +
                                                 " is not a declared edge");
                forb.push_back(e);
            }
        } else {
            throw ParseError(lineno, "unknown line type '" + toks[0] + "'");
        }
    }
    if (n < 0) throw ParseError(lineno, "missing problem line");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(lineno, "edge count mismatch: header says " + std::to_string(m) +
                                     ", found " + std::to_string(edges.size()));
    return make_instance(Graph::from_edges(n, edges), std::move(forb));
}

Instance parse_instance_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_instance(ss);
}

std::string emit_instance(const Instance& inst) {
    std::ostringstream out;
    out << "p bm " << inst.graph.num_vertices() << ' ' << inst.graph.num_edges() << '\n';
    for (auto [u, v] : inst.graph.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    for (auto [u, v] : inst.forbidden) out << "f " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string instance_digest(const Instance& inst) {
    const std::string text = emit_instance(inst);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace bm
