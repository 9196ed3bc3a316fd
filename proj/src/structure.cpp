#include "bm/structure.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace bm {

const char* to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::K5: return "K5";
        case WitnessKind::wheel: return "wheel";
        case WitnessKind::odd_pool: return "odd_pool";
        case WitnessKind::double_diamond: return "double_diamond";
        case WitnessKind::two_disjoint_P3_in_neighborhood: return "two_disjoint_P3";
    }
    return "?";
}

namespace {

bool all_distinct(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace

bool witness_verifies(const Graph& g, const Witness& w) {
    const auto& vs = w.vertices;
    for (int v : vs)
        if (v < 0 || v >= g.num_vertices()) return false;
    if (!all_distinct(vs)) return false;
    switch (w.kind) {
        case WitnessKind::K5: {
            if (vs.size() != 5) return false;
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = i + 1; j < 5; ++j)
                    if (!g.has_edge(vs[i], vs[j])) return false;
            return true;
        }
        case WitnessKind::wheel: {
            if (!w.k || *w.k < 4) return false;
            const int k = *w.k;
            if (vs.size() != static_cast<std::size_t>(k) + 1) return false;
            for (int i = 1; i <= k; ++i) {
                if (!g.has_edge(vs[0], vs[i])) return false;
                if (!g.has_edge(vs[i], vs[i % k + 1])) return false;
            }
            return true;
        }
        case WitnessKind::odd_pool: {
            if (!w.k || *w.k < 3 || *w.k % 2 == 0) return false;
            const int k = *w.k;
            if (vs.size() != static_cast<std::size_t>(2 * k)) return false;
            for (int i = 0; i < k; ++i) {
                int p = vs[i], pn = vs[(i + 1) % k], b = vs[k + i];
                if (!g.has_edge(p, pn)) return false;
                if (!g.has_edge(b, p) || !g.has_edge(b, pn)) return false;
            }
            return true;
        }
        case WitnessKind::double_diamond:
            return false;  // detectors emit the two-P3 form instead
        case WitnessKind::two_disjoint_P3_in_neighborhood: {
            if (vs.size() != 7) return false;
            int v = vs[0];
            for (std::size_t i = 1; i < 7; ++i)
                if (!g.has_edge(v, vs[i])) return false;
            return g.has_edge(vs[1], vs[2]) && g.has_edge(vs[2], vs[3]) &&
                   g.has_edge(vs[4], vs[5]) && g.has_edge(vs[5], vs[6]);
        }
    }
    return false;
}

std::optional<Witness> find_K5(const Graph& g) {
    const int n = g.num_vertices();
    for (int a = 0; a < n; ++a) {
        for (int b : g.neighbors(a)) {
            if (b <= a) continue;
            auto common = g.common_neighbors(a, b);
            for (std::size_t i = 0; i < common.size(); ++i) {
                for (std::size_t j = i + 1; j < common.size(); ++j) {
                    if (!g.has_edge(common[i], common[j])) continue;
                    for (std::size_t l = j + 1; l < common.size(); ++l) {
                        if (g.has_edge(common[i], common[l]) && g.has_edge(common[j], common[l]))
                            return Witness{WitnessKind::K5,
                                           {a, b, common[i], common[j], common[l]},
                                           std::nullopt};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

// Lexicographically first k-cycle subgraph with vertices in `allowed`.
// Canonical form: starts at its smallest vertex, second vertex smaller than
// the last (kills the reversed duplicate).
std::optional<std::vector<int>> find_cycle_subgraph(const Graph& g,
                                                    const std::vector<int>& allowed, int k) {
    std::vector<char> in_allowed(g.num_vertices(), 0);
    for (int v : allowed) in_allowed[v] = 1;
    std::vector<int> path;
    std::vector<char> used(g.num_vertices(), 0);

    std::function<bool()> extend = [&]() -> bool {
        if (static_cast<int>(path.size()) == k)
            return g.has_edge(path.back(), path.front()) && path[1] < path.back();
        for (int w : g.neighbors(path.back())) {
            if (!in_allowed[w] || used[w] || w <= path.front()) continue;
            path.push_back(w);
            used[w] = 1;
            if (extend()) return true;
            used[w] = 0;
            path.pop_back();
        }
        return false;
    };

    for (int s : allowed) {
        path.assign(1, s);
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        if (extend()) return path;
    }
    return std::nullopt;
}

}  // namespace

std::optional<Witness> find_wheel(const Graph& g, int kmax) {
    if (kmax < 4) throw std::invalid_argument("find_wheel requires kmax >= 4");
    const int cap = std::min(kmax, 6);
    for (int hub = 0; hub < g.num_vertices(); ++hub) {
        const auto& nbrs = g.neighbors(hub);
        if (static_cast<int>(nbrs.size()) < 4) continue;
        for (int k = 4; k <= cap && k <= static_cast<int>(nbrs.size()); ++k) {
            if (auto cyc = find_cycle_subgraph(g, nbrs, k)) {
                Witness w{WitnessKind::wheel, {hub}, k};
                w.vertices.insert(w.vertices.end(), cyc->begin(), cyc->end());
                return w;
            }
        }
    }
    return std::nullopt;
}

std::optional<Witness> find_two_disjoint_P3(const Graph& g) {
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& nbrs = g.neighbors(v);
        if (nbrs.size() < 6) continue;
        // P3 subgraphs a-b-c inside G[N(v)], a < c canonical.
        std::vector<std::array<int, 3>> p3s;
        for (int b : nbrs)
            for (int a : g.neighbors(b)) {
                if (!g.has_edge(v, a)) continue;
                for (int c : g.neighbors(b)) {
                    if (c <= a || !g.has_edge(v, c)) continue;
                    p3s.push_back({a, b, c});
                }
            }
        std::sort(p3s.begin(), p3s.end());
        for (std::size_t i = 0; i < p3s.size(); ++i) {
            for (std::size_t j = i + 1; j < p3s.size(); ++j) {
                const auto& p = p3s[i];
                const auto& q = p3s[j];
                bool disjoint = true;
                for (int x : p)
                    for (int y : q)
                        if (x == y) disjoint = false;
                if (disjoint)
                    return Witness{WitnessKind::two_disjoint_P3_in_neighborhood,
                                   {v, p[0], p[1], p[2], q[0], q[1], q[2]},
                                   std::nullopt};
            }
        }
    }
    return std::nullopt;
}

namespace {

// Kuhn augmenting-path matching: slot i needs a vertex from cands[i], all
// chosen vertices distinct.
std::optional<std::vector<int>> assign_slots(const std::vector<std::vector<int>>& cands) {
    std::vector<int> all;
    for (const auto& c : cands) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    const int slots = static_cast<int>(cands.size());
    const int verts = static_cast<int>(all.size());
    if (verts < slots) return std::nullopt;
    auto index_of = [&](int v) {
        return static_cast<int>(std::lower_bound(all.begin(), all.end(), v) - all.begin());
    };
    std::vector<int> owner(verts, -1);
    std::vector<char> seen(verts, 0);
    std::function<bool(int)> try_slot = [&](int s) -> bool {
        for (int v : cands[s]) {
            int idx = index_of(v);
            if (seen[idx]) continue;
            seen[idx] = 1;
            if (owner[idx] < 0 || try_slot(owner[idx])) {
                owner[idx] = s;
                return true;
            }
        }
        return false;
    };
    for (int s = 0; s < slots; ++s) {
        std::fill(seen.begin(), seen.end(), 0);
        if (!try_slot(s)) return std::nullopt;
    }
    std::vector<int> chosen(slots, -1);
    for (int idx = 0; idx < verts; ++idx)
        if (owner[idx] >= 0) chosen[owner[idx]] = all[idx];
    return chosen;
}

}  // namespace

PoolSearchResult find_odd_pool(const Graph& g, int kmax, std::uint64_t budget) {
    if (kmax < 3) throw std::invalid_argument("find_odd_pool requires kmax >= 3");
    const int n = g.num_vertices();

    bool exhausted = false;
    for (int k = 3; k <= kmax && k <= n; k += 2) {
        std::vector<int> path;
        std::vector<char> used(n, 0);
        std::optional<Witness> found;

        // Backtrack over internal-cycle candidates; each complete candidate
        // tries to place k distinct borders by matching. Every extension step
        // charges the budget.
        std::function<bool()> extend = [&]() -> bool {
            if (budget == 0) {
                exhausted = true;
                return true;
            }
            --budget;
            if (static_cast<int>(path.size()) == k) {
                if (!g.has_edge(path.back(), path.front()) || path[1] >= path.back())
                    return false;
                std::vector<std::vector<int>> cands(k);
                for (int i = 0; i < k; ++i) {
                    for (int b : g.common_neighbors(path[i], path[(i + 1) % k]))
                        if (!used[b]) cands[i].push_back(b);
                    if (cands[i].empty()) return false;
                }
                if (auto borders = assign_slots(cands)) {
                    Witness w{WitnessKind::odd_pool, path, k};
                    w.vertices.insert(w.vertices.end(), borders->begin(), borders->end());
                    found = std::move(w);
                    return true;
                }
                return false;
            }
            for (int w : g.neighbors(path.back())) {
                if (used[w] || w <= path.front()) continue;
                path.push_back(w);
                used[w] = 1;
                if (extend()) return true;
                used[w] = 0;
                path.pop_back();
            }
            return false;
        };

        for (int s = 0; s < n; ++s) {
            path.assign(1, s);
            std::fill(used.begin(), used.end(), 0);
            used[s] = 1;
            if (extend()) break;
        }
        if (found) return {PoolSearchResult::Status::found, std::move(found)};
        if (exhausted) return {PoolSearchResult::Status::budget_exhausted, std::nullopt};
    }
    return {PoolSearchResult::Status::absent, std::nullopt};
}

BlockShape classify_block(const Graph& host, const std::vector<int>& verts) {
    Graph sub = host.induced(verts);
    const int n = sub.num_vertices();
    BlockShape shape;
    if (is_bipartite(sub)) {
        shape.kind = BlockShape::Kind::bipartite;
        return shape;
    }
    if (n == 4 && sub.num_edges() == 6) {
        shape.kind = BlockShape::Kind::k4;
        return shape;
    }
    // Book: one spine edge, every other vertex adjacent to exactly its ends.
    for (int u = 0; u < n; ++u) {
        for (int v : sub.neighbors(u)) {
            if (v <= u) continue;
            bool ok = true;
            for (int w = 0; w < n && ok; ++w) {
                if (w == u || w == v) continue;
                if (sub.degree(w) != 2 || !sub.has_edge(w, u) || !sub.has_edge(w, v)) ok = false;
            }
            if (ok) {
                shape.kind = BlockShape::Kind::book;
                shape.spine_u = verts[u];
                shape.spine_v = verts[v];
                for (int w = 0; w < n; ++w)
                    if (w != u && w != v) shape.pages.push_back(verts[w]);
                return shape;
            }
        }
    }
    shape.kind = BlockShape::Kind::other;
    return shape;
}

TriState all_odd_cycles_are_triangles(const Graph& g) {
    for (const auto& blk : block_cut_tree(g).blocks) {
        if (blk.size() < 3) continue;  // single edges are bipartite
        if (classify_block(g, blk).kind == BlockShape::Kind::other) return TriState::no;
    }
    return TriState::yes;
}

bool is_P5_free(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> seq;
    // Grow induced paths; prune the reversed duplicate at the last step.
    std::function<bool()> extend = [&]() -> bool {
        if (seq.size() == 5) return true;
        for (int v = 0; v < n; ++v) {
            if (std::find(seq.begin(), seq.end(), v) != seq.end()) continue;
            if (seq.size() == 4 && v < seq.front()) continue;
            bool ok = seq.empty() || g.has_edge(seq.back(), v);
            for (std::size_t i = 0; i + 1 < seq.size() && ok; ++i)
                if (g.has_edge(seq[i], v)) ok = false;
            if (!ok) continue;
            seq.push_back(v);
            if (extend()) return true;
            seq.pop_back();
        }
        return false;
    };
    return !extend();
}

}  // namespace bm
