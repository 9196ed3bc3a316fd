#include "bm/vc.hpp"

#include <algorithm>
#include <functional>

namespace bm {

namespace {

std::optional<std::vector<int>> cover_branch(const Graph& g, std::vector<char>& removed, int k) {
    // find any remaining edge, prefer the highest-degree endpoint first
    int bu = -1, bv = -1;
    for (int u = 0; u < g.num_vertices() && bu < 0; ++u) {
        if (removed[u]) continue;
        for (int v : g.neighbors(u)) {
            if (removed[v]) continue;
            bu = u;
            bv = v;
            break;
        }
    }
    if (bu < 0) return std::vector<int>{};
    if (k == 0) return std::nullopt;
    for (int pick : {bu, bv}) {
        removed[pick] = 1;
        if (auto rest = cover_branch(g, removed, k - 1)) {
            rest->push_back(pick);
            removed[pick] = 0;
            return rest;
        }
        removed[pick] = 0;
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> find_vertex_cover(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    std::vector<char> removed(g.num_vertices(), 0);
    auto cover = cover_branch(g, removed, k);
    if (cover) std::sort(cover->begin(), cover->end());
    return cover;
}

namespace {

constexpr int kUnassigned = -1;

// Search state shared across the Z-branching; trail-based undo.
struct VcSearch {
    const Graph& g;
    std::vector<int> side;     // -1 / 0 (A) / 1 (B)
    std::vector<int> matched;  // mono partner or -1
    std::vector<int> z_list;   // ascending ids of (1,1) outside vertices
    std::vector<std::pair<int, int>> trail;  // (vertex, previous matched of partner)
    VcStats stats;

    explicit VcSearch(const Graph& graph)
        : g(graph), side(graph.num_vertices(), kUnassigned), matched(graph.num_vertices(), -1) {}

    // Places v on `s`; the unique same-side neighbor (if any) is matched.
    // Returns false when a second monochromatic edge would appear.
    bool place(int v, int s) {
        int partner = -1;
        for (int u : g.neighbors(v)) {
            if (side[u] != s) continue;
            if (partner >= 0) return false;  // two same-side neighbors
            partner = u;
        }
        if (partner >= 0 && matched[partner] >= 0) return false;
        side[v] = s;
        if (partner >= 0) {
            matched[v] = partner;
            matched[partner] = v;
        }
        trail.emplace_back(v, partner);
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            auto [v, partner] = trail.back();
            trail.pop_back();
            side[v] = kUnassigned;
            matched[v] = -1;
            if (partner >= 0) matched[partner] = -1;
        }
    }

    bool branch(std::size_t zi, int depth) {
        stats.max_depth = std::max(stats.max_depth, depth);
        while (zi < z_list.size() && side[z_list[zi]] != kUnassigned) ++zi;
        if (zi == z_list.size()) return true;
        const int z = z_list[zi];
        ++stats.branch_nodes;

        int az = -1, bz = -1;
        for (int u : g.neighbors(z)) {
            if (side[u] == 0) az = u;
            if (side[u] == 1) bz = u;
        }
        for (int s : {0, 1}) {
            const int anchor = s == 0 ? az : bz;
            std::size_t mark = trail.size();
            if (place(z, s)) {
                // the anchor is now matched to z; its other Z-neighbors are
                // forced to the opposite side
                bool ok = true;
                for (int u : g.neighbors(anchor)) {
                    if (side[u] != kUnassigned) continue;
                    if (!std::binary_search(z_list.begin(), z_list.end(), u)) continue;
                    if (!place(u, 1 - s)) {
                        ok = false;
                        break;
                    }
                }
                if (ok && branch(zi + 1, depth + 1)) return true;
            }
            undo_to(mark);
        }
        return false;
    }
};

}  // namespace

std::optional<Certificate> solve_vc(const Graph& g, const std::vector<int>& cover,
                                    VcStats* stats) {
    const int n = g.num_vertices();
    std::vector<char> in_cover(n, 0);
    for (int v : cover) {
        if (v < 0 || v >= n) throw std::invalid_argument("cover vertex out of range");
        in_cover[v] = 1;
    }
    for (auto [u, v] : g.edges())
        if (!in_cover[u] && !in_cover[v])
            throw std::invalid_argument("given set is not a vertex cover");

    std::vector<int> sorted_cover = cover;
    std::sort(sorted_cover.begin(), sorted_cover.end());
    sorted_cover.erase(std::unique(sorted_cover.begin(), sorted_cover.end()),
                       sorted_cover.end());
    const int s = static_cast<int>(sorted_cover.size());
    if (s > 30) throw std::invalid_argument("cover too large for split enumeration");

    VcStats total;
    for (std::uint64_t mask = 0; mask < (1ull << s); ++mask) {
        VcSearch search(g);

        bool ok = true;
        for (int i = 0; i < s && ok; ++i)
            ok = search.place(sorted_cover[i], (mask >> i) & 1u ? 1 : 0);

        // Forced outside vertices: two same-side cover neighbors push the
        // vertex to the other side. Outside the cover is an independent set,
        // so one pass reaches the fixpoint.
        for (int v = 0; v < n && ok; ++v) {
            if (in_cover[v] || search.side[v] != kUnassigned) continue;
            int da = 0, db = 0;
            for (int u : g.neighbors(v)) {
                if (search.side[u] == 0) ++da;
                if (search.side[u] == 1) ++db;
            }
            if (da >= 2 && db >= 2) ok = false;
            else if (da >= 2) ok = search.place(v, 1);
            else if (db >= 2) ok = search.place(v, 0);
        }

        // Classify the rest: X=(1,0) goes to B, Y=(0,1) to A, (0,0) to A,
        // Z=(1,1) is branched.
        if (ok) {
            search.z_list.clear();
            for (int v = 0; v < n && ok; ++v) {
                if (search.side[v] != kUnassigned) continue;
                int da = 0, db = 0;
                for (int u : g.neighbors(v)) {
                    if (search.side[u] == 0) ++da;
                    if (search.side[u] == 1) ++db;
                }
                if (da == 1 && db == 1) search.z_list.push_back(v);
                else if (da == 1) ok = search.place(v, 1);
                else if (db == 1) ok = search.place(v, 0);
                else ok = search.place(v, 0);
            }
        }

        bool solved = ok && search.branch(0, 0);
        total.branch_nodes += search.stats.branch_nodes;
        total.max_depth = std::max(total.max_depth, search.stats.max_depth);
        if (solved) {
            if (stats) *stats = total;
            std::vector<int> coloring(n);
            for (int v = 0; v < n; ++v) coloring[v] = search.side[v];
            return certificate_from_coloring(g, std::move(coloring));
        }
    }
    if (stats) *stats = total;
    return std::nullopt;
}

}  // namespace bm
