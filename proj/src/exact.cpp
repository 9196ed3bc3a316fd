#include "bm/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>

namespace bm {

namespace {

// Trail-based backtracking search over partial 2-colorings with unit
// propagation. The monochromatic-degree counters are kept exact at all times;
// a vertex is forced as soon as one of its colors becomes illegal.
class Searcher {
public:
    Searcher(const Graph& g, const std::vector<Edge>& forbidden, int d)
        : g_(g), forbidden_(forbidden), d_(d), n_(g.num_vertices()), color_(n_, -1),
          cnt_(n_, {0, 0}), mono_(n_, 0) {}

    std::uint64_t nodes() const { return nodes_; }

    bool is_forbidden(int u, int v) const {
        return std::binary_search(forbidden_.begin(), forbidden_.end(), make_edge(u, v));
    }

    bool legal(int v, int c) const {
        if (cnt_[v][c] > d_) return false;
        if (cnt_[v][c] == 0) return true;
        for (int u : g_.neighbors(v)) {
            if (color_[u] != c) continue;
            if (mono_[u] == d_) return false;
            if (d_ == 1 && is_forbidden(u, v)) return false;
        }
        return true;
    }

    void assign(int v, int c) {
        color_[v] = static_cast<signed char>(c);
        trail_.push_back(v);
        ++nodes_;
        for (int u : g_.neighbors(v)) {
            ++cnt_[u][c];
            if (color_[u] == c) {
                ++mono_[u];
                ++mono_[v];
            }
        }
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            int v = trail_.back();
            trail_.pop_back();
            int c = color_[v];
            for (int u : g_.neighbors(v)) {
                --cnt_[u][c];
                if (color_[u] == c) --mono_[u];
            }
            mono_[v] = 0;
            color_[v] = -1;
        }
    }

    // Assigns v <- c, then forces every vertex left with a single legal color
    // until fixpoint. Returns false on conflict (caller must undo).
    bool assign_propagate(int v, int c) {
        if (!legal(v, c)) return false;
        queue_.clear();
        assign(v, c);
        enqueue_affected(v);
        std::size_t head = 0;
        while (head < queue_.size()) {
            int w = queue_[head++];
            if (color_[w] >= 0) continue;
            bool l0 = legal(w, 0), l1 = legal(w, 1);
            if (!l0 && !l1) return false;
            if (l0 && l1) continue;
            int forced = l0 ? 0 : 1;
            assign(w, forced);
            enqueue_affected(w);
        }
        return true;
    }

    std::size_t mark() const { return trail_.size(); }

    int pick_branch_vertex() const {
        int best = -1, best_score = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[v] >= 0) continue;
            int score = cnt_[v][0] + cnt_[v][1];
            if (score > best_score) {
                best = v;
                best_score = score;
            }
        }
        return best;
    }

    std::vector<int> coloring() const {
        std::vector<int> out(n_);
        for (int v = 0; v < n_; ++v) out[v] = color_[v];
        return out;
    }

    bool color_assigned(int v) const { return color_[v] >= 0; }

private:
    void enqueue_affected(int v) {
        for (int u : g_.neighbors(v)) {
            if (color_[u] < 0) {
                queue_.push_back(u);
            } else if (color_[u] == color_[v] && mono_[u] == d_) {
                // u just saturated; its unassigned neighbors lose a color.
                for (int w : g_.neighbors(u))
                    if (color_[w] < 0) queue_.push_back(w);
            }
        }
        if (mono_[v] == d_)
            for (int w : g_.neighbors(v))
                if (color_[w] < 0) queue_.push_back(w);
    }

    const Graph& g_;
    const std::vector<Edge>& forbidden_;
    int d_;
    int n_;
    std::vector<signed char> color_;
    std::vector<std::array<int, 2>> cnt_;
    std::vector<int> mono_;
    std::vector<int> trail_;
    std::vector<int> queue_;
    std::uint64_t nodes_ = 0;
};

bool search_one(Searcher& s) {
    int v = s.pick_branch_vertex();
    if (v < 0) return true;
    for (int c = 0; c <= 1; ++c) {
        std::size_t m = s.mark();
        if (s.assign_propagate(v, c)) {
            if (search_one(s)) return true;
        }
        s.undo_to(m);
    }
    return false;
}

void check_preconditions(const Instance& inst, int d) {
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    if (d != 1 && !inst.forbidden.empty())
        throw std::invalid_argument("forbidden edges require d = 1");
}

}  // namespace

std::optional<Certificate> solve_exact(const Instance& inst, int d, SolveStats* stats) {
    check_preconditions(inst, d);
    const Graph& g = inst.graph;
    std::vector<int> total(g.num_vertices(), 0);
    std::uint64_t nodes = 0;
    for (const auto& comp : g.components()) {
        Graph sub = g.induced(comp);
        std::vector<int> pos(g.num_vertices(), -1);
        for (std::size_t i = 0; i < comp.size(); ++i) pos[comp[i]] = static_cast<int>(i);
        std::vector<Edge> sub_forb;
        for (auto [u, v] : inst.forbidden)
            if (pos[u] >= 0 && pos[v] >= 0) sub_forb.push_back(make_edge(pos[u], pos[v]));
        std::sort(sub_forb.begin(), sub_forb.end());

        Searcher s(sub, sub_forb, d);
        // Color swap symmetry: pin the component root to color 0.
        bool ok = s.assign_propagate(0, 0) && search_one(s);
        nodes += s.nodes();
        if (!ok) {
            if (stats) stats->nodes = nodes;
            return std::nullopt;
        }
        auto sub_coloring = s.coloring();
        for (std::size_t i = 0; i < comp.size(); ++i) total[comp[i]] = sub_coloring[i];
    }
    if (stats) stats->nodes = nodes;
    return certificate_from_coloring(g, std::move(total));
}

std::optional<Certificate> solve_brute(const Instance& inst, int d) {
    check_preconditions(inst, d);
    const Graph& g = inst.graph;
    const int n = g.num_vertices();
    if (n > 26) throw std::invalid_argument("solve_brute limited to n <= 26");
    if (n == 0) return certificate_from_coloring(g, {});

    std::vector<std::uint32_t> adj(n, 0), forb_adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj[v] |= 1u << u;
    for (auto [u, v] : inst.forbidden) {
        forb_adj[u] |= 1u << v;
        forb_adj[v] |= 1u << u;
    }

    // The first passing mask always colors vertex n-1 with 0 (otherwise its
    // global flip passes and is smaller), so half the range suffices.
    const std::uint32_t limit = n == 1 ? 1u : (1u << (n - 1));
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            std::uint32_t same = adj[v] & ((mask >> v) & 1u ? mask : ~mask);
            if (std::popcount(same) > d) ok = false;
            else if (d == 1 && (forb_adj[v] & same)) ok = false;
        }
        if (ok) {
            std::vector<int> coloring(n);
            for (int v = 0; v < n; ++v) coloring[v] = (mask >> v) & 1u;
            return certificate_from_coloring(g, std::move(coloring));
        }
    }
    return std::nullopt;
}

std::uint64_t enumerate_all(const Instance& inst, int d,
                            const std::function<void(const Certificate&)>& visitor) {
    check_preconditions(inst, d);
    const Graph& g = inst.graph;
    Searcher s(g, inst.forbidden, d);

    // Canonical form: the smallest vertex of every component gets color 0.
    for (const auto& comp : g.components())
        if (!s.assign_propagate(comp[0], 0)) return 0;

    std::uint64_t count = 0;
    auto dfs = [&](auto&& self) -> void {
        int v = s.pick_branch_vertex();
        if (v < 0) {
            ++count;
            visitor(certificate_from_coloring(g, s.coloring()));
            return;
        }
        for (int c = 0; c <= 1; ++c) {
            std::size_t m = s.mark();
            if (s.assign_propagate(v, c)) self(self);
            s.undo_to(m);
        }
    };
    dfs(dfs);
    return count;
}

}  // namespace bm
