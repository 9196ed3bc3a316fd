#include "bm/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace bm {

namespace {

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

}  // namespace

Instance random_max_degree(int n, int max_degree, std::uint64_t seed) {
    if (n < 0 || max_degree < 0) throw std::invalid_argument("bad generator parameters");
    std::mt19937_64 rng(seed);
    auto pairs = all_pairs(n);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    // density varies across seeds so the corpus is not uniformly saturated
    std::uniform_int_distribution<int> pct(30, 95);
    const int keep = pct(rng);
    std::vector<int> degree(n, 0);
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) {
        if (degree[u] >= max_degree || degree[v] >= max_degree) continue;
        if (static_cast<int>(rng() % 100) >= keep) continue;
        ++degree[u];
        ++degree[v];
        edges.emplace_back(u, v);
    }
    return make_instance(Graph::from_edges(n, edges));
}

PlantedVc random_planted_vc(int n, int vc, std::uint64_t seed) {
    if (vc > n) throw std::invalid_argument("cover larger than the graph");
    std::mt19937_64 rng(seed);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> cover(order.begin(), order.begin() + vc);
    std::sort(cover.begin(), cover.end());
    std::vector<char> in_cover(n, 0);
    for (int v : cover) in_cover[v] = 1;

    std::uniform_int_distribution<int> pct(25, 80);
    const int keep = pct(rng);
    std::vector<Edge> edges;
    for (auto [u, v] : all_pairs(n)) {
        if (!in_cover[u] && !in_cover[v]) continue;
        if (static_cast<int>(rng() % 100) < keep) edges.emplace_back(u, v);
    }
    return {make_instance(Graph::from_edges(n, edges)), std::move(cover)};
}

namespace {

void cotree(std::mt19937_64& rng, const std::vector<int>& verts, std::vector<Edge>& edges) {
    if (verts.size() <= 1) return;
    std::uniform_int_distribution<std::size_t> cut(1, verts.size() - 1);
    const std::size_t left = cut(rng);
    std::vector<int> a(verts.begin(), verts.begin() + left);
    std::vector<int> b(verts.begin() + left, verts.end());
    if (rng() & 1) {  // join
        for (int u : a)
            for (int v : b) edges.push_back(make_edge(u, v));
    }
    cotree(rng, a, edges);
    cotree(rng, b, edges);
}

}  // namespace

Instance random_cograph(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    std::shuffle(verts.begin(), verts.end(), rng);
    std::vector<Edge> edges;
    cotree(rng, verts, edges);
    return make_instance(Graph::from_edges(n, edges));
}

Instance random_chordal(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::vector<std::vector<int>> cliques{{0}};
    for (int v = 1; v < n; ++v) {
        const auto& base = cliques[rng() % cliques.size()];
        std::vector<int> attach;
        for (int u : base)
            if (rng() % 100 < 65) attach.push_back(u);
        if (attach.empty()) attach.push_back(base[rng() % base.size()]);
        for (int u : attach) edges.push_back(make_edge(u, v));
        attach.push_back(v);
        cliques.push_back(std::move(attach));
    }
    return make_instance(Graph::from_edges(n, edges));
}

Instance random_block_composed(int n, std::uint64_t seed, int forbidden_rate_percent) {
    if (n < 1) throw std::invalid_argument("need at least one vertex");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    int built = 1;  // vertex 0 seeds the graph

    while (built < n) {
        const int cut = static_cast<int>(rng() % built);
        const int room = n - built;
        int kind = static_cast<int>(rng() % 5);
        // shrink the block to whatever still fits
        if (room < 2) kind = 0;
        else if (room < 3 && kind >= 2) kind = 1;
        switch (kind) {
            case 0: {  // bridge
                int a = built++;
                edges.push_back(make_edge(cut, a));
                break;
            }
            case 1: {  // triangle
                int a = built++, b = built++;
                edges.push_back(make_edge(cut, a));
                edges.push_back(make_edge(cut, b));
                edges.push_back(make_edge(a, b));
                break;
            }
            case 2: {  // K4
                int a = built++, b = built++, c = built++;
                for (int x : {a, b, c}) edges.push_back(make_edge(cut, x));
                edges.push_back(make_edge(a, b));
                edges.push_back(make_edge(a, c));
                edges.push_back(make_edge(b, c));
                break;
            }
            case 3: {  // even cycle through the cut vertex
                int len = (room >= 5 && (rng() & 1)) ? 6 : 4;
                if (room < len - 1) {  // fall back to a bridge
                    int a = built++;
                    edges.push_back(make_edge(cut, a));
                    break;
                }
                int prev = cut;
                for (int i = 0; i < len - 1; ++i) {
                    int next = built++;
                    edges.push_back(make_edge(prev, next));
                    prev = next;
                }
                edges.push_back(make_edge(prev, cut));
                break;
            }
            default: {  // book: pages all adjacent to the cut vertex and one fresh spine end
                int spine = built++;
                int pages = 1 + static_cast<int>(rng() % 3);
                pages = std::min(pages, n - built);
                edges.push_back(make_edge(cut, spine));
                for (int i = 0; i < pages; ++i) {
                    int page = built++;
                    edges.push_back(make_edge(cut, page));
                    edges.push_back(make_edge(spine, page));
                }
                break;
            }
        }
    }

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<Edge> forbidden;
    for (auto e : edges)
        if (static_cast<int>(rng() % 100) < forbidden_rate_percent) forbidden.push_back(e);
    return make_instance(Graph::from_edges(n, edges), std::move(forbidden));
}

Formula random_formula(int vars, int clauses, std::uint64_t seed) {
    if (vars < 3) throw std::invalid_argument("need at least three variables");
    std::mt19937_64 rng(seed);
    Formula f;
    f.num_vars = vars;
    for (int j = 0; j < clauses; ++j) {
        std::vector<int> pick;
        while (static_cast<int>(pick.size()) < 3) {
            int v = 1 + static_cast<int>(rng() % vars);
            if (std::find(pick.begin(), pick.end(), v) == pick.end()) pick.push_back(v);
        }
        f.clauses.push_back(std::move(pick));
    }
    return f;
}

Formula random_sat3_formula(int vars, int clauses, std::uint64_t seed) {
    if (vars < 3) throw std::invalid_argument("need at least three variables");
    std::mt19937_64 rng(seed);
    Formula f;
    f.num_vars = vars;
    std::vector<int> pos(vars + 1, 0), neg(vars + 1, 0);
    for (int j = 0; j < clauses; ++j) {
        const int size = 2 + static_cast<int>(rng() % 2);
        std::vector<int> avail;
        for (int v = 1; v <= vars; ++v)
            if (pos[v] + neg[v] < 3 && (pos[v] < 2 || neg[v] < 1)) avail.push_back(v);
        if (static_cast<int>(avail.size()) < size) break;
        std::shuffle(avail.begin(), avail.end(), rng);
        std::vector<int> clause;
        for (int i = 0; i < size; ++i) {
            int v = avail[i];
            bool can_pos = pos[v] < 2, can_neg = neg[v] < 1;
            bool positive = can_pos && (!can_neg || rng() % 3 != 0);
            if (positive) {
                ++pos[v];
                clause.push_back(v);
            } else {
                ++neg[v];
                clause.push_back(-v);
            }
        }
        std::sort(clause.begin(), clause.end(),
                  [](int a, int b) { return std::abs(a) < std::abs(b); });
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

}  // namespace bm
