#include "bm/kernel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bm/structure.hpp"

namespace bm {

NDPartition nd_decompose(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    // equal open neighborhoods (false twins) or closed ones (true twins)
    std::map<std::vector<int>, int> open_seen, closed_seen;
    for (int v = 0; v < n; ++v) {
        std::vector<int> open = g.neighbors(v);
        auto [ito, newo] = open_seen.try_emplace(open, v);
        if (!newo) unite(v, ito->second);
        std::vector<int> closed = open;
        closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
        auto [itc, newc] = closed_seen.try_emplace(closed, v);
        if (!newc) unite(v, itc->second);
    }

    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
    NDPartition part;
    std::vector<std::pair<int, std::vector<int>>> ordered;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        ordered.emplace_back(members.front(), members);
    }
    std::sort(ordered.begin(), ordered.end());
    for (auto& [mn, members] : ordered) {
        NDPartition::Kind kind = NDPartition::Kind::both;
        if (members.size() >= 2)
            kind = g.has_edge(members[0], members[1]) ? NDPartition::Kind::clique
                                                      : NDPartition::Kind::independent;
        part.types.push_back(members);
        part.kinds.push_back(kind);
    }
    return part;
}

namespace {

bool is_clique_type(const NDPartition& p, std::size_t i) {
    return p.kinds[i] == NDPartition::Kind::clique;
}

std::vector<int> outside_neighbors(const Graph& g, const std::vector<int>& type) {
    std::vector<int> out;
    for (int u : g.neighbors(type.front()))
        if (!std::binary_search(type.begin(), type.end(), u)) out.push_back(u);
    return out;
}

// rule 3 helpers
bool triangle_fully_forbidden(const Instance& inst) {
    const Graph& g = inst.graph;
    for (int a = 0; a < g.num_vertices(); ++a)
        for (int b : g.neighbors(a)) {
            if (b <= a) continue;
            if (!inst.is_forbidden(a, b)) continue;
            for (int c : g.common_neighbors(a, b))
                if (c > b && inst.is_forbidden(a, c) && inst.is_forbidden(b, c)) return true;
        }
    return false;
}

bool k4_without_allowed_matching(const Instance& inst) {
    const Graph& g = inst.graph;
    const int n = g.num_vertices();
    for (int a = 0; a < n; ++a)
        for (int b : g.neighbors(a)) {
            if (b <= a) continue;
            auto common = g.common_neighbors(a, b);
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j) {
                    int c = common[i], d = common[j];
                    if (!g.has_edge(c, d)) continue;
                    bool pm1 = !inst.is_forbidden(a, b) && !inst.is_forbidden(c, d);
                    bool pm2 = !inst.is_forbidden(a, c) && !inst.is_forbidden(b, d);
                    bool pm3 = !inst.is_forbidden(a, d) && !inst.is_forbidden(b, c);
                    if (!pm1 && !pm2 && !pm3) return true;
                }
        }
    return false;
}

Instance shrink(const Instance& inst, KernelStep& step) {
    const Graph& g = inst.graph;
    const int n = g.num_vertices();
    std::vector<char> gone(n, 0);
    for (int v : step.removed) gone[v] = 1;
    step.old_of_new.clear();
    for (int v = 0; v < n; ++v)
        if (!gone[v]) step.old_of_new.push_back(v);
    std::vector<int> new_of_old(n, -1);
    for (std::size_t i = 0; i < step.old_of_new.size(); ++i)
        new_of_old[step.old_of_new[i]] = static_cast<int>(i);

    Graph sub = g.induced(step.old_of_new);
    std::vector<Edge> forb;
    for (auto [u, v] : inst.forbidden)
        if (!gone[u] && !gone[v]) forb.push_back(make_edge(new_of_old[u], new_of_old[v]));
    for (auto [u, v] : step.added_forbidden)
        forb.push_back(make_edge(new_of_old[u], new_of_old[v]));
    return make_instance(std::move(sub), std::move(forb));
}

}  // namespace

KernelResult kernelize(const Instance& inst) {
    Instance work = inst;
    KernelTrace trace;

    for (;;) {
        const Graph& g = work.graph;

        if (find_K5(g)) return {true, 1, std::move(work), std::move(trace)};

        auto part = nd_decompose(g);

        // rule 2: triangle type seen by two outside vertices
        for (std::size_t i = 0; i < part.types.size(); ++i)
            if (part.types[i].size() == 3 && is_clique_type(part, i) &&
                outside_neighbors(g, part.types[i]).size() >= 2)
                return {true, 2, std::move(work), std::move(trace)};

        if (triangle_fully_forbidden(work) || k4_without_allowed_matching(work))
            return {true, 3, std::move(work), std::move(trace)};

        KernelStep step;
        bool changed = false;

        // rule 4: K4 types (isolated components once rule 1 passed)
        for (std::size_t i = 0; i < part.types.size() && !changed; ++i)
            if (part.types[i].size() == 4 && is_clique_type(part, i)) {
                step.rule = 4;
                step.removed = part.types[i];
                changed = true;
            }

        // rule 5: isolated triangle types
        for (std::size_t i = 0; i < part.types.size() && !changed; ++i)
            if (part.types[i].size() == 3 && is_clique_type(part, i) &&
                outside_neighbors(g, part.types[i]).empty()) {
                step.rule = 5;
                step.removed = part.types[i];
                changed = true;
            }

        // rule 6: triangle type with exactly one outside neighbor
        for (std::size_t i = 0; i < part.types.size() && !changed; ++i) {
            if (part.types[i].size() != 3 || !is_clique_type(part, i)) continue;
            auto outs = outside_neighbors(g, part.types[i]);
            if (outs.size() != 1) continue;
            step.rule = 6;
            step.removed = part.types[i];
            step.anchor = outs[0];
            for (int u : g.neighbors(outs[0]))
                if (!std::binary_search(step.removed.begin(), step.removed.end(), u))
                    step.added_forbidden.push_back(make_edge(outs[0], u));
            changed = true;
        }

        // rule 7: contract independent types of size >= 3
        for (std::size_t i = 0; i < part.types.size() && !changed; ++i) {
            if (part.types[i].size() < 3 || part.kinds[i] != NDPartition::Kind::independent)
                continue;
            const auto& type = part.types[i];
            step.rule = 7;
            step.anchor = type.front();
            step.removed.assign(type.begin() + 1, type.end());
            for (int u : g.neighbors(step.anchor))
                step.added_forbidden.push_back(make_edge(step.anchor, u));
            changed = true;
        }

        if (!changed) break;
        work = shrink(work, step);
        trace.steps.push_back(std::move(step));
    }
    return {false, 0, std::move(work), std::move(trace)};
}

Instance replay_trace(const Instance& inst, const KernelTrace& trace) {
    Instance work = inst;
    for (const auto& recorded : trace.steps) {
        KernelStep step = recorded;
        work = shrink(work, step);
        if (step.old_of_new != recorded.old_of_new)
            throw std::logic_error("trace does not match the instance");
    }
    return work;
}

namespace {

// Rebuilds the instance sequence the kernelization went through.
std::vector<Instance> instance_chain(const Instance& inst, const KernelTrace& trace) {
    std::vector<Instance> chain{inst};
    for (const auto& recorded : trace.steps) {
        KernelStep step = recorded;
        chain.push_back(shrink(chain.back(), step));
    }
    return chain;
}

// Colors a removed isolated K4 with a perfect matching avoiding pre.forbidden.
void color_k4(const Instance& pre, const std::vector<int>& quad, std::vector<int>& color) {
    const int a = quad[0], b = quad[1], c = quad[2], d = quad[3];
    struct Option {
        Edge e1, e2;
    };
    for (const auto& [e1, e2] : {Option{make_edge(a, b), make_edge(c, d)},
                                 Option{make_edge(a, c), make_edge(b, d)},
                                 Option{make_edge(a, d), make_edge(b, c)}}) {
        if (pre.is_forbidden(e1.first, e1.second) || pre.is_forbidden(e2.first, e2.second))
            continue;
        color[e1.first] = color[e1.second] = 0;
        color[e2.first] = color[e2.second] = 1;
        return;
    }
    throw std::logic_error("lift: no allowed perfect matching in removed K4");
}

void color_triangle(const Instance& pre, const std::vector<int>& tri, std::vector<int>& color) {
    for (auto [x, y] : {Edge{tri[0], tri[1]}, Edge{tri[0], tri[2]}, Edge{tri[1], tri[2]}}) {
        if (pre.is_forbidden(x, y)) continue;
        for (int t : tri) color[t] = 1;
        color[x] = color[y] = 0;
        return;
    }
    throw std::logic_error("lift: isolated triangle fully forbidden");
}

// Rule 6 pocket: triangle `tri` all adjacent to anchor v whose color is fixed.
// Tries the 8 colorings of the triangle and keeps the first whose pocket
// monochromatic edges form an allowed matching with v matched at most once.
void color_rule6(const Instance& pre, const std::vector<int>& tri, int anchor,
                 std::vector<int>& color) {
    for (int mask = 0; mask < 8; ++mask) {
        int c[3] = {mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
        std::vector<Edge> mono;
        int vmono = 0;
        for (int i = 0; i < 3; ++i) {
            if (c[i] == color[anchor]) {
                mono.push_back(make_edge(tri[i], anchor));
                ++vmono;
            }
            for (int j = i + 1; j < 3; ++j)
                if (c[i] == c[j]) mono.push_back(make_edge(tri[i], tri[j]));
        }
        if (vmono > 1) continue;
        bool ok = true;
        std::map<int, int> deg;
        for (auto [x, y] : mono) {
            if (pre.is_forbidden(x, y)) ok = false;
            if (++deg[x] > 1 || ++deg[y] > 1) ok = false;
        }
        if (!ok) continue;
        for (int i = 0; i < 3; ++i) color[tri[i]] = c[i];
        return;
    }
    throw std::logic_error("lift: rule 6 pocket has no allowed coloring");
}

}  // namespace

Certificate lift_certificate(const Instance& inst, const KernelTrace& trace,
                             const Certificate& kernel_cert) {
    auto chain = instance_chain(inst, trace);
    std::vector<int> color = kernel_cert.coloring;

    for (std::size_t si = trace.steps.size(); si-- > 0;) {
        const KernelStep& step = trace.steps[si];
        const Instance& pre = chain[si];
        std::vector<int> pre_color(pre.graph.num_vertices(), -1);
        for (std::size_t i = 0; i < step.old_of_new.size(); ++i)
            pre_color[step.old_of_new[i]] = color[i];

        switch (step.rule) {
            case 4:
                color_k4(pre, step.removed, pre_color);
                break;
            case 5:
                color_triangle(pre, step.removed, pre_color);
                break;
            case 6:
                color_rule6(pre, step.removed, step.anchor, pre_color);
                break;
            case 7:
                for (int v : step.removed) pre_color[v] = pre_color[step.anchor];
                break;
            default:
                throw std::logic_error("lift: unknown rule in trace");
        }
        color = std::move(pre_color);
    }
    return certificate_from_coloring(inst.graph, std::move(color));
}

}  // namespace bm
