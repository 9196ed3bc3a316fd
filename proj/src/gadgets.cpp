#include "bm/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

namespace bm {

int LabeledGadget::label(const std::string& name) const {
    auto it = labels.find(name);
    if (it == labels.end()) throw std::out_of_range("no label '" + name + "'");
    return it->second;
}

namespace {

struct Builder {
    int n = 0;
    std::vector<Edge> edges;
    std::map<std::string, int> labels;

    int add(const std::string& name = {}) {
        int id = n++;
        if (!name.empty()) labels.emplace(name, id);
        return id;
    }
    void connect(int u, int v) { edges.push_back(make_edge(u, v)); }
    LabeledGadget finish() {
        return {Graph::from_edges(n, edges), std::move(labels)};
    }
};

// Head edges over role ids 0..6: 0 = neck, 6 = port. The triangle h1h2h3
// carries borders h4 (on h1h2) and h6 (on h2h3); h5 closes a square through
// h3 and h4; the neck hangs off h5 and h6. The unique matching pairs h1h2,
// h3h6 and neck-h5, so both neck and port are matched and end up in opposite
// color classes.
constexpr int kHeadEdges[][2] = {
    {1, 2}, {2, 3}, {1, 3},  // triangle
    {4, 1}, {4, 2},          // border of h1h2
    {6, 2}, {6, 3},          // border of h2h3 (the port)
    {5, 3}, {5, 4},          // h5 links h3 to h4
    {0, 5}, {0, 6},          // neck
};

// Appends a head whose neck is the existing vertex `attach` (which is then
// matched inside the head); returns the new port vertex.
int append_head(Builder& b, int attach, const std::string& prefix) {
    int ids[7];
    ids[0] = attach;
    for (int i = 1; i <= 6; ++i)
        ids[i] = b.add(prefix.empty() ? std::string{} : prefix + ".h" + std::to_string(i));
    for (auto [u, v] : kHeadEdges) b.connect(ids[u], ids[v]);
    return ids[6];
}

}  // namespace

LabeledGadget build_head() {
    Builder b;
    b.add("neck");
    for (int i = 1; i <= 6; ++i) b.add("h" + std::to_string(i));
    for (auto [u, v] : kHeadEdges) b.connect(u, v);
    b.labels.emplace("port", 6);
    return b.finish();
}

LabeledGadget build_pool(int k) {
    if (k < 3) throw std::invalid_argument("pool needs k >= 3");
    if (k % 2 == 0) throw std::invalid_argument("only odd pools are built");
    Builder b;
    for (int i = 1; i <= k; ++i) b.add("p" + std::to_string(i));
    for (int i = 1; i <= k; ++i) b.add("b" + std::to_string(i));
    for (int i = 0; i < k; ++i) {
        b.connect(i, (i + 1) % k);
        b.connect(k + i, i);
        b.connect(k + i, (i + 1) % k);
    }
    return b.finish();
}

LabeledGadget build_pool_minus_border(int k) {
    if (k < 3) throw std::invalid_argument("pool needs k >= 3");
    if (k % 2 == 0) throw std::invalid_argument("only odd pools are built");
    Builder b;
    for (int i = 1; i <= k; ++i) b.add("p" + std::to_string(i));
    for (int i = 1; i < k; ++i) b.add("b" + std::to_string(i));
    for (int i = 0; i < k; ++i) b.connect(i, (i + 1) % k);
    for (int i = 0; i + 1 < k; ++i) {
        b.connect(k + i, i);
        b.connect(k + i, i + 1);
    }
    return b.finish();
}

namespace {

// Pool-minus-border skeleton shared by the clause and variable gadgets.
// Internal edges listed in `subdivide` (1-based pairs (i, i+1 mod k)) are
// replaced by two-vertex paths whose inner vertices carry heads; the head
// necks are the subdivision vertices themselves, which pins those vertices
// as matched and keeps the segment edges out of every matching.
struct PoolFrame {
    Builder b;
    int k;
    std::vector<int> p;  // p[i] = vertex of p_{i+1}
    std::vector<int> border;  // border[i] = b_{i+1}, i < k-1

    PoolFrame(int k_, const std::vector<int>& subdivide) : k(k_) {
        for (int i = 1; i <= k; ++i) p.push_back(b.add("p" + std::to_string(i)));
        for (int i = 1; i < k; ++i) border.push_back(b.add("b" + std::to_string(i)));
        std::vector<char> cut(k, 0);
        for (int i : subdivide) cut[i - 1] = 1;
        for (int i = 0; i < k; ++i) {
            if (!cut[i]) {
                b.connect(p[i], p[(i + 1) % k]);
            } else {
                std::string base = "s" + std::to_string(i + 1);
                int s1 = b.add(base + "a");
                int s2 = b.add(base + "b");
                b.connect(p[i], s1);
                b.connect(s1, s2);
                b.connect(s2, p[(i + 1) % k]);
                append_head(b, s1, base + "a");
                append_head(b, s2, base + "b");
            }
        }
        for (int i = 0; i + 1 < k; ++i) {
            b.connect(border[i], p[i]);
            b.connect(border[i], p[i + 1]);
        }
    }
};

}  // namespace

LabeledGadget build_clause_gadget(int size) {
    if (size != 2 && size != 3) throw std::invalid_argument("clause size must be 2 or 3");
    const int k = 2 * size + 1;
    // keep p1p2, p3p4, p5p6 selectable; subdivide the rest
    std::vector<int> subdivide;
    for (int i = 1; i <= k; ++i)
        if (!(i % 2 == 1 && i < 2 * size)) subdivide.push_back(i);
    PoolFrame frame(k, subdivide);
    // Port parity matters for the clause-variable wiring: the b-ports sit on
    // the odd borders, whose color tracks the selected slot, while the w-ports
    // sit on the even borders, which share one fixed color in every
    // configuration. The variable gadget exposes the same split, so wiring
    // w-to-w and b-to-b never forces relations between unrelated gadgets.
    for (int slot = 1; slot <= size; ++slot) {
        int lw = frame.b.add("l" + std::to_string(slot) + "w");
        int lb = frame.b.add("l" + std::to_string(slot) + "b");
        frame.b.connect(frame.border[2 * slot - 2], lb);
        frame.b.connect(frame.border[2 * slot - 1], lw);
        append_head(frame.b, lw, "l" + std::to_string(slot) + "w");
        append_head(frame.b, lb, "l" + std::to_string(slot) + "b");
    }
    return frame.b.finish();
}

LabeledGadget build_variable_gadget(bool modified) {
    PoolFrame frame(7, {2, 3, 4, 6});
    Builder& b = frame.b;
    // surviving borders act as the literal ports
    b.labels.emplace("d1b", frame.border[0]);
    b.labels.emplace("d1w", frame.border[1]);
    b.labels.emplace("d2w", frame.border[3]);
    b.labels.emplace("d3b", frame.border[4]);
    b.labels.emplace("d3w", frame.border[5]);

    int d2b = b.add("d2b");
    append_head(b, d2b, "d2b");
    if (!modified) {
        b.connect(d2b, frame.p[3]);
    } else {
        // relay through the head on the subdivision vertex next to p4: that
        // head's port always carries p4's color, and an edge from a matched
        // port forces the opposite color, so d2b tracks p4 exactly as the
        // direct edge would while p4 stays at degree 4
        b.connect(d2b, b.labels.at("s3b.h6"));
    }
    return b.finish();
}

LabeledGadget build_reduction(const Formula& f) {
    if (!is_well_formed_sat3(f))
        throw std::invalid_argument("formula violates the occurrence-limited form");

    Builder b;
    auto absorb = [&](const LabeledGadget& gadget, const std::string& prefix) {
        int base = b.n;
        b.n += gadget.graph.num_vertices();
        for (auto e : gadget.graph.edges()) b.connect(e.first + base, e.second + base);
        for (const auto& [name, id] : gadget.labels) b.labels.emplace(prefix + name, id + base);
    };

    for (int v = 1; v <= f.num_vars; ++v)
        absorb(build_variable_gadget(true), "x" + std::to_string(v) + ".");
    for (std::size_t j = 0; j < f.clauses.size(); ++j)
        absorb(build_clause_gadget(static_cast<int>(f.clauses[j].size())),
               "c" + std::to_string(j + 1) + ".");

    std::vector<int> positive_used(f.num_vars + 1, 0);
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const std::string cp = "c" + std::to_string(j + 1) + ".";
        for (std::size_t t = 0; t < f.clauses[j].size(); ++t) {
            const int lit = f.clauses[j][t];
            const std::string xp = "x" + std::to_string(std::abs(lit)) + ".";
            const std::string slot = std::to_string(t + 1);
            int port;
            if (lit > 0) {
                port = ++positive_used[lit];
            } else {
                port = 3;
            }
            const std::string dp = "d" + std::to_string(port);
            b.connect(b.labels.at(cp + "l" + slot + "w"), b.labels.at(xp + dp + "w"));
            b.connect(b.labels.at(cp + "l" + slot + "b"), b.labels.at(xp + dp + "b"));
        }
    }
    return b.finish();
}

}  // namespace bm
