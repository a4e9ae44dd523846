#include "ritt/dgraph.hpp"

#include <deque>
#include <map>
#include <set>

#include "ritt/decompose.hpp"
#include "ritt/errors.hpp"
#include "ritt/integer.hpp"

namespace ritt {

std::vector<ElementaryTransform> elementary_transforms(const Poly& f) {
    const int d = f.degree();
    if (d < 2) throw PreconditionError("elementary_transforms: degree must be at least 2");
    std::vector<ElementaryTransform> out;
    for (unsigned m : divisors(static_cast<unsigned>(d))) {
        if (m == 1 || m == static_cast<unsigned>(d)) continue;
        auto rf = right_factor(f, m);
        if (!rf) continue;
        Poly result = compose(rf->right, rf->left);
        out.push_back({std::move(rf->right), std::move(rf->left), std::move(result)});
    }
    return out;
}

std::vector<std::size_t> DecompGraph::loop_free_edges() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].from != edges[i].to) out.push_back(i);
    return out;
}

DecompGraph build_gamma(const Poly& b, std::size_t max_vertices) {
    if (b.degree() < 2) throw PreconditionError("build_gamma: degree must be at least 2");
    if (max_vertices == 0) throw PreconditionError("build_gamma: empty vertex budget");
    DecompGraph g;
    std::map<std::string, std::size_t> index;
    g.vertices.push_back(conjugacy_canonical(b).canonical);
    index.emplace(to_string(g.vertices[0]), 0);

    for (std::size_t cur = 0; cur < g.vertices.size(); ++cur) {
        const Poly f = g.vertices[cur];
        for (auto& t : elementary_transforms(f)) {
            ConjugacyNormal cn = conjugacy_canonical(t.result);
            const std::string key = to_string(cn.canonical);
            auto it = index.find(key);
            if (it == index.end()) {
                if (g.vertices.size() >= max_vertices) {
                    g.closed = false;
                    continue;
                }
                it = index.emplace(key, g.vertices.size()).first;
                g.vertices.push_back(cn.canonical);
            }
            const std::size_t to = it->second;
            if (to == cur) {
                // Re-normalized witnesses C^-1 o u and v o C commute.
                const Moebius ci = cn.conjugator.inverse();
                Poly u2 = compose(ci.as_poly(), t.u);
                Poly v2 = compose(t.v, cn.conjugator.as_poly());
                if (!(compose(u2, v2) == compose(v2, u2)))
                    throw ConsistencyFailure("loop witnesses fail to commute after normalization");
                g.loop_removals.push_back({g.edges.size(), std::move(u2), std::move(v2)});
            }
            g.edges.push_back({cur, to, std::move(t.u), std::move(t.v), cn.conjugator});
        }
    }
    return g;
}

GraphPredicates graph_predicates(const DecompGraph& g) {
    if (!g.closed) throw TruncatedGraph("graph was truncated by its vertex budget");
    const std::size_t n = g.vertices.size();
    std::set<std::pair<std::size_t, std::size_t>> adj;
    for (std::size_t e : g.loop_free_edges()) {
        const auto [a, b] = std::minmax(g.edges[e].from, g.edges[e].to);
        adj.emplace(a, b);
    }
    GraphPredicates out{adj.size() == n * (n - 1) / 2, false};

    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
        if (i != g.root) rest.push_back(i);
    if (rest.size() >= 2) {
        std::set<std::size_t> seen{rest.front()};
        std::deque<std::size_t> queue{rest.front()};
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop_front();
            for (const auto& [a, b] : adj) {
                if (a == g.root || b == g.root) continue;
                const std::size_t y = a == x ? b : (b == x ? a : n);
                if (y != n && seen.insert(y).second) queue.push_back(y);
            }
        }
        out.disconnected_without_root = seen.size() != rest.size();
    }
    return out;
}

std::string export_dot(const DecompGraph& g) {
    std::string s;
    s += "// decomposition graph over the rational affine group: vertices are Q-affine conjugacy classes\n";
    s += "// closed: " + std::string(g.closed ? "yes" : "no (vertex budget reached)") + "\n";
    s += "digraph gamma {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        s += "  v" + std::to_string(i) + " [label=\"" + to_string(g.vertices[i]) + "\"";
        if (i == g.root) s += ", shape=doublecircle";
        s += "];\n";
    }
    for (const auto& e : g.edges) {
        s += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + " [label=\"U=" + to_string(e.u) +
             ", V=" + to_string(e.v) + "\"];\n";
    }
    s += "}\n";
    return s;
}

}  // namespace ritt
