#pragma once

// Decomposition graphs: vertices are conjugacy classes (under the rational
// affine group) of maps reachable from B by elementary transformations
// V o U -> U o V, edges carry the witnesses.

#include <cstddef>
#include <string>
#include <vector>

#include "ritt/algebra.hpp"
#include "ritt/normal_forms.hpp"

namespace ritt {

struct ElementaryTransform {
    Poly u, v;     // f = v o u, u monic with u(0) = 0
    Poly result;   // u o v
};

/// One transform per proper divisor of deg f admitting a right factor,
/// ordered by deg u. Empty for prime f. deg f >= 2.
std::vector<ElementaryTransform> elementary_transforms(const Poly& f);

struct GammaEdge {
    std::size_t from, to;
    Poly u, v;             // vertices[from] = v o u exactly
    Moebius conjugator;    // vertices[to] = conjugate(u o v, conjugator)
};

/// A loop dropped from the loop-free view, with witnesses that commute
/// exactly: u o v = v o u = vertices[vertex].
struct LoopRemoval {
    std::size_t edge;
    Poly u, v;
};

struct DecompGraph {
    std::vector<Poly> vertices;  // conjugacy-canonical, root first
    std::vector<GammaEdge> edges;
    std::size_t root = 0;
    bool closed = true;          // false when the vertex budget cut the search
    std::vector<LoopRemoval> loop_removals;

    /// Non-loop edge indices (the loop-free view).
    std::vector<std::size_t> loop_free_edges() const;
};

/// Breadth-first closure from conjugacy_canonical(b). Vertices beyond
/// max_vertices are not added and the graph is flagged as not closed.
DecompGraph build_gamma(const Poly& b, std::size_t max_vertices = 10000);

struct GraphPredicates {
    bool is_complete_without_loops;
    bool disconnected_without_root;  // false when fewer than two vertices remain
};

/// Throws TruncatedGraph for a graph that is not closed.
GraphPredicates graph_predicates(const DecompGraph& g);

/// Deterministic DOT text.
std::string export_dot(const DecompGraph& g);

}  // namespace ritt
