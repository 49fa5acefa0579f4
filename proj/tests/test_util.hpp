#ifndef VIZING_TEST_UTIL_HPP
#define VIZING_TEST_UTIL_HPP

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "vizing/graph.hpp"

namespace vztest {

using namespace vizing;

// Quadratic properness oracle: every pair of coloured edges sharing an
// endpoint gets compared directly.
inline bool proper_by_pairs(const Graph& g) {
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        Colour ci = g.colour(es[i]);
        if (ci == kUncoloured) continue;
        auto [a, b] = g.endpoints(es[i]);
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (g.colour(es[j]) != ci) continue;
            auto [c, d] = g.endpoints(es[j]);
            if (a == c || a == d || b == c || b == d) return false;
        }
    }
    return true;
}

// Naive double loop over colours and vertices.
inline long long phi_by_double_loop(const Graph& g) {
    long long phi = 0;
    int delta = g.max_degree();
    for (Colour k = 1; k <= delta + 1; ++k)
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (k <= g.degree(v) + 1 && g.edge_with_colour_at(v, k) == kNoEdge) ++phi;
    return phi;
}

// Breadth-first walk of the component of `root` in the subgraph spanned by
// edges coloured k1 or k2, returned as an edge set.
inline std::set<EdgeId> bichromatic_component_edges(const Graph& g, VertexId root, Colour k1,
                                                    Colour k2) {
    std::set<EdgeId> seen_edges;
    std::vector<VertexId> frontier{root};
    std::set<VertexId> seen_vertices{root};
    while (!frontier.empty()) {
        VertexId v = frontier.back();
        frontier.pop_back();
        for (EdgeId e : g.incident_edges(v)) {
            Colour c = g.colour(e);
            if (c != k1 && c != k2) continue;
            if (!seen_edges.insert(e).second) continue;
            VertexId w = g.other_endpoint(e, v);
            if (seen_vertices.insert(w).second) frontier.push_back(w);
        }
    }
    return seen_edges;
}

// Greedy proper partial colouring within [ceiling]; edges with no free
// colour at both endpoints stay uncoloured.
inline void greedy_partial_colouring(Graph& g, int ceiling, double skip_prob,
                                     std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (EdgeId e : g.edges()) {
        if (skip_prob > 0.0 && unif(rng) < skip_prob) continue;
        auto [u, v] = g.endpoints(e);
        for (Colour k = 1; k <= ceiling; ++k) {
            if (g.edge_with_colour_at(u, k) == kNoEdge && g.edge_with_colour_at(v, k) == kNoEdge) {
                g.set_colour(e, k);
                break;
            }
        }
    }
}

inline Graph random_gnp_for_tests(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unif(rng) < p) g.add_edge(u, v);
    return g;
}

}  // namespace vztest

#endif
