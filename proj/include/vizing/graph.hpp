#ifndef VIZING_GRAPH_HPP
#define VIZING_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vizing {

using VertexId = int;
using EdgeId = int;
using Colour = int;

inline constexpr Colour kUncoloured = 0;
inline constexpr EdgeId kNoEdge = -1;

/// Mutable simple graph over a fixed vertex set [0, n) with a partial edge
/// colouring. Each vertex keeps a direct-address table from colour to the
/// unique incident edge carrying that colour, so "which edge at v has colour
/// k" is O(1). Degrees count all incident edges, coloured or not.
class Graph {
public:
    explicit Graph(int vertex_count);

    int vertex_count() const { return static_cast<int>(incident_.size()); }
    int edge_count() const { return live_edges_; }
    int coloured_count() const { return coloured_edges_; }
    int degree(VertexId v) const { return static_cast<int>(incident_[check_vertex(v)].size()); }
    int max_degree() const { return max_degree_; }

    /// Adds the edge {u,v}, uncoloured. Rejects self-loops and duplicates.
    EdgeId add_edge(VertexId u, VertexId v);

    /// Removes an edge; clears its colour slots at both endpoints first.
    void remove_edge(EdgeId e);

    bool has_edge(EdgeId e) const {
        return e >= 0 && e < static_cast<int>(edges_.size()) && edges_[e].alive;
    }
    EdgeId find_edge(VertexId u, VertexId v) const;

    std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
        const EdgeRec& r = rec(e);
        return {r.u, r.v};
    }
    VertexId other_endpoint(EdgeId e, VertexId v) const {
        const EdgeRec& r = rec(e);
        if (r.u == v) return r.v;
        if (r.v == v) return r.u;
        throw std::invalid_argument("other_endpoint: vertex not on edge");
    }

    Colour colour(EdgeId e) const { return rec(e).colour; }

    /// Recolours an edge (kUncoloured clears it). Throws logic_error if the
    /// target colour is already present at an endpoint on another edge; that
    /// always indicates a bug in a chain construction upstream.
    void set_colour(EdgeId e, Colour k);

    /// Recolours without the conflict check, for loading colourings the
    /// verifier should inspect as-is. Under a conflict the per-vertex colour
    /// index degenerates to last-writer-wins, so algorithms must not run on
    /// a graph coloured this way unless check_proper came back clean.
    void set_colour_unchecked(EdgeId e, Colour k);

    /// The unique edge at v coloured k, or kNoEdge. O(1).
    EdgeId edge_with_colour_at(VertexId v, Colour k) const {
        check_vertex(v);
        if (k <= 0) throw std::invalid_argument("edge_with_colour_at: colour must be positive");
        const auto& slots = colour_slot_[v];
        if (k >= static_cast<int>(slots.size())) return kNoEdge;
        return slots[k];
    }

    /// {k in [ceiling] : no incident edge of v has colour k}.
    std::vector<Colour> available_colours(VertexId v, int ceiling) const;

    /// Smallest available colour at v within [ceiling], or kUncoloured if none.
    Colour first_available(VertexId v, int ceiling) const;

    const std::vector<EdgeId>& incident_edges(VertexId v) const {
        return incident_[check_vertex(v)];
    }

    /// Live edge ids in increasing order.
    std::vector<EdgeId> edges() const;

private:
    struct EdgeRec {
        VertexId u = -1;
        VertexId v = -1;
        Colour colour = kUncoloured;
        int pos_u = -1;  // position inside incident_[u]
        int pos_v = -1;
        bool alive = false;
    };

    VertexId check_vertex(VertexId v) const {
        if (v < 0 || v >= static_cast<int>(incident_.size()))
            throw std::invalid_argument("vertex id out of range");
        return v;
    }
    const EdgeRec& rec(EdgeId e) const {
        if (!has_edge(e)) throw std::invalid_argument("unknown edge id");
        return edges_[e];
    }
    static std::uint64_t pair_key(VertexId u, VertexId v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }
    void slot_set(VertexId v, Colour k, EdgeId e);
    void slot_clear(VertexId v, Colour k);
    void detach_incidence(VertexId v, int pos);
    void bump_degree(VertexId v, int delta);

    std::vector<EdgeRec> edges_;
    std::vector<EdgeId> free_ids_;
    std::vector<std::vector<EdgeId>> incident_;
    std::vector<std::vector<EdgeId>> colour_slot_;
    std::unordered_map<std::uint64_t, EdgeId> pair_index_;
    std::vector<int> degree_count_;
    int max_degree_ = 0;
    int live_edges_ = 0;
    int coloured_edges_ = 0;
};

}  // namespace vizing

#endif
