#ifndef VIZING_OVERLAY_HPP
#define VIZING_OVERLAY_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "vizing/graph.hpp"

namespace vizing {

/// Scratch colouring layered over a Graph. Reads fall through to the backing
/// store until an edge has been touched; writes stay in the overlay until
/// commit() or are dropped wholesale on discard. Chain constructions run
/// against an overlay so that a failed multi-step attempt leaves the real
/// colouring untouched. Degrees and the edge set always come from the base
/// graph: an overlay only ever recolours.
class Overlay {
public:
    explicit Overlay(const Graph& g) : g_(&g) {}

    const Graph& base() const { return *g_; }
    int degree(VertexId v) const { return g_->degree(v); }
    std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return g_->endpoints(e); }
    VertexId other_endpoint(EdgeId e, VertexId v) const { return g_->other_endpoint(e, v); }

    Colour colour(EdgeId e) const {
        if (!edge_colour_.empty()) {
            auto it = edge_colour_.find(e);
            if (it != edge_colour_.end()) return it->second;
        }
        return g_->colour(e);
    }

    EdgeId edge_with_colour_at(VertexId v, Colour k) const {
        if (!slot_.empty()) {
            auto it = slot_.find(slot_key(v, k));
            if (it != slot_.end()) return it->second;
        }
        return g_->edge_with_colour_at(v, k);
    }

    bool is_available(VertexId v, Colour k) const { return edge_with_colour_at(v, k) == kNoEdge; }

    /// Recolours an edge in the overlay. Same conflict contract as
    /// Graph::set_colour: colliding with a live colour slot is a logic error.
    void set_colour(EdgeId e, Colour k);

    void uncolour(EdgeId e) { set_colour(e, kUncoloured); }

    Colour first_available(VertexId v, int ceiling) const {
        for (Colour k = 1; k <= ceiling; ++k)
            if (is_available(v, k)) return k;
        return kUncoloured;
    }

    /// Net change in the number of coloured edges relative to the base.
    int coloured_delta() const { return coloured_delta_; }

    bool touched() const { return !edge_colour_.empty(); }

    /// Edges whose colour differs from the base graph, with their overlay
    /// colours. Entries whose colour drifted back to the base value are
    /// filtered out.
    std::vector<std::pair<EdgeId, Colour>> changes() const;

    /// Applies all changes to the backing graph. Clears the overlay.
    void commit(Graph& g);

    void discard() {
        edge_colour_.clear();
        slot_.clear();
        coloured_delta_ = 0;
    }

private:
    static std::uint64_t slot_key(VertexId v, Colour k) {
        return (static_cast<std::uint64_t>(v) << 32) | static_cast<std::uint32_t>(k);
    }

    const Graph* g_;
    std::unordered_map<EdgeId, Colour> edge_colour_;
    std::unordered_map<std::uint64_t, EdgeId> slot_;
    int coloured_delta_ = 0;
};

}  // namespace vizing

#endif
