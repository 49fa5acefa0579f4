#include "vizing/overlay.hpp"

namespace vizing {

void Overlay::set_colour(EdgeId e, Colour k) {
    Colour old = colour(e);
    if (old == k) return;
    auto [u, v] = g_->endpoints(e);
    if (k != kUncoloured) {
        EdgeId at_u = edge_with_colour_at(u, k);
        EdgeId at_v = edge_with_colour_at(v, k);
        if ((at_u != kNoEdge && at_u != e) || (at_v != kNoEdge && at_v != e))
            throw std::logic_error("overlay set_colour would create a colour conflict");
    }
    if (old != kUncoloured) {
        slot_[slot_key(u, old)] = kNoEdge;
        slot_[slot_key(v, old)] = kNoEdge;
        --coloured_delta_;
    }
    edge_colour_[e] = k;
    if (k != kUncoloured) {
        slot_[slot_key(u, k)] = e;
        slot_[slot_key(v, k)] = e;
        ++coloured_delta_;
    }
}

std::vector<std::pair<EdgeId, Colour>> Overlay::changes() const {
    std::vector<std::pair<EdgeId, Colour>> out;
    out.reserve(edge_colour_.size());
    for (const auto& [e, k] : edge_colour_)
        if (g_->colour(e) != k) out.emplace_back(e, k);
    return out;
}

void Overlay::commit(Graph& g) {
    if (&g != g_) throw std::invalid_argument("overlay committed to a different graph");
    auto delta = changes();
    // clear first, then recolour, so transient states never trip the
    // conflict check in Graph::set_colour
    for (const auto& [e, k] : delta)
        if (g.colour(e) != kUncoloured) g.set_colour(e, kUncoloured);
    for (const auto& [e, k] : delta)
        if (k != kUncoloured) g.set_colour(e, k);
    discard();
}

}  // namespace vizing
