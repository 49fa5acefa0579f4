#include "vizing/graph.hpp"

#include <algorithm>

namespace vizing {

Graph::Graph(int vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be non-negative");
    incident_.resize(vertex_count);
    colour_slot_.resize(vertex_count);
    degree_count_.assign(std::max(1, vertex_count), 0);
    if (vertex_count > 0) degree_count_[0] = vertex_count;
}

// Called after incident_[v] has been resized by +-1; keeps the degree
// histogram and the running maximum degree consistent.
void Graph::bump_degree(VertexId v, int delta) {
    int d = static_cast<int>(incident_[v].size());
    int prev = d - delta;
    degree_count_[prev]--;
    if (d >= static_cast<int>(degree_count_.size())) degree_count_.resize(d + 1, 0);
    degree_count_[d]++;
    if (d > max_degree_) max_degree_ = d;
    while (max_degree_ > 0 && degree_count_[max_degree_] == 0) --max_degree_;
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    std::uint64_t key = pair_key(u, v);
    if (pair_index_.count(key)) throw std::invalid_argument("duplicate edge");

    EdgeId e;
    if (!free_ids_.empty()) {
        e = free_ids_.back();
        free_ids_.pop_back();
    } else {
        e = static_cast<EdgeId>(edges_.size());
        edges_.emplace_back();
    }
    EdgeRec& r = edges_[e];
    r.u = u;
    r.v = v;
    r.colour = kUncoloured;
    r.alive = true;
    r.pos_u = static_cast<int>(incident_[u].size());
    incident_[u].push_back(e);
    r.pos_v = static_cast<int>(incident_[v].size());
    incident_[v].push_back(e);
    pair_index_.emplace(key, e);
    ++live_edges_;
    bump_degree(u, 1);
    bump_degree(v, 1);
    return e;
}

void Graph::detach_incidence(VertexId v, int pos) {
    auto& list = incident_[v];
    EdgeId moved = list.back();
    list[pos] = moved;
    list.pop_back();
    if (pos < static_cast<int>(list.size())) {
        EdgeRec& m = edges_[moved];
        if (m.u == v)
            m.pos_u = pos;
        else
            m.pos_v = pos;
    }
}

void Graph::remove_edge(EdgeId e) {
    const EdgeRec snapshot = rec(e);
    if (snapshot.colour != kUncoloured) set_colour(e, kUncoloured);
    EdgeRec& r = edges_[e];
    detach_incidence(r.u, r.pos_u);
    detach_incidence(r.v, r.pos_v);
    pair_index_.erase(pair_key(r.u, r.v));
    r.alive = false;
    --live_edges_;
    bump_degree(snapshot.u, -1);
    bump_degree(snapshot.v, -1);
    free_ids_.push_back(e);
}

EdgeId Graph::find_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    auto it = pair_index_.find(pair_key(u, v));
    return it == pair_index_.end() ? kNoEdge : it->second;
}

void Graph::slot_set(VertexId v, Colour k, EdgeId e) {
    auto& slots = colour_slot_[v];
    if (k >= static_cast<int>(slots.size())) {
        std::size_t cap = std::max<std::size_t>(slots.size() * 2, k + 1);
        slots.resize(cap, kNoEdge);
    }
    slots[k] = e;
}

void Graph::slot_clear(VertexId v, Colour k) {
    auto& slots = colour_slot_[v];
    if (k < static_cast<int>(slots.size())) slots[k] = kNoEdge;
}

void Graph::set_colour(EdgeId e, Colour k) {
    const EdgeRec& r = rec(e);
    if (k != kUncoloured) {
        EdgeId at_u = edge_with_colour_at(r.u, k);
        EdgeId at_v = edge_with_colour_at(r.v, k);
        if ((at_u != kNoEdge && at_u != e) || (at_v != kNoEdge && at_v != e))
            throw std::logic_error("set_colour would create a colour conflict");
    }
    set_colour_unchecked(e, k);
}

void Graph::set_colour_unchecked(EdgeId e, Colour k) {
    const EdgeRec& r = rec(e);
    if (k < 0) throw std::invalid_argument("negative colour");
    if (r.colour == k) return;
    if (r.colour != kUncoloured) {
        // only clear slots still pointing at e; conflicting loads may have
        // overwritten them
        if (edge_with_colour_at(r.u, r.colour) == e) slot_clear(r.u, r.colour);
        if (edge_with_colour_at(r.v, r.colour) == e) slot_clear(r.v, r.colour);
        --coloured_edges_;
    }
    edges_[e].colour = k;
    if (k != kUncoloured) {
        slot_set(r.u, k, e);
        slot_set(r.v, k, e);
        ++coloured_edges_;
    }
}

std::vector<Colour> Graph::available_colours(VertexId v, int ceiling) const {
    check_vertex(v);
    if (ceiling < 1) throw std::invalid_argument("ceiling must be at least 1");
    std::vector<Colour> out;
    const auto& slots = colour_slot_[v];
    for (Colour k = 1; k <= ceiling; ++k)
        if (k >= static_cast<int>(slots.size()) || slots[k] == kNoEdge) out.push_back(k);
    return out;
}

Colour Graph::first_available(VertexId v, int ceiling) const {
    check_vertex(v);
    const auto& slots = colour_slot_[v];
    for (Colour k = 1; k <= ceiling; ++k)
        if (k >= static_cast<int>(slots.size()) || slots[k] == kNoEdge) return k;
    return kUncoloured;
}

std::vector<EdgeId> Graph::edges() const {
    std::vector<EdgeId> out;
    out.reserve(live_edges_);
    for (EdgeId e = 0; e < static_cast<int>(edges_.size()); ++e)
        if (edges_[e].alive) out.push_back(e);
    return out;
}

}  // namespace vizing
