#include "vizing/strict_local.hpp"

#include <algorithm>

namespace vizing {

long long potential_phi(const Graph& g) {
    long long phi = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        int ceil_v = g.degree(v) + 1;
        for (Colour k = 1; k <= ceil_v; ++k)
            if (g.edge_with_colour_at(v, k) == kNoEdge) ++phi;
    }
    return phi;
}

StrictLocalColourer::StrictLocalColourer(Graph& g, StrictLocalOptions opts)
    : g_(g), opts_(opts) {
    phi_ = potential_phi(g_);
    stats_.phi_initial = phi_;
    stats_.phi_final = phi_;
}

long long StrictLocalColourer::phi_delta(EdgeId e, Colour old_k, Colour new_k) const {
    auto [x, y] = g_.endpoints(e);
    long long d = 0;
    if (old_k != kUncoloured) {
        if (old_k <= g_.degree(x) + 1) ++d;
        if (old_k <= g_.degree(y) + 1) ++d;
    }
    if (new_k != kUncoloured) {
        if (new_k <= g_.degree(x) + 1) --d;
        if (new_k <= g_.degree(y) + 1) --d;
    }
    return d;
}

void StrictLocalColourer::shift_and_commit(Overlay& col, const ChainStep& step) {
    auto hook = [this](EdgeId e, Colour old_k, Colour new_k) {
        phi_ += phi_delta(e, old_k, new_k);
    };
    long long phi_pre = phi_;
    std::span<const EdgeId> edges(step.edges);

    shift(col, edges.first(step.fan_size), step.fan_size - 1, hook);
    if (opts_.check_potential) {
        ++stats_.phi_checks;
        if (phi_ > phi_pre)
            throw std::logic_error("potential increased across a fan shift");
    }
    shift(col, edges.subspan(step.fan_size - 1), edges.size() - step.fan_size, hook);

    if (step.status == ChainStep::Status::Augmenting) {
        col.set_colour(step.edges.back(), step.final_colour);
        hook(step.edges.back(), kUncoloured, step.final_colour);
    } else if (opts_.check_potential) {
        ++stats_.phi_checks;
        if (phi_ > phi_pre - 1)
            throw std::logic_error("potential failed to drop across a truncated shift");
    }
    if (opts_.check_potential) {
        long long cap = static_cast<long long>(g_.vertex_count()) * (g_.max_degree() + 1);
        if (phi_ < 0 || phi_ > cap) throw std::logic_error("potential out of [0, n(Delta+1)]");
    }
    col.commit(g_);
}

void StrictLocalColourer::colour_edge(EdgeId e) {
    if (g_.colour(e) != kUncoloured) throw std::invalid_argument("edge already coloured");
    EdgeId current = e;
    VertexId centre = g_.endpoints(e).first;
    long long steps = 0;
    while (true) {
        Overlay col(g_);
        ChainStep step = build_vizing_chain(col, current, centre, Mode::strictly_local());
        ++steps;
        if (step.status == ChainStep::Status::Augmenting) {
            shift_and_commit(col, step);
            ++stats_.chains;
            stats_.phi_final = phi_;
            stats_.longest_multi_step = std::max(stats_.longest_multi_step, steps);
            if (opts_.recompute_every > 0 && stats_.chains % opts_.recompute_every == 0) {
                if (phi_ != potential_phi(g_))
                    throw std::logic_error("incremental potential drifted from recompute");
            }
            return;
        }
        // truncated: the last edge is the next uncoloured edge
        if (opts_.check_truncation_edge) {
            auto [x, y] = g_.endpoints(step.edges.back());
            VertexId w_k = step.fan.leaves.back();
            VertexId w_i = step.fan.leaves[step.fan.repeat_partner];
            for (VertexId banned : {step.fan.centre, w_k, w_i})
                if (x == banned || y == banned)
                    throw std::logic_error("truncation edge touches the fan's special vertices");
        }
        VertexId next_centre = chain_end_vertex(col, step.edges);
        shift_and_commit(col, step);
        ++stats_.truncated_shifts;
        stats_.phi_final = phi_;
        current = step.edges.back();
        centre = next_centre;
    }
}

void StrictLocalColourer::colour_all() {
    for (EdgeId e : g_.edges())
        if (g_.colour(e) == kUncoloured) colour_edge(e);
}

void colour_graph_plain(Graph& g, std::mt19937_64* rng, bool random_tie) {
    Mode mode = Mode::plain(g.max_degree() + 1);
    mode.random_tie = random_tie;
    for (EdgeId e : g.edges()) {
        if (g.colour(e) != kUncoloured) continue;
        Overlay col(g);
        ChainStep step = build_vizing_chain(col, e, g.endpoints(e).first, mode, {}, rng);
        if (step.status != ChainStep::Status::Augmenting)
            throw std::logic_error("plain chain failed to augment");
        shift(col, step.edges, step.edges.size() - 1);
        col.set_colour(step.edges.back(), step.final_colour);
        col.commit(g);
    }
}

}  // namespace vizing
