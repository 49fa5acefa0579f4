#include "vizing/chain.hpp"

#include <algorithm>
#include <sstream>

namespace vizing {

long long Mode::leaf_ceiling(const Overlay& col, VertexId w) const {
    switch (kind) {
        case Kind::Plain:
            return plain_ceiling;
        case Kind::StrictlyLocal:
            return col.degree(w) + 1;
        case Kind::EpsLocal:
            return eps.ceil_scaled(col.degree(w));
    }
    return 0;
}

namespace {

// Enumerates the eligible colours of w in ascending order: available at w,
// within the mode ceiling, and inside the palette when one is active.
template <typename F>
void for_each_eligible(const Overlay& col, VertexId w, const Mode& mode, F&& fn) {
    long long ceil_w = mode.leaf_ceiling(col, w);
    if (mode.kind == Mode::Kind::EpsLocal && mode.palette != nullptr) {
        for (Colour k : mode.palette->colours) {
            if (k > ceil_w) break;
            if (col.is_available(w, k)) fn(k);
        }
    } else {
        for (Colour k = 1; k <= ceil_w; ++k)
            if (col.is_available(w, k)) fn(k);
    }
}

Colour pick(const std::vector<Colour>& cands, const Mode& mode, std::mt19937_64* rng) {
    if (cands.empty()) return kUncoloured;
    if (!mode.random_tie || rng == nullptr || cands.size() == 1) return cands.front();
    std::uniform_int_distribution<std::size_t> dist(0, cands.size() - 1);
    return cands[dist(*rng)];
}

}  // namespace

FanBuild build_fan(const Overlay& col, VertexId centre, VertexId first_leaf, const Mode& mode,
                   const FanOptions& opts, std::mt19937_64* rng) {
    FanBuild out;
    Fan& fan = out.fan;
    fan.centre = centre;
    fan.leaves.push_back(first_leaf);
    fan.edges.push_back(col.base().find_edge(centre, first_leaf));
    if (fan.edges.back() == kNoEdge) throw std::invalid_argument("fan: no edge centre-first_leaf");
    if (col.colour(fan.edges.back()) != kUncoloured)
        throw std::invalid_argument("fan: first edge must be uncoloured");

    std::vector<Colour> shared, extend;
    std::vector<std::pair<Colour, int>> repeated;  // colour, partner leaf index
    int guard = col.degree(centre) + 2;

    while (true) {
        if (--guard < 0) throw std::logic_error("fan construction failed to terminate");
        VertexId w = fan.leaves.back();
        shared.clear();
        repeated.clear();
        extend.clear();
        bool reuse_possible = false;

        for_each_eligible(col, w, mode, [&](Colour k) {
            if (col.is_available(centre, k)) {
                shared.push_back(k);
                return;
            }
            if (opts.extension && (k == opts.avoid1 || k == opts.avoid2)) {
                // avoid1 is available at the centre, so only avoid2 lands here
                if (k == opts.avoid2) reuse_possible = true;
                return;
            }
            // does k sit on an earlier fan edge? (edge j+1 carries reps[j])
            for (std::size_t i = 0; i < fan.reps.size(); ++i) {
                if (fan.reps[i] == k) {
                    repeated.emplace_back(k, static_cast<int>(i));
                    return;
                }
            }
            extend.push_back(k);
        });

        if (!shared.empty()) {
            fan.reps.push_back(pick(shared, mode, rng));
            fan.termination = Fan::Termination::SharedWithCentre;
            return out;
        }
        if (!repeated.empty()) {
            std::size_t idx = 0;
            if (mode.random_tie && rng != nullptr && repeated.size() > 1) {
                std::uniform_int_distribution<std::size_t> dist(0, repeated.size() - 1);
                idx = dist(*rng);
            }
            fan.reps.push_back(repeated[idx].first);
            fan.repeat_partner = repeated[idx].second;
            fan.termination = Fan::Termination::RepeatedColour;
            return out;
        }
        if (!extend.empty()) {
            Colour k = pick(extend, mode, rng);
            fan.reps.push_back(k);
            EdgeId next_edge = col.edge_with_colour_at(centre, k);
            if (next_edge == kNoEdge)
                throw std::logic_error("fan: extension colour not present at centre");
            VertexId next = col.other_endpoint(next_edge, centre);
            fan.leaves.push_back(next);
            fan.edges.push_back(next_edge);
            continue;
        }
        if (opts.extension && reuse_possible) {
            fan.reps.push_back(opts.avoid2);
            fan.termination = Fan::Termination::ReusedPathColour;
            return out;
        }
        if (mode.kind == Mode::Kind::EpsLocal && mode.palette != nullptr) {
            out.palette_failure = true;
            return out;
        }
        throw std::logic_error("fan construction exhausted; no eligible colour at a leaf");
    }
}

BichromaticWalk walk_bichromatic(const Overlay& col, VertexId root, Colour k1, Colour k2,
                                 std::optional<long long> limit) {
    if (k1 == k2 || k1 <= 0 || k2 <= 0)
        throw std::invalid_argument("walk_bichromatic: need two distinct positive colours");
    BichromaticWalk walk;
    walk.vertices.push_back(root);
    EdgeId e1 = col.edge_with_colour_at(root, k1);
    EdgeId e2 = col.edge_with_colour_at(root, k2);
    if (e1 != kNoEdge && e2 != kNoEdge)
        throw std::logic_error("walk_bichromatic: root is interior to its component");
    EdgeId next = (e1 != kNoEdge) ? e1 : e2;
    VertexId at = root;
    long long safety = 2LL * col.base().edge_count() + 2;
    while (next != kNoEdge) {
        if (limit && static_cast<long long>(walk.edges.size()) >= *limit) {
            walk.limited = true;
            break;
        }
        if (--safety < 0) throw std::logic_error("walk_bichromatic: component is not a path");
        Colour here = col.colour(next);
        walk.edges.push_back(next);
        at = col.other_endpoint(next, at);
        walk.vertices.push_back(at);
        Colour follow = (here == k1) ? k2 : k1;
        next = col.edge_with_colour_at(at, follow);
    }
    return walk;
}

std::optional<long long> first_strictness_violation(const Overlay& col,
                                                    std::span<const EdgeId> path, Colour k1,
                                                    Colour k2) {
    for (std::size_t i = 0; i < path.size(); ++i) {
        Colour here = col.colour(path[i]);
        if (here != k1 && here != k2)
            throw std::invalid_argument("path edge not coloured k1 or k2");
        Colour flip = (here == k1) ? k2 : k1;
        auto [x, y] = col.endpoints(path[i]);
        if (flip > std::max(col.degree(x), col.degree(y)) + 1)
            return static_cast<long long>(i) + 1;
    }
    return std::nullopt;
}

namespace {

// Representative colour for the centre within its mode ceiling, skipping
// the (optional) two forbidden colours. kUncoloured when none exists.
Colour pick_centre_colour(const Overlay& col, VertexId centre, const Mode& mode, Colour skip1,
                          Colour skip2, std::mt19937_64* rng) {
    std::vector<Colour> cands;
    for_each_eligible(col, centre, mode, [&](Colour k) {
        if (k != skip1 && k != skip2) cands.push_back(k);
    });
    return pick(cands, mode, rng);
}

ChainStep assemble(const Overlay& col, Fan&& fan, const Mode& mode, const Truncation& trunc,
                   std::mt19937_64* rng, const FanOptions& opts) {
    ChainStep step;
    step.fan = fan;

    if (fan.termination == Fan::Termination::SharedWithCentre) {
        step.status = ChainStep::Status::Augmenting;
        step.edges = fan.edges;
        step.fan_size = static_cast<int>(fan.edges.size());
        step.final_colour = fan.reps.back();
        return step;
    }

    Colour k2 = fan.reps.back();
    Colour k1;
    if (fan.termination == Fan::Termination::ReusedPathColour) {
        k1 = opts.avoid1;
        k2 = opts.avoid2;
    } else {
        Colour skip1 = opts.extension ? opts.avoid1 : kUncoloured;
        Colour skip2 = opts.extension ? opts.avoid2 : kUncoloured;
        k1 = pick_centre_colour(col, fan.centre, mode, skip1, skip2, rng);
        if (k1 == kUncoloured) {
            if (mode.kind == Mode::Kind::EpsLocal && mode.palette != nullptr) {
                step.status = ChainStep::Status::PaletteFailure;
                return step;
            }
            throw std::logic_error("no representative colour available at the fan centre");
        }
    }
    step.kappa1 = k1;
    step.kappa2 = k2;

    VertexId w_k = fan.leaves.back();
    BichromaticWalk walk = walk_bichromatic(col, w_k, k1, k2);
    long long len = static_cast<long long>(walk.edges.size());
    step.walked_length = len;

    // truncation decision
    std::optional<long long> cut;
    if (mode.kind == Mode::Kind::StrictlyLocal) {
        cut = first_strictness_violation(col, walk.edges, k1, k2);
    } else if (trunc.kind == Truncation::Kind::FixedCut && len > trunc.value) {
        cut = trunc.value;
    } else if (trunc.kind == Truncation::Kind::RandomWithin && len > trunc.value) {
        if (rng == nullptr) throw std::invalid_argument("random truncation needs an rng");
        std::uniform_int_distribution<long long> dist(1, trunc.value);
        cut = dist(*rng);
    }

    if (cut) {
        step.status = ChainStep::Status::Truncated;
        step.edges = fan.edges;
        step.fan_size = static_cast<int>(fan.edges.size());
        step.edges.insert(step.edges.end(), walk.edges.begin(), walk.edges.begin() + *cut);
        return step;
    }

    step.status = ChainStep::Status::Augmenting;
    if (len == 0) {
        // w_k is isolated in G[k1,k2]; k1 is free at both ends of the last fan edge
        step.edges = fan.edges;
        step.fan_size = static_cast<int>(fan.edges.size());
        step.final_colour = k1;
        return step;
    }

    VertexId z = walk.vertices.back();
    if (z == fan.centre) {
        // the path returns to the centre through its k2-coloured fan edge
        if (fan.termination == Fan::Termination::ReusedPathColour) {
            // that edge belongs to the previous step's path, not this fan
            step.status = ChainStep::Status::Overlapping;
            return step;
        }
        int junction = fan.repeat_partner + 1;
        if (walk.edges.back() != fan.edges[junction])
            throw std::logic_error("path into the centre does not use the repeated fan edge");
        step.edges.assign(fan.edges.begin(), fan.edges.begin() + junction + 1);
        step.fan_size = static_cast<int>(step.edges.size());
        for (long long i = len - 2; i >= 0; --i) step.edges.push_back(walk.edges[i]);
        step.final_colour = k2;
        return step;
    }
    if (fan.termination == Fan::Termination::RepeatedColour &&
        z == fan.leaves[fan.repeat_partner]) {
        // trim the fan to w_i and traverse the path backwards from there
        step.edges.assign(fan.edges.begin(), fan.edges.begin() + fan.repeat_partner + 1);
        step.fan_size = static_cast<int>(step.edges.size());
        for (long long i = len - 1; i >= 0; --i) step.edges.push_back(walk.edges[i]);
        step.final_colour = k2;
        return step;
    }
    step.edges = fan.edges;
    step.fan_size = static_cast<int>(fan.edges.size());
    step.edges.insert(step.edges.end(), walk.edges.begin(), walk.edges.end());
    step.final_colour = (col.colour(walk.edges.back()) == k1) ? k2 : k1;
    return step;
}

}  // namespace

ChainStep build_vizing_chain(const Overlay& col, EdgeId e, VertexId centre, const Mode& mode,
                             const Truncation& trunc, std::mt19937_64* rng) {
    if (col.colour(e) != kUncoloured)
        throw std::invalid_argument("build_vizing_chain: edge must be uncoloured");
    VertexId leaf = col.other_endpoint(e, centre);
    FanBuild fb = build_fan(col, centre, leaf, mode, {}, rng);
    if (fb.palette_failure) {
        ChainStep step;
        step.status = ChainStep::Status::PaletteFailure;
        return step;
    }
    return assemble(col, std::move(fb.fan), mode, trunc, rng, {});
}

ChainStep extend_chain(const Overlay& col, EdgeId last_edge, VertexId chain_end, Colour prev_k1,
                       Colour prev_k2, const Mode& mode, const Truncation& trunc,
                       std::mt19937_64* rng) {
    if (col.colour(last_edge) != kUncoloured)
        throw std::invalid_argument("extend_chain: truncation edge must be uncoloured");
    // exactly one previous path colour is available at the chain end; it
    // becomes avoid1 (the colour the new path may reuse at the centre)
    bool miss1 = col.is_available(chain_end, prev_k1);
    bool miss2 = col.is_available(chain_end, prev_k2);
    if (miss1 == miss2)
        throw std::logic_error("extend_chain: chain end must miss exactly one previous colour");
    FanOptions opts;
    opts.extension = true;
    opts.avoid1 = miss1 ? prev_k1 : prev_k2;
    opts.avoid2 = miss1 ? prev_k2 : prev_k1;
    VertexId leaf = col.other_endpoint(last_edge, chain_end);
    FanBuild fb = build_fan(col, chain_end, leaf, mode, opts, rng);
    if (fb.palette_failure) {
        ChainStep step;
        step.status = ChainStep::Status::PaletteFailure;
        return step;
    }
    return assemble(col, std::move(fb.fan), mode, trunc, rng, opts);
}

void shift(Overlay& col, std::span<const EdgeId> chain, std::size_t j,
           const ColourChangeHook& hook) {
    if (chain.empty()) return;
    if (j > chain.size() - 1) throw std::invalid_argument("shift index out of range");
    if (col.colour(chain[0]) != kUncoloured)
        throw std::logic_error("shift: first chain edge must be uncoloured");
    for (std::size_t i = 0; i < j; ++i) {
        Colour moving = col.colour(chain[i + 1]);
        if (moving == kUncoloured) throw std::logic_error("shift: interior chain edge uncoloured");
        col.uncolour(chain[i + 1]);
        if (hook) hook(chain[i + 1], moving, kUncoloured);
        col.set_colour(chain[i], moving);
        if (hook) hook(chain[i], kUncoloured, moving);
    }
}

VertexId chain_end_vertex(const Overlay& col, std::span<const EdgeId> chain) {
    if (chain.size() < 2) throw std::invalid_argument("chain_end_vertex: need two edges");
    auto [a, b] = col.endpoints(chain[chain.size() - 1]);
    auto [c, d] = col.endpoints(chain[chain.size() - 2]);
    if (a == c || a == d) return a;
    if (b == c || b == d) return b;
    throw std::logic_error("chain_end_vertex: last two edges are not adjacent");
}

std::string ChainTrace::str() const {
    std::ostringstream os;
    for (std::size_t s = 0; s < steps.size(); ++s) {
        os << "step " << s + 1 << ":";
        for (const auto& t : steps[s]) os << " (" << t.e << "," << t.pre << "," << t.post << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace vizing
