#include "vizing/dynamic.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

namespace vizing {

namespace {

long long ceil_log2(long long n) {
    long long l = 0;
    long long p = 1;
    while (p < n) {
        p *= 2;
        ++l;
    }
    return l;
}

long long saturating_mul(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > LLONG_MAX / b) return LLONG_MAX / 2;
    return a * b;
}

}  // namespace

DynamicColourer::DynamicColourer(int vertex_count, DynamicOptions opts)
    : g_(vertex_count), opts_(opts), rng_(opts.seed) {}

long long DynamicColourer::paper_step_cap() const {
    if (opts_.step_cap > 0) return opts_.step_cap;
    return std::max<long long>(1, 2 * ceil_log2(std::max(2, g_.vertex_count())));
}

long long DynamicColourer::paper_length_cap() const {
    if (opts_.length_cap > 0) return opts_.length_cap;
    long long d1 = g_.max_degree() + 1;
    long long p = 1;
    for (int i = 0; i < 6; ++i) p = saturating_mul(p, d1);
    long long log_n = std::max<long long>(1, ceil_log2(std::max(2, g_.vertex_count())));
    return 1 + saturating_mul(18, saturating_mul(p, log_n));
}

long long DynamicColourer::paper_retry_cap() const {
    if (opts_.retry_cap > 0) return opts_.retry_cap;
    double n = std::max(2, g_.vertex_count());
    return static_cast<long long>(std::ceil((opts_.density_constant + 1) * std::log2(n)));
}

EdgeWeightClass DynamicColourer::compute_class(EdgeId e, Colour k) const {
    auto [x, y] = g_.endpoints(e);
    bool in_x = k <= opts_.eps.ceil_scaled(g_.degree(x));
    bool in_y = k <= opts_.eps.ceil_scaled(g_.degree(y));
    if (in_x && in_y) return EdgeWeightClass::Heavy;
    if (!in_x && !in_y) return EdgeWeightClass::Light;
    return EdgeWeightClass::Neutral;
}

EdgeWeightClass DynamicColourer::classify_edge(EdgeId e) const {
    Colour k = g_.colour(e);
    if (k == kUncoloured) throw std::invalid_argument("classify_edge: edge is uncoloured");
    return compute_class(e, k);
}

void DynamicColourer::ensure_colour(Colour k) {
    if (k >= static_cast<int>(colour_count_.size())) {
        colour_count_.resize(k + 1, 0);
        heavy_count_.resize(k + 1, 0);
        light_count_.resize(k + 1, 0);
        light_queue_.resize(k + 1);
    }
}

void DynamicColourer::enqueue_light(EdgeId e, Colour k) {
    queue_pos_[e] = static_cast<int>(light_queue_[k].size());
    light_queue_[k].push_back(e);
}

void DynamicColourer::dequeue_light(EdgeId e, Colour k) {
    auto it = queue_pos_.find(e);
    if (it == queue_pos_.end()) throw std::logic_error("light edge missing from its queue");
    int pos = it->second;
    auto& q = light_queue_[k];
    EdgeId moved = q.back();
    q[pos] = moved;
    q.pop_back();
    if (moved != e) queue_pos_[moved] = pos;
    queue_pos_.erase(it);
}

void DynamicColourer::apply_colour(EdgeId e, Colour k) {
    Colour old = g_.colour(e);
    if (old == k) return;
    if (old != kUncoloured) {
        EdgeWeightClass cls = static_cast<EdgeWeightClass>(klass_[e]);
        if (cls == EdgeWeightClass::Heavy) --heavy_count_[old];
        if (cls == EdgeWeightClass::Light) {
            --light_count_[old];
            dequeue_light(e, old);
        }
        --colour_count_[old];
        klass_[e] = -1;
    }
    g_.set_colour(e, k);
    ++last_.colour_changes;
    if (k != kUncoloured) {
        ensure_colour(k);
        if (e >= static_cast<int>(klass_.size())) klass_.resize(e + 1, -1);
        EdgeWeightClass cls = compute_class(e, k);
        klass_[e] = static_cast<signed char>(cls);
        if (cls == EdgeWeightClass::Heavy) ++heavy_count_[k];
        if (cls == EdgeWeightClass::Light) {
            ++light_count_[k];
            enqueue_light(e, k);
        }
        ++colour_count_[k];
        if (k > max_colour_) max_colour_ = k;
    }
    while (max_colour_ > 0 && colour_count_[max_colour_] == 0) --max_colour_;
}

void DynamicColourer::reclassify(EdgeId e) {
    Colour k = g_.colour(e);
    if (k == kUncoloured) return;
    EdgeWeightClass old_cls = static_cast<EdgeWeightClass>(klass_[e]);
    EdgeWeightClass new_cls = compute_class(e, k);
    if (old_cls == new_cls) return;
    if (old_cls == EdgeWeightClass::Heavy) --heavy_count_[k];
    if (old_cls == EdgeWeightClass::Light) {
        --light_count_[k];
        dequeue_light(e, k);
    }
    if (new_cls == EdgeWeightClass::Heavy) ++heavy_count_[k];
    if (new_cls == EdgeWeightClass::Light) {
        ++light_count_[k];
        enqueue_light(e, k);
    }
    klass_[e] = static_cast<signed char>(new_cls);
}

void DynamicColourer::commit_overlay(Overlay& col) {
    auto delta = col.changes();
    for (const auto& [e, k] : delta)
        if (g_.colour(e) != kUncoloured) apply_colour(e, kUncoloured);
    for (const auto& [e, k] : delta)
        if (k != kUncoloured) apply_colour(e, k);
    col.discard();
}

bool DynamicColourer::try_colour(EdgeId e, const Palette* palette) {
    Overlay col(g_);
    Mode mode = Mode::eps_local(opts_.eps, palette);
    Truncation trunc =
        palette ? Truncation::random_within(paper_length_cap()) : Truncation::none();
    long long step_cap = paper_step_cap();

    MultiStepChain rec;
    std::unordered_map<EdgeId, int> owner;
    EdgeId current = e;
    int step_idx = 0;

    ChainStep step = build_vizing_chain(col, e, g_.endpoints(e).first, mode, trunc, &rng_);
    while (true) {
        if (step.status == ChainStep::Status::PaletteFailure ||
            step.status == ChainStep::Status::Overlapping)
            return false;
        for (EdgeId ce : step.edges) {
            auto it = owner.find(ce);
            if (it != owner.end()) {
                if (it->second != step_idx - 1 || ce != current) return false;  // overlapping
            } else {
                owner.emplace(ce, step_idx);
            }
        }
        shift(col, step.edges, step.edges.size() - 1);
        rec.steps.push_back({step.edges, step.fan_size, step.kappa1, step.kappa2});

        if (step.status == ChainStep::Status::Augmenting) {
            col.set_colour(step.edges.back(), step.final_colour);
            rec.status = MultiStepChain::Status::Augmenting;
            rec.final_colour = step.final_colour;
            commit_overlay(col);
            last_.chain_steps += static_cast<long long>(rec.steps.size());
            if (opts_.record_chains) committed_.push_back(std::move(rec));
            return true;
        }
        ++step_idx;
        if (step_idx >= step_cap) return false;
        current = step.edges.back();
        VertexId end = chain_end_vertex(col, step.edges);
        step = extend_chain(col, current, end, step.kappa1, step.kappa2, mode, trunc, &rng_);
    }
}

void DynamicColourer::colour_edge(EdgeId e) {
    if (g_.colour(e) != kUncoloured) throw std::invalid_argument("colour_edge: already coloured");
    long long retries = paper_retry_cap();
    for (long long attempt = 0; attempt < retries; ++attempt) {
        ++last_.attempts;
        Palette s = sample_palette(g_, opts_.eps, opts_.density_constant, rng_);
        if (try_colour(e, &s)) return;
    }
    // Deterministic rescue: an untruncated chain over the full per-vertex
    // ranges always augments and keeps the invariant.
    ++last_.fallbacks;
    ++last_.attempts;
    if (!try_colour(e, nullptr))
        throw std::logic_error("full-range chain failed to colour an edge");
}

void DynamicColourer::insert(VertexId u, VertexId v) {
    last_ = UpdateStats{};
    int du = g_.degree(u);
    int dv = g_.degree(v);
    EdgeId e = g_.add_edge(u, v);
    // degree growth can pull incident colours into range; reclassify them
    for (auto [x, d_old] : {std::pair{u, du}, std::pair{v, dv}}) {
        long long lo = opts_.eps.ceil_scaled(d_old);
        long long hi = opts_.eps.ceil_scaled(d_old + 1);
        for (long long k = lo + 1; k <= hi; ++k) {
            EdgeId at = g_.edge_with_colour_at(x, static_cast<Colour>(k));
            if (at != kNoEdge) reclassify(at);
        }
    }
    colour_edge(e);
    last_.max_colour = max_colour_;
    last_.delta = g_.max_degree();
}

void DynamicColourer::erase(VertexId u, VertexId v) {
    EdgeId e = g_.find_edge(u, v);
    if (e == kNoEdge) throw std::invalid_argument("erase: no such edge");
    last_ = UpdateStats{};
    std::vector<EdgeId> recolour;

    Colour k0 = g_.colour(e);
    if (k0 != kUncoloured && compute_class(e, k0) == EdgeWeightClass::Heavy &&
        !light_queue_[k0].empty()) {
        EdgeId light = light_queue_[k0].back();
        apply_colour(light, kUncoloured);
        recolour.push_back(light);
    }
    // colours leaving the endpoint ranges when the degrees drop
    for (VertexId x : {u, v}) {
        int d = g_.degree(x);
        long long lo = opts_.eps.ceil_scaled(d - 1);
        long long hi = opts_.eps.ceil_scaled(d);
        for (long long k = lo + 1; k <= hi; ++k) {
            EdgeId at = g_.edge_with_colour_at(x, static_cast<Colour>(k));
            if (at != kNoEdge && at != e) {
                apply_colour(at, kUncoloured);
                recolour.push_back(at);
            }
        }
    }
    if (g_.colour(e) != kUncoloured) apply_colour(e, kUncoloured);
    g_.remove_edge(e);
    last_.uncoloured_for_recolour = static_cast<long long>(recolour.size());

    while (!recolour.empty()) {
        EdgeId next = recolour.back();
        recolour.pop_back();
        colour_edge(next);
    }
    last_.max_colour = max_colour_;
    last_.delta = g_.max_degree();
}

long long DynamicColourer::invariant_slack(Colour k) const {
    if (k <= 0) throw std::invalid_argument("invariant_slack: colour must be positive");
    long long lhs = 0;
    for (EdgeId e : g_.edges())
        if (g_.colour(e) == k) ++lhs;
    long long rhs = 0;
    for (VertexId v = 0; v < g_.vertex_count(); ++v)
        if (k <= opts_.eps.ceil_scaled(g_.degree(v)) && g_.edge_with_colour_at(v, k) != kNoEdge)
            ++rhs;
    return rhs - lhs;
}

std::vector<EdgeId> DynamicColourer::light_edges(Colour k) const {
    if (k <= 0 || k >= static_cast<int>(light_queue_.size())) return {};
    return light_queue_[k];
}

long long DynamicColourer::queued_light_count(Colour k) const {
    if (k <= 0 || k >= static_cast<int>(light_queue_.size())) return 0;
    return static_cast<long long>(light_queue_[k].size());
}

}  // namespace vizing
