#ifndef VIZING_DYNAMIC_HPP
#define VIZING_DYNAMIC_HPP

#include <random>
#include <unordered_map>
#include <vector>

#include "vizing/chain.hpp"
#include "vizing/eps.hpp"
#include "vizing/graph.hpp"
#include "vizing/palette.hpp"

namespace vizing {

/// Weight class of a coloured edge xy with colour k: how many endpoints
/// have k inside their own range [ceil((1+eps) d)].
enum class EdgeWeightClass { Heavy, Light, Neutral };

struct DynamicOptions {
    Eps eps{1, 2};
    double density_constant = 8.0;
    std::uint64_t seed = 1;
    long long step_cap = 0;    // T; 0 = 2 ceil(log2 n)
    long long length_cap = 0;  // l; 0 = 1 + 18 (Delta+1)^6 ceil(log2 n), per call
    long long retry_cap = 0;   // palette attempts; 0 = ceil((c+1) log2 n)
    bool record_chains = false;
};

struct UpdateStats {
    long long uncoloured_for_recolour = 0;  // recourse ledger of the last delete
    long long colour_changes = 0;           // edge colour transitions applied
    long long attempts = 0;                 // palette attempts across colour calls
    long long chain_steps = 0;              // steps across committed chains
    long long fallbacks = 0;                // deterministic full-range rescues
    int max_colour = 0;
    int delta = 0;
};

/// Fully-dynamic (1+eps)Delta edge colouring, adaptive to the current
/// maximum degree. Inserted edges are coloured by randomized eps-local
/// multi-step chains over sampled palettes; deletions restore the
/// per-colour counting invariant
///     |{e : c(e)=k}| <= |{v : k <= ceil((1+eps) d(v)), k not available}|
/// by uncolouring at most 1 + 2(ceil(eps)+1) edges and recolouring them.
class DynamicColourer {
public:
    DynamicColourer(int vertex_count, DynamicOptions opts);

    void insert(VertexId u, VertexId v);
    void erase(VertexId u, VertexId v);

    /// Algorithm-1 colouring of one uncoloured edge. Exposed for tests and
    /// the recolour loop; insert() calls it after adding the edge.
    void colour_edge(EdgeId e);

    EdgeWeightClass classify_edge(EdgeId e) const;

    /// RHS minus LHS of the counting invariant for colour k, by full
    /// recount. Non-negative whenever the invariant holds.
    long long invariant_slack(Colour k) const;

    const Graph& graph() const { return g_; }
    const DynamicOptions& options() const { return opts_; }
    const UpdateStats& last_update() const { return last_; }
    int max_colour_in_use() const { return max_colour_; }

    std::vector<EdgeId> light_edges(Colour k) const;
    long long queued_light_count(Colour k) const;

    const std::vector<MultiStepChain>& committed_chains() const { return committed_; }
    void clear_committed_chains() { committed_.clear(); }

    long long paper_length_cap() const;  // l for the current Delta
    long long paper_step_cap() const;    // T
    long long paper_retry_cap() const;

private:
    void apply_colour(EdgeId e, Colour k);
    void commit_overlay(Overlay& col);
    void reclassify(EdgeId e);
    void enqueue_light(EdgeId e, Colour k);
    void dequeue_light(EdgeId e, Colour k);
    void ensure_colour(Colour k);
    EdgeWeightClass compute_class(EdgeId e, Colour k) const;
    bool try_colour(EdgeId e, const Palette* palette);

    Graph g_;
    DynamicOptions opts_;
    std::mt19937_64 rng_;

    std::vector<long long> colour_count_;  // edges per colour
    std::vector<long long> heavy_count_;
    std::vector<long long> light_count_;
    std::vector<std::vector<EdgeId>> light_queue_;
    std::unordered_map<EdgeId, int> queue_pos_;
    std::vector<signed char> klass_;  // cached class per coloured edge, -1 otherwise
    int max_colour_ = 0;

    UpdateStats last_;
    std::vector<MultiStepChain> committed_;
};

}  // namespace vizing

#endif
