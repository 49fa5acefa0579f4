#ifndef VIZING_STRICT_LOCAL_HPP
#define VIZING_STRICT_LOCAL_HPP

#include <random>

#include "vizing/chain.hpp"
#include "vizing/graph.hpp"

namespace vizing {

/// Sum over colours k <= Delta+1 of the number of vertices with k available
/// and k <= d(v)+1. Full recompute; the colourer maintains it incrementally.
long long potential_phi(const Graph& g);

struct StrictLocalStats {
    long long chains = 0;            // committed chain shifts
    long long truncated_shifts = 0;  // chains that ended truncated
    long long phi_initial = 0;
    long long phi_final = 0;
    long long phi_checks = 0;  // potential assertions evaluated
    long long longest_multi_step = 0;
};

struct StrictLocalOptions {
    /// Assert per shift that fans never raise the potential and truncated
    /// chains drop it by at least one. Violations throw logic_error.
    bool check_potential = false;
    /// Cross-check the incremental potential against a full recompute every
    /// k committed chains (0 = never).
    int recompute_every = 0;
    /// Assert that truncation edges avoid the fan centre, the last leaf and
    /// the repeated-colour leaf.
    bool check_truncation_edge = false;
};

/// Static colourer: gives every edge uv a colour in [max{d(u), d(v)} + 1]
/// by repeatedly shifting strictly local chains. Truncated shifts strictly
/// decrease the potential, which bounds the total work.
class StrictLocalColourer {
public:
    explicit StrictLocalColourer(Graph& g, StrictLocalOptions opts = {});

    /// Colours one uncoloured edge; previously coloured edges stay coloured.
    void colour_edge(EdgeId e);

    /// Colours every uncoloured edge in increasing edge-id order.
    void colour_all();

    long long phi() const { return phi_; }
    const StrictLocalStats& stats() const { return stats_; }

private:
    void shift_and_commit(Overlay& col, const ChainStep& step);
    long long phi_delta(EdgeId e, Colour old_k, Colour new_k) const;

    Graph& g_;
    StrictLocalOptions opts_;
    StrictLocalStats stats_;
    long long phi_ = 0;
};

/// Classic (Delta+1)-colouring of all uncoloured edges via untruncated
/// chains. With random_tie set, representative choices are drawn uniformly
/// through rng instead of smallest-first.
void colour_graph_plain(Graph& g, std::mt19937_64* rng = nullptr, bool random_tie = false);

}  // namespace vizing

#endif
