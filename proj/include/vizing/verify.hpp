#ifndef VIZING_VERIFY_HPP
#define VIZING_VERIFY_HPP

#include <random>
#include <string>
#include <vector>

#include "vizing/chain.hpp"
#include "vizing/eps.hpp"
#include "vizing/graph.hpp"

namespace vizing {

struct Violation {
    enum class Kind { Properness, StrictLocality, Invariant61, Overlap, PackingBound };

    Violation() = default;
    explicit Violation(Kind k) : kind(k) {}

    Kind kind = Kind::Properness;
    EdgeId edge_a = kNoEdge;
    EdgeId edge_b = kNoEdge;
    VertexId vertex = -1;
    Colour colour = kUncoloured;
    std::string detail;

    std::string str(const Graph& g) const;
};

/// Conflicting coloured edge pairs, by per-vertex recount built from the
/// edge list alone (the colour index is never consulted).
std::vector<Violation> check_proper(const Graph& g);

/// Coloured edges uv with c(uv) > max{d(u), d(v)} + 1.
std::vector<Violation> check_strict_local(const Graph& g);

/// Colours k whose edge count exceeds the number of vertices v with k in
/// range [ceil((1+eps) d(v))] and k occupied at v. Full recount.
std::vector<Violation> check_invariant61(const Graph& g, const Eps& eps);

/// Definition of a non-overlapping multi-step chain: consecutive steps
/// share exactly the connecting edge, non-consecutive steps share nothing,
/// and no step before the last repeats an edge internally.
std::vector<Violation> check_non_overlapping(const MultiStepChain& chain);

/// One 1-step chain per root vertex, all built on the same colouring.
struct CensusChain {
    VertexId root = -1;
    std::vector<EdgeId> edges;
};

/// Builds the family: for every vertex with an incident uncoloured edge,
/// one full (untruncated) chain centred there. Randomized variants draw
/// tie-breaks from rng instead of taking the smallest colour.
std::vector<CensusChain> build_census_family(const Graph& g, bool randomized,
                                             std::mt19937_64* rng);

struct CensusReport {
    long long chain_count = 0;
    long long max_membership = 0;  // over coloured edges
    long long membership_bound = 0;  // 4 Delta^2
    long long union_vertices = 0;
    long long union_edges = 0;
    bool membership_ok = true;
    bool density_ok = true;  // |E(H)| <= Delta/2 |V(H)|
    std::vector<Violation> violations;
};

/// Per-edge chain-membership counts and the density of the union subgraph,
/// checked against the packing bounds.
CensusReport census_one_step(const Graph& g, const std::vector<CensusChain>& family);

std::string violations_to_string(const Graph& g, const std::vector<Violation>& vs);

}  // namespace vizing

#endif
