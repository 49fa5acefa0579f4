#ifndef VIZING_PALETTE_HPP
#define VIZING_PALETTE_HPP

#include <optional>
#include <random>
#include <vector>

#include "vizing/eps.hpp"
#include "vizing/graph.hpp"

namespace vizing {

/// Dyadic blocks {2^i, ..., 2^{i+1}-1} covering [1, ceiling]. The last block
/// is clipped at the ceiling so the decomposition is a true partition of
/// [1, ceiling] including colour 1.
struct IntervalDecomposition {
    struct Block {
        Colour lo;
        Colour hi;  // inclusive
        long long size() const { return hi - lo + 1; }
    };
    std::vector<Block> blocks;

    explicit IntervalDecomposition(long long ceiling);

    int count() const { return static_cast<int>(blocks.size()); }
    /// Index of the block containing colour k.
    int block_of(Colour k) const;
};

/// A sampled colour set claimed to contain an eps-available colour for
/// every vertex of positive degree.
struct Palette {
    std::vector<Colour> colours;    // sorted, deduplicated
    std::vector<char> member;       // direct-address membership, index by colour
    Eps eps;
    long long ceiling = 0;          // ceil((1+eps) * max_degree) at sample time
    double density_constant = 8.0;
    std::uint64_t seed = 0;

    bool contains(Colour k) const {
        return k > 0 && k < static_cast<int>(member.size()) && member[k];
    }
    int size() const { return static_cast<int>(colours.size()); }
};

/// Per-interval sampling: an interval is taken whole when it has at most
/// ceil(c * ln n / eps) colours, otherwise that many uniform draws are taken
/// from it (with replacement, deduplicated afterwards).
Palette sample_palette(const Graph& g, const Eps& eps, double density_constant,
                       std::mt19937_64& rng);

/// Number of draws per oversized interval for the given parameters.
long long palette_draws_per_interval(int vertex_count, const Eps& eps, double density_constant);

struct PaletteCheck {
    bool local = true;
    VertexId failing_vertex = -1;
};

/// True iff every vertex of positive degree has an available colour in S
/// within its own range [ceil((1+eps) d(v))].
PaletteCheck is_local_palette(const Palette& s, const Graph& g);

/// Smallest interval index i such that v has at least eps * |I_i| / 4
/// available colours inside I_i within its range. Exists for every vertex
/// of positive degree; absence is reported as std::logic_error because it
/// would contradict the density guarantee the sampler relies on.
int dense_interval(const Graph& g, VertexId v, const Eps& eps);

}  // namespace vizing

#endif
