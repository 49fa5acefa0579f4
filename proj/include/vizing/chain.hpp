#ifndef VIZING_CHAIN_HPP
#define VIZING_CHAIN_HPP

#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "vizing/eps.hpp"
#include "vizing/overlay.hpp"
#include "vizing/palette.hpp"

namespace vizing {

/// Colour discipline for fan and path construction.
///
///  - Plain: representative colours drawn from [ceiling] (classically
///    ceiling = max_degree + 1).
///  - StrictlyLocal: each vertex w draws from [d(w) + 1]; paths are cut at
///    the first edge whose recolouring would leave some edge xy with a
///    colour above max{d(x), d(y)} + 1.
///  - EpsLocal: each vertex w draws from [ceil((1+eps) d(w))], intersected
///    with a sampled palette when one is supplied.
struct Mode {
    enum class Kind { Plain, StrictlyLocal, EpsLocal };
    Kind kind = Kind::Plain;
    int plain_ceiling = 0;
    Eps eps{};
    const Palette* palette = nullptr;
    bool random_tie = false;  // uniform choice among candidates instead of smallest

    long long leaf_ceiling(const Overlay& col, VertexId w) const;

    static Mode plain(int ceiling) {
        Mode m;
        m.kind = Kind::Plain;
        m.plain_ceiling = ceiling;
        return m;
    }
    static Mode strictly_local() {
        Mode m;
        m.kind = Kind::StrictlyLocal;
        return m;
    }
    static Mode eps_local(const Eps& eps, const Palette* palette) {
        Mode m;
        m.kind = Kind::EpsLocal;
        m.eps = eps;
        m.palette = palette;
        m.random_tie = true;
        return m;
    }
};

/// A fan: centre u plus leaves w_1..w_k where the colour of edge u w_{j+1}
/// is the representative available colour of w_j.
struct Fan {
    enum class Termination {
        SharedWithCentre,  // last rep colour is also available at the centre
        RepeatedColour,    // last rep colour equals an earlier fan edge colour
        ReusedPathColour,  // extension fell back to the previous path colour
        Exhausted,         // construction ran out of colours; always a bug
    };

    VertexId centre = -1;
    std::vector<VertexId> leaves;
    std::vector<Colour> reps;
    std::vector<EdgeId> edges;  // edges[j] = centre--leaves[j]; edges[0] uncoloured
    Termination termination = Termination::Exhausted;
    int repeat_partner = -1;  // leaf index with the same rep, for RepeatedColour
};

/// Extension discipline: representative colours must dodge the previous
/// path's two colours; reuse of avoid2 is the last resort (and turns the
/// next path into an (avoid1, avoid2) path again).
struct FanOptions {
    bool extension = false;
    Colour avoid1 = 0;  // previous path colour that is available at the new centre
    Colour avoid2 = 0;  // previous path colour missing at the far endpoint
};

struct FanBuild {
    Fan fan;
    bool palette_failure = false;
};

FanBuild build_fan(const Overlay& col, VertexId centre, VertexId first_leaf, const Mode& mode,
                   const FanOptions& opts = {}, std::mt19937_64* rng = nullptr);

/// Walk of a bichromatic path component from one of its endpoints.
struct BichromaticWalk {
    std::vector<EdgeId> edges;
    std::vector<VertexId> vertices;  // vertices.size() == edges.size() + 1
    bool limited = false;            // stopped by the caller's limit
};

/// Follows the (k1,k2)-component from root. The root must be missing at
/// least one of the two colours; a root interior to its component is a
/// contract violation.
BichromaticWalk walk_bichromatic(const Overlay& col, VertexId root, Colour k1, Colour k2,
                                 std::optional<long long> limit = std::nullopt);

/// 1-based index of the first path edge xy whose post-shift colour (the
/// other of {k1,k2}) would exceed max{d(x), d(y)} + 1, if any.
std::optional<long long> first_strictness_violation(const Overlay& col,
                                                    std::span<const EdgeId> path, Colour k1,
                                                    Colour k2);

/// Truncation policy for the bichromatic path of a freshly built chain.
struct Truncation {
    enum class Kind { None, FixedCut, RandomWithin };
    Kind kind = Kind::None;
    long long value = 0;

    static Truncation none() { return {}; }
    static Truncation fixed_cut(long long t) { return {Kind::FixedCut, t}; }
    static Truncation random_within(long long limit) { return {Kind::RandomWithin, limit}; }
};

/// One Vizing chain: a (possibly trimmed) fan followed by a bichromatic
/// path chain, as an ordered shiftable edge list.
struct ChainStep {
    enum class Status {
        Augmenting,      // full shift plus final_colour on the last edge extends c
        Truncated,       // last edge becomes the next uncoloured edge
        PaletteFailure,  // the sampled palette starved some vertex; caller resamples
        Overlapping,     // extension ran back into the previous step; caller aborts
    };

    Status status = Status::Augmenting;
    std::vector<EdgeId> edges;
    int fan_size = 0;  // edges[0 .. fan_size-1] form the fan prefix
    Fan fan;           // untrimmed fan, for diagnostics and verification
    Colour kappa1 = 0;
    Colour kappa2 = 0;
    Colour final_colour = 0;       // valid when Augmenting
    long long walked_length = 0;   // full path length before any cut
};

/// Builds a 1-step Vizing chain on the uncoloured edge e with the given
/// centre. In StrictlyLocal mode the path is cut at the first strictness
/// violation regardless of `trunc`.
ChainStep build_vizing_chain(const Overlay& col, EdgeId e, VertexId centre, const Mode& mode,
                             const Truncation& trunc = {}, std::mt19937_64* rng = nullptr);

/// Extends a multi-step chain at its truncation edge (which must be
/// uncoloured in `col`, the post-shift colouring of the previous step).
/// prev_k1/prev_k2 are the previous path's colours; exactly one of them is
/// available at the chain-end vertex, which becomes the new centre.
ChainStep extend_chain(const Overlay& col, EdgeId last_edge, VertexId chain_end, Colour prev_k1,
                       Colour prev_k2, const Mode& mode, const Truncation& trunc = {},
                       std::mt19937_64* rng = nullptr);

/// Performs Shift_j: for i < j, edge i takes the colour of edge i+1; edge j
/// ends up uncoloured. j = chain.size()-1 is the full shift. The optional
/// hook observes every (edge, old colour, new colour) transition.
using ColourChangeHook = std::function<void(EdgeId, Colour, Colour)>;
void shift(Overlay& col, std::span<const EdgeId> chain, std::size_t j,
           const ColourChangeHook& hook = {});

/// Vertex at which a chain of at least two edges ends (the endpoint shared
/// by its last two edges).
VertexId chain_end_vertex(const Overlay& col, std::span<const EdgeId> chain);

/// A committed multi-step chain, kept for verification and tracing.
struct MultiStepChain {
    enum class Status { Augmenting, Truncated, Overlapping, StepLimit, PaletteFailure };
    struct Step {
        std::vector<EdgeId> edges;
        int fan_size = 0;
        Colour kappa1 = 0;
        Colour kappa2 = 0;
    };
    std::vector<Step> steps;
    Status status = Status::Augmenting;
    Colour final_colour = 0;
};

/// Debug trace: per step, the (edge, pre-colour, post-colour) transitions.
struct ChainTrace {
    struct Entry {
        EdgeId e;
        Colour pre;
        Colour post;
    };
    std::vector<std::vector<Entry>> steps;
    std::string str() const;
};

}  // namespace vizing

#endif
