#include "vizing/palette.hpp"

#include <algorithm>
#include <cmath>

namespace vizing {

IntervalDecomposition::IntervalDecomposition(long long ceiling) {
    if (ceiling < 1) throw std::invalid_argument("interval ceiling must be at least 1");
    for (long long lo = 1; lo <= ceiling; lo *= 2) {
        long long hi = std::min(ceiling, lo * 2 - 1);
        blocks.push_back({static_cast<Colour>(lo), static_cast<Colour>(hi)});
    }
}

int IntervalDecomposition::block_of(Colour k) const {
    if (k < 1 || blocks.empty() || k > blocks.back().hi)
        throw std::invalid_argument("colour outside decomposition");
    int i = 0;
    while (blocks[i].hi < k) ++i;
    return i;
}

long long palette_draws_per_interval(int vertex_count, const Eps& eps, double density_constant) {
    double n = std::max(2, vertex_count);
    double raw = density_constant * std::log(n) * static_cast<double>(eps.den) /
                 static_cast<double>(eps.num);
    return static_cast<long long>(std::ceil(raw));
}

Palette sample_palette(const Graph& g, const Eps& eps, double density_constant,
                       std::mt19937_64& rng) {
    Palette s;
    s.eps = eps;
    s.density_constant = density_constant;
    long long ceiling = std::max<long long>(1, eps.ceil_scaled(g.max_degree()));
    s.ceiling = ceiling;
    IntervalDecomposition dec(ceiling);
    long long draws = palette_draws_per_interval(g.vertex_count(), eps, density_constant);

    std::vector<Colour> picked;
    for (const auto& block : dec.blocks) {
        if (block.size() <= draws) {
            for (Colour k = block.lo; k <= block.hi; ++k) picked.push_back(k);
        } else {
            std::uniform_int_distribution<Colour> dist(block.lo, block.hi);
            for (long long i = 0; i < draws; ++i) picked.push_back(dist(rng));
        }
    }
    std::sort(picked.begin(), picked.end());
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    s.colours = std::move(picked);
    s.member.assign(ceiling + 1, 0);
    for (Colour k : s.colours) s.member[k] = 1;
    return s;
}

PaletteCheck is_local_palette(const Palette& s, const Graph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        if (d == 0) continue;  // no edges to colour, no requirement
        long long range = s.eps.ceil_scaled(d);
        bool hit = false;
        for (Colour k : s.colours) {
            if (k > range) break;
            if (g.edge_with_colour_at(v, k) == kNoEdge) {
                hit = true;
                break;
            }
        }
        if (!hit) return {false, v};
    }
    return {};
}

int dense_interval(const Graph& g, VertexId v, const Eps& eps) {
    int d = g.degree(v);
    if (d == 0) throw std::invalid_argument("dense_interval: vertex has no edges");
    long long ceiling = std::max<long long>(1, eps.ceil_scaled(g.max_degree()));
    long long range = eps.ceil_scaled(d);
    IntervalDecomposition dec(ceiling);
    for (int i = 0; i < dec.count(); ++i) {
        const auto& block = dec.blocks[i];
        if (block.lo > range) break;
        long long avail = 0;
        for (Colour k = block.lo; k <= std::min<long long>(block.hi, range); ++k)
            if (g.edge_with_colour_at(v, k) == kNoEdge) ++avail;
        // |A_eps(v) cap I_i| >= eps |I_i| / 4, compared in integers
        if (4 * eps.den * avail >= eps.num * block.size()) return i;
    }
    throw std::logic_error("no dense interval found; density guarantee violated");
}

}  // namespace vizing
