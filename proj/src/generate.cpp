#include "vizing/generate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "vizing/strict_local.hpp"

namespace vizing {

Graph make_gnp(int n, double p, std::mt19937_64& rng) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: bad parameters");
    Graph g(n);
    if (p <= 0.0 || n < 2) return g;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    if (p >= 1.0) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }
    // geometric skips over the linearised pair list: pair (a,b), b < a,
    // sits at index a(a-1)/2 + b
    double log_q = std::log1p(-p);
    long long total = static_cast<long long>(n) * (n - 1) / 2;
    long long idx = -1;
    while (true) {
        double u = unif(rng);
        long long skip = static_cast<long long>(std::floor(std::log1p(-u) / log_q));
        idx += 1 + skip;
        if (idx >= total || idx < 0) break;
        long long a = static_cast<long long>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
        while (a * (a - 1) / 2 > idx) --a;
        while ((a + 1) * a / 2 <= idx) ++a;
        long long b = idx - a * (a - 1) / 2;
        g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    return g;
}

Graph make_random_regular(int n, int degree, std::mt19937_64& rng) {
    if (degree < 0 || degree >= n || (static_cast<long long>(n) * degree) % 2 != 0)
        throw std::invalid_argument("regular: need d < n and n*d even");
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<VertexId> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * degree);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < degree; ++i) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        Graph g(n);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            VertexId a = stubs[i], b = stubs[i + 1];
            if (a == b || g.find_edge(a, b) != kNoEdge) {
                ok = false;
                break;
            }
            g.add_edge(a, b);
        }
        if (ok) return g;
    }
    throw std::runtime_error("regular: pairing failed repeatedly; try different parameters");
}

Graph make_star(int n) {
    Graph g(std::max(n, 1));
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph make_path(int n) {
    Graph g(std::max(n, 1));
    for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

Graph make_complete(int n) {
    Graph g(std::max(n, 1));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

GenSpec parse_gen_spec(const std::vector<std::string>& args) {
    if (args.empty()) throw std::invalid_argument("empty generator spec");
    GenSpec spec;
    const std::string& kind = args[0];
    auto need = [&](std::size_t count) {
        if (args.size() != count + 1)
            throw std::invalid_argument("generator '" + kind + "' expects " +
                                        std::to_string(count) + " argument(s)");
    };
    try {
        if (kind == "gnp") {
            need(2);
            spec.kind = GenSpec::Kind::Gnp;
            spec.n = std::stoi(args[1]);
            spec.p = std::stod(args[2]);
        } else if (kind == "regular") {
            need(2);
            spec.kind = GenSpec::Kind::Regular;
            spec.n = std::stoi(args[1]);
            spec.degree = std::stoi(args[2]);
        } else if (kind == "star") {
            need(1);
            spec.kind = GenSpec::Kind::Star;
            spec.n = std::stoi(args[1]);
        } else if (kind == "path") {
            need(1);
            spec.kind = GenSpec::Kind::Path;
            spec.n = std::stoi(args[1]);
        } else if (kind == "complete") {
            need(1);
            spec.kind = GenSpec::Kind::Complete;
            spec.n = std::stoi(args[1]);
        } else {
            throw std::invalid_argument("unknown generator '" + kind + "'");
        }
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad generator arguments for '" + kind + "'");
    }
    return spec;
}

Graph make_graph(const GenSpec& spec, std::mt19937_64& rng) {
    switch (spec.kind) {
        case GenSpec::Kind::Gnp:
            return make_gnp(spec.n, spec.p, rng);
        case GenSpec::Kind::Regular:
            return make_random_regular(spec.n, spec.degree, rng);
        case GenSpec::Kind::Star:
            return make_star(spec.n);
        case GenSpec::Kind::Path:
            return make_path(spec.n);
        case GenSpec::Kind::Complete:
            return make_complete(spec.n);
    }
    throw std::invalid_argument("bad generator spec");
}

UpdateStream random_stream(int n, long long count, double insert_prob, std::mt19937_64& rng) {
    if (n < 2) throw std::invalid_argument("random_stream: need at least two vertices");
    UpdateStream s;
    s.vertex_count = n;
    std::unordered_set<std::uint64_t> present;
    std::vector<std::pair<VertexId, VertexId>> edges;
    auto key = [](VertexId a, VertexId b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    };
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_int_distribution<int> pick_vertex(0, n - 1);
    long long full = static_cast<long long>(n) * (n - 1) / 2;
    for (long long i = 0; i < count; ++i) {
        bool insert = unif(rng) < insert_prob;
        if (edges.empty()) insert = true;
        if (static_cast<long long>(edges.size()) == full) insert = false;
        if (insert) {
            while (true) {
                VertexId a = pick_vertex(rng), b = pick_vertex(rng);
                if (a == b || present.count(key(a, b))) continue;
                present.insert(key(a, b));
                edges.emplace_back(a, b);
                s.ops.push_back({true, a, b});
                break;
            }
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
            std::size_t at = pick(rng);
            auto [a, b] = edges[at];
            edges[at] = edges.back();
            edges.pop_back();
            present.erase(key(a, b));
            s.ops.push_back({false, a, b});
        }
    }
    return s;
}

UpdateStream ramp_stream(int high, int low) {
    if (high < low || low < 0) throw std::invalid_argument("ramp_stream: need high >= low >= 0");
    UpdateStream s;
    s.vertex_count = high + 1;
    for (int v = 1; v <= high; ++v) s.ops.push_back({true, 0, v});
    for (int v = high; v > low; --v) s.ops.push_back({false, 0, v});
    return s;
}

void random_partial_colouring(Graph& g, double uncolour_fraction, std::mt19937_64& rng) {
    colour_graph_plain(g, &rng, true);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (EdgeId e : g.edges())
        if (unif(rng) < uncolour_fraction) g.set_colour(e, kUncoloured);
}

}  // namespace vizing
