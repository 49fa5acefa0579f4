#include "vizing/verify.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "vizing/strict_local.hpp"

namespace vizing {

std::string Violation::str(const Graph& g) const {
    static const char* names[] = {"PROPERNESS", "STRICT_LOCALITY", "INVARIANT61", "OVERLAP",
                                  "PACKING_BOUND"};
    std::ostringstream os;
    os << names[static_cast<int>(kind)];
    if (edge_a != kNoEdge && g.has_edge(edge_a)) {
        auto [u, v] = g.endpoints(edge_a);
        os << " edge=" << u << "-" << v;
    } else if (edge_a != kNoEdge) {
        os << " edge#" << edge_a;
    }
    if (vertex >= 0) os << " vertex=" << vertex;
    if (colour != kUncoloured) os << " colour=" << colour;
    if (!detail.empty()) os << " detail=" << detail;
    return os.str();
}

std::string violations_to_string(const Graph& g, const std::vector<Violation>& vs) {
    std::ostringstream os;
    for (const auto& v : vs) os << v.str(g) << "\n";
    return os.str();
}

std::vector<Violation> check_proper(const Graph& g) {
    std::vector<Violation> out;
    // rebuild incidence from the edge list; do not trust the colour index
    std::vector<std::vector<std::pair<Colour, EdgeId>>> at(g.vertex_count());
    for (EdgeId e : g.edges()) {
        Colour k = g.colour(e);
        if (k == kUncoloured) continue;
        auto [u, v] = g.endpoints(e);
        at[u].emplace_back(k, e);
        at[v].emplace_back(k, e);
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto& lst = at[v];
        std::sort(lst.begin(), lst.end());
        for (std::size_t i = 0; i + 1 < lst.size(); ++i) {
            if (lst[i].first == lst[i + 1].first) {
                Violation viol(Violation::Kind::Properness);
                viol.edge_a = lst[i].second;
                viol.edge_b = lst[i + 1].second;
                viol.vertex = v;
                viol.colour = lst[i].first;
                viol.detail = "two incident edges share a colour";
                out.push_back(std::move(viol));
            }
        }
    }
    return out;
}

std::vector<Violation> check_strict_local(const Graph& g) {
    std::vector<Violation> out;
    for (EdgeId e : g.edges()) {
        Colour k = g.colour(e);
        if (k == kUncoloured) continue;
        auto [u, v] = g.endpoints(e);
        int cap = std::max(g.degree(u), g.degree(v)) + 1;
        if (k > cap) {
            Violation viol(Violation::Kind::StrictLocality);
            viol.edge_a = e;
            viol.colour = k;
            viol.detail = "colour exceeds max{d(u),d(v)}+1=" + std::to_string(cap);
            out.push_back(std::move(viol));
        }
    }
    return out;
}

std::vector<Violation> check_invariant61(const Graph& g, const Eps& eps) {
    std::vector<Violation> out;
    std::unordered_map<Colour, long long> lhs, rhs;
    for (EdgeId e : g.edges()) {
        Colour k = g.colour(e);
        if (k != kUncoloured) ++lhs[k];
    }
    // a vertex contributes to rhs[k] once if it carries k within its range,
    // robust even against an improper input colouring
    std::vector<Colour> seen;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        seen.clear();
        for (EdgeId e : g.incident_edges(v)) {
            Colour k = g.colour(e);
            if (k != kUncoloured) seen.push_back(k);
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        long long range = eps.ceil_scaled(g.degree(v));
        for (Colour k : seen)
            if (k <= range) ++rhs[k];
    }
    for (const auto& [k, count] : lhs) {
        long long r = rhs.count(k) ? rhs[k] : 0;
        if (count > r) {
            Violation viol(Violation::Kind::Invariant61);
            viol.colour = k;
            viol.detail = "edges=" + std::to_string(count) + " contributing-vertices=" +
                          std::to_string(r);
            out.push_back(std::move(viol));
        }
    }
    return out;
}

std::vector<Violation> check_non_overlapping(const MultiStepChain& chain) {
    std::vector<Violation> out;
    const auto& steps = chain.steps;
    for (std::size_t j = 0; j < steps.size(); ++j) {
        // internal repetition (the last step is exempt by definition)
        if (j + 1 < steps.size()) {
            std::unordered_set<EdgeId> seen;
            for (EdgeId e : steps[j].edges) {
                if (!seen.insert(e).second) {
                    Violation v(Violation::Kind::Overlap);
                    v.edge_a = e;
                    v.detail = "edge repeated inside step " + std::to_string(j + 1);
                    out.push_back(std::move(v));
                }
            }
        }
        for (std::size_t k = j + 1; k < steps.size(); ++k) {
            std::unordered_set<EdgeId> in_j(steps[j].edges.begin(), steps[j].edges.end());
            for (EdgeId e : steps[k].edges) {
                if (!in_j.count(e)) continue;
                bool allowed = (k == j + 1) && !steps[k].edges.empty() &&
                               e == steps[k].edges.front() && e == steps[j].edges.back();
                if (!allowed) {
                    Violation v(Violation::Kind::Overlap);
                    v.edge_a = e;
                    v.detail = "steps " + std::to_string(j + 1) + " and " + std::to_string(k + 1) +
                               " share a non-connecting edge";
                    out.push_back(std::move(v));
                }
            }
        }
    }
    return out;
}

std::vector<CensusChain> build_census_family(const Graph& g, bool randomized,
                                             std::mt19937_64* rng) {
    std::vector<CensusChain> family;
    Overlay col(g);
    Mode mode = Mode::plain(g.max_degree() + 1);
    mode.random_tie = randomized;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        EdgeId root_edge = kNoEdge;
        if (randomized && rng != nullptr) {
            std::vector<EdgeId> uncoloured;
            for (EdgeId e : g.incident_edges(v))
                if (g.colour(e) == kUncoloured) uncoloured.push_back(e);
            if (!uncoloured.empty()) {
                std::uniform_int_distribution<std::size_t> dist(0, uncoloured.size() - 1);
                root_edge = uncoloured[dist(*rng)];
            }
        } else {
            for (EdgeId e : g.incident_edges(v))
                if (g.colour(e) == kUncoloured && (root_edge == kNoEdge || e < root_edge))
                    root_edge = e;
        }
        if (root_edge == kNoEdge) continue;
        ChainStep step = build_vizing_chain(col, root_edge, v, mode, {}, rng);
        if (step.status != ChainStep::Status::Augmenting)
            throw std::logic_error("census chain failed to augment");
        family.push_back({v, step.edges});
    }
    return family;
}

CensusReport census_one_step(const Graph& g, const std::vector<CensusChain>& family) {
    CensusReport rep;
    rep.chain_count = static_cast<long long>(family.size());
    long long delta = g.max_degree();
    rep.membership_bound = 4 * delta * delta;

    std::unordered_map<EdgeId, long long> membership;
    std::unordered_set<EdgeId> union_edges;
    std::unordered_set<VertexId> union_vertices;
    for (const auto& chain : family) {
        for (EdgeId e : chain.edges) {
            union_edges.insert(e);
            auto [u, v] = g.endpoints(e);
            union_vertices.insert(u);
            union_vertices.insert(v);
            if (g.colour(e) != kUncoloured) ++membership[e];
        }
    }
    for (const auto& [e, count] : membership) {
        rep.max_membership = std::max(rep.max_membership, count);
        if (count > rep.membership_bound) {
            rep.membership_ok = false;
            Violation v(Violation::Kind::PackingBound);
            v.edge_a = e;
            v.detail = "membership " + std::to_string(count) + " exceeds 4*Delta^2=" +
                       std::to_string(rep.membership_bound);
            rep.violations.push_back(std::move(v));
        }
    }
    rep.union_vertices = static_cast<long long>(union_vertices.size());
    rep.union_edges = static_cast<long long>(union_edges.size());
    if (rep.union_vertices > 0 && 2 * rep.union_edges > delta * rep.union_vertices) {
        rep.density_ok = false;
        Violation v(Violation::Kind::PackingBound);
        v.detail = "union density exceeds Delta/2";
        rep.violations.push_back(std::move(v));
    }
    return rep;
}

}  // namespace vizing
