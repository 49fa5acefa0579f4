#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "test_util.hpp"
#include "vizing/chain.hpp"
#include "vizing/verify.hpp"

using namespace vizing;

namespace {

// Commits an augmenting step onto g and checks properness plus the +1 in
// the coloured-edge count.
void augment_and_check(Graph& g, const ChainStep& step) {
    REQUIRE(step.status == ChainStep::Status::Augmenting);
    int before = g.coloured_count();
    Overlay col(g);
    shift(col, step.edges, step.edges.size() - 1);
    col.set_colour(step.edges.back(), step.final_colour);
    col.commit(g);
    CHECK(g.coloured_count() == before + 1);
    CHECK(check_proper(g).empty());
}

}  // namespace

TEST_CASE("shift: j = 0 changes nothing") {
    Graph g(3);
    EdgeId ab = g.add_edge(0, 1);
    EdgeId bc = g.add_edge(1, 2);
    g.set_colour(bc, 1);
    Overlay col(g);
    std::vector<EdgeId> chain{ab, bc};
    shift(col, chain, 0);
    CHECK(!col.touched());
    CHECK(col.colour(ab) == kUncoloured);
    CHECK(col.colour(bc) == 1);
}

TEST_CASE("shift: two-edge path full shift") {
    Graph g(3);
    EdgeId ab = g.add_edge(0, 1);
    EdgeId bc = g.add_edge(1, 2);
    g.set_colour(bc, 1);
    Overlay col(g);
    std::vector<EdgeId> chain{ab, bc};
    shift(col, chain, 1);
    CHECK(col.colour(ab) == 1);
    CHECK(col.colour(bc) == kUncoloured);
    col.commit(g);
    CHECK(g.colour(ab) == 1);
}

TEST_CASE("shift: every prefix of engine-built chains stays proper") {
    std::mt19937_64 rng(11);
    int chains_tested = 0;
    for (int trial = 0; trial < 200 && chains_tested < 60; ++trial) {
        Graph g = vztest::random_gnp_for_tests(10, 0.45, rng);
        if (g.edge_count() == 0) continue;
        vztest::greedy_partial_colouring(g, g.max_degree() + 1, 0.25, rng);
        EdgeId start = kNoEdge;
        for (EdgeId e : g.edges())
            if (g.colour(e) == kUncoloured) start = e;
        if (start == kNoEdge) continue;
        Overlay probe(g);
        ChainStep step =
            build_vizing_chain(probe, start, g.endpoints(start).first, Mode::plain(g.max_degree() + 1));
        REQUIRE(step.status == ChainStep::Status::Augmenting);
        ++chains_tested;
        int coloured_before = g.coloured_count();
        for (std::size_t j = 0; j < step.edges.size(); ++j) {
            Graph copy = g;
            Overlay col(copy);
            shift(col, step.edges, j);
            col.commit(copy);
            CHECK(copy.coloured_count() == coloured_before);
            CHECK(vztest::proper_by_pairs(copy));
            CHECK(check_proper(copy).empty());
        }
    }
    CHECK(chains_tested >= 30);
}

TEST_CASE("build_fan: K2 terminates shared with centre") {
    Graph g(2);
    g.add_edge(0, 1);
    Overlay col(g);
    FanBuild fb = build_fan(col, 0, 1, Mode::plain(2));
    CHECK(fb.fan.leaves.size() == 1);
    CHECK(fb.fan.termination == Fan::Termination::SharedWithCentre);
    CHECK(fb.fan.reps.front() == 1);
}

TEST_CASE("build_fan: uncoloured star terminates immediately") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    Overlay col(g);
    FanBuild fb = build_fan(col, 0, 1, Mode::plain(4));
    CHECK(fb.fan.leaves.size() == 1);
    CHECK(fb.fan.termination == Fan::Termination::SharedWithCentre);
}

TEST_CASE("build_fan: repeated-colour witness found by search") {
    std::mt19937_64 rng(5);
    int found = 0;
    for (int trial = 0; trial < 4000 && found < 5; ++trial) {
        Graph g = vztest::random_gnp_for_tests(6, 0.7, rng);
        if (g.edge_count() < 3) continue;
        vztest::greedy_partial_colouring(g, g.max_degree() + 1, 0.3, rng);
        EdgeId start = kNoEdge;
        for (EdgeId e : g.edges())
            if (g.colour(e) == kUncoloured) start = e;
        if (start == kNoEdge) continue;
        Overlay col(g);
        FanBuild fb = build_fan(col, g.endpoints(start).first, g.endpoints(start).second,
                                Mode::plain(g.max_degree() + 1));
        const Fan& fan = fb.fan;
        if (fan.termination != Fan::Termination::RepeatedColour) continue;
        ++found;
        REQUIRE(fan.repeat_partner >= 0);
        REQUIRE(fan.repeat_partner + 1 < static_cast<int>(fan.leaves.size()));
        // the last leaf's representative equals the partner leaf's
        CHECK(fan.reps.back() == fan.reps[fan.repeat_partner]);
        // exactly one fan edge carries that colour
        Colour k2 = fan.reps.back();
        int carrying = 0;
        for (EdgeId e : fan.edges)
            if (col.colour(e) == k2) ++carrying;
        CHECK(carrying == 1);
        // fan chain invariant: c(u w_{j+1}) = rep(w_j)
        for (std::size_t j = 0; j + 1 < fan.edges.size(); ++j)
            CHECK(col.colour(fan.edges[j + 1]) == fan.reps[j]);
        // representatives are available at their leaves
        for (std::size_t j = 0; j < fan.leaves.size(); ++j)
            CHECK(col.is_available(fan.leaves[j], fan.reps[j]));
    }
    CHECK(found == 5);
}

TEST_CASE("walk_bichromatic: isolated root gives the empty path") {
    Graph g(3);
    EdgeId e = g.add_edge(0, 1);
    g.set_colour(e, 3);
    Overlay col(g);
    BichromaticWalk walk = walk_bichromatic(col, 2, 1, 2);
    CHECK(walk.edges.empty());
    CHECK(walk.vertices == std::vector<VertexId>{2});
}

TEST_CASE("walk_bichromatic: three-edge alternating path") {
    Graph g(4);
    EdgeId e0 = g.add_edge(0, 1);
    EdgeId e1 = g.add_edge(1, 2);
    EdgeId e2 = g.add_edge(2, 3);
    g.set_colour(e0, 1);
    g.set_colour(e1, 2);
    g.set_colour(e2, 1);
    Overlay col(g);
    BichromaticWalk walk = walk_bichromatic(col, 0, 1, 2);
    CHECK(walk.edges == std::vector<EdgeId>{e0, e1, e2});
    CHECK(walk.vertices.back() == 3);
    // interior root is rejected
    CHECK_THROWS_AS(walk_bichromatic(col, 1, 1, 2), std::logic_error);
}

TEST_CASE("walk_bichromatic agrees with a breadth-first component oracle") {
    std::mt19937_64 rng(23);
    int walks = 0;
    for (int trial = 0; trial < 300 && walks < 100; ++trial) {
        Graph g = vztest::random_gnp_for_tests(14, 0.3, rng);
        vztest::greedy_partial_colouring(g, 2 * g.max_degree() + 1, 0.1, rng);
        std::uniform_int_distribution<Colour> pick_colour(1, std::max(2, g.max_degree()));
        Colour k1 = pick_colour(rng), k2 = pick_colour(rng);
        if (k1 == k2) continue;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            bool has1 = g.edge_with_colour_at(v, k1) != kNoEdge;
            bool has2 = g.edge_with_colour_at(v, k2) != kNoEdge;
            if (has1 && has2) continue;  // interior or mid-path vertex
            Overlay col(g);
            BichromaticWalk walk = walk_bichromatic(col, v, k1, k2);
            ++walks;
            auto oracle = vztest::bichromatic_component_edges(g, v, k1, k2);
            std::set<EdgeId> walked(walk.edges.begin(), walk.edges.end());
            CHECK(walked == oracle);
            CHECK(walk.edges.size() == walked.size());  // no repeats
        }
    }
    CHECK(walks >= 100);
}

TEST_CASE("build_vizing_chain: triangle with two coloured edges") {
    Graph g(3);
    EdgeId ab = g.add_edge(0, 1);
    EdgeId bc = g.add_edge(1, 2);
    EdgeId ca = g.add_edge(2, 0);
    g.set_colour(ab, 1);
    g.set_colour(bc, 2);
    Overlay col(g);
    ChainStep step = build_vizing_chain(col, ca, 2, Mode::plain(3));
    augment_and_check(g, step);
    for (EdgeId e : {ab, bc, ca}) CHECK(g.colour(e) <= 3);
}

TEST_CASE("build_vizing_chain: random instances always augment properly") {
    std::mt19937_64 rng(99);
    int done = 0;
    for (int trial = 0; trial < 3000 && done < 1000; ++trial) {
        Graph g = vztest::random_gnp_for_tests(12, 0.4, rng);
        if (g.edge_count() == 0) continue;
        vztest::greedy_partial_colouring(g, g.max_degree() + 1, 0.2, rng);
        for (EdgeId e : g.edges()) {
            if (g.colour(e) != kUncoloured) continue;
            Overlay col(g);
            ChainStep step =
                build_vizing_chain(col, e, g.endpoints(e).first, Mode::plain(g.max_degree() + 1));
            augment_and_check(g, step);
            ++done;
            break;
        }
    }
    CHECK(done == 1000);
}

TEST_CASE("build_vizing_chain: path-end case analysis witnesses") {
    std::mt19937_64 rng(3);
    int at_centre = 0, at_partner = 0, elsewhere = 0;
    for (int trial = 0; trial < 20000 && (at_centre < 3 || at_partner < 3 || elsewhere < 3);
         ++trial) {
        Graph g = vztest::random_gnp_for_tests(9, 0.55, rng);
        if (g.edge_count() == 0) continue;
        vztest::greedy_partial_colouring(g, g.max_degree() + 1, 0.15, rng);
        EdgeId start = kNoEdge;
        for (EdgeId e : g.edges())
            if (g.colour(e) == kUncoloured) start = e;
        if (start == kNoEdge) continue;
        VertexId centre = g.endpoints(start).first;
        Overlay col(g);
        ChainStep step = build_vizing_chain(col, start, centre, Mode::plain(g.max_degree() + 1));
        if (step.status != ChainStep::Status::Augmenting) continue;
        if (step.fan.termination != Fan::Termination::RepeatedColour) continue;
        if (step.walked_length == 0) continue;
        // re-walk to find where the path ended
        BichromaticWalk walk =
            walk_bichromatic(col, step.fan.leaves.back(), step.kappa1, step.kappa2);
        VertexId z = walk.vertices.back();
        if (z == centre) {
            ++at_centre;
            // fan trimmed just past the partner, path reversed
            CHECK(step.fan_size == step.fan.repeat_partner + 2);
            CHECK(step.edges.back() == walk.edges.front());
        } else if (z == step.fan.leaves[step.fan.repeat_partner]) {
            ++at_partner;
            CHECK(step.fan_size == step.fan.repeat_partner + 1);
            CHECK(step.edges.back() == walk.edges.front());
        } else {
            ++elsewhere;
            CHECK(step.fan_size == static_cast<int>(step.fan.edges.size()));
            CHECK(step.edges.back() == walk.edges.back());
        }
        augment_and_check(g, step);
    }
    CHECK(at_centre >= 3);
    CHECK(at_partner >= 3);
    CHECK(elsewhere >= 3);
}

TEST_CASE("truncated chains leave the cut edge uncoloured") {
    std::mt19937_64 rng(17);
    int truncated = 0;
    for (int trial = 0; trial < 6000 && truncated < 50; ++trial) {
        Graph g = vztest::random_gnp_for_tests(12, 0.95, rng);
        if (g.edge_count() == 0) continue;
        vztest::greedy_partial_colouring(g, g.max_degree() + 1, 0.0, rng);
        EdgeId start = kNoEdge;
        for (EdgeId e : g.edges())
            if (g.colour(e) == kUncoloured) start = e;
        if (start == kNoEdge) continue;
        Overlay col(g);
        ChainStep step = build_vizing_chain(col, start, g.endpoints(start).first,
                                            Mode::plain(g.max_degree() + 1),
                                            Truncation::fixed_cut(1));
        if (step.status != ChainStep::Status::Truncated) continue;
        ++truncated;
        CHECK(static_cast<long long>(step.edges.size()) ==
              static_cast<long long>(step.fan.edges.size()) + 1);
        int coloured_before = g.coloured_count();
        shift(col, step.edges, step.edges.size() - 1);
        col.commit(g);
        CHECK(g.colour(step.edges.back()) == kUncoloured);
        CHECK(g.coloured_count() == coloured_before);  // cut edge lost one, front gained one
        CHECK(check_proper(g).empty());
    }
    CHECK(truncated == 50);
}

TEST_CASE("extend_chain: avoid and shared cases arise in random search") {
    std::mt19937_64 rng(31);
    int avoided = 0, shared = 0;
    for (int trial = 0; trial < 20000 && (avoided < 5 || shared < 5); ++trial) {
        Graph g = vztest::random_gnp_for_tests(12, 0.95, rng);
        if (g.edge_count() == 0) continue;
        vztest::greedy_partial_colouring(g, g.max_degree() + 1, 0.0, rng);
        EdgeId start = kNoEdge;
        for (EdgeId e : g.edges())
            if (g.colour(e) == kUncoloured) start = e;
        if (start == kNoEdge) continue;
        Overlay col(g);
        Mode mode = Mode::plain(g.max_degree() + 1);
        ChainStep first = build_vizing_chain(col, start, g.endpoints(start).first, mode,
                                             Truncation::fixed_cut(2));
        if (first.status != ChainStep::Status::Truncated) continue;
        shift(col, first.edges, first.edges.size() - 1);
        EdgeId cut = first.edges.back();
        VertexId end = chain_end_vertex(col, first.edges);
        ChainStep ext = extend_chain(col, cut, end, first.kappa1, first.kappa2, mode);
        if (ext.status == ChainStep::Status::Overlapping) continue;
        REQUIRE(ext.fan.centre == end);
        if (ext.fan.termination == Fan::Termination::RepeatedColour &&
            ext.status == ChainStep::Status::Augmenting) {
            ++avoided;
            // new path colours are disjoint from the previous pair
            CHECK(ext.kappa1 != first.kappa1);
            CHECK(ext.kappa1 != first.kappa2);
            CHECK(ext.kappa2 != first.kappa1);
            CHECK(ext.kappa2 != first.kappa2);
        } else if (ext.fan.termination == Fan::Termination::SharedWithCentre) {
            ++shared;
            // length-0 path: the chain is the fan itself
            CHECK(static_cast<int>(ext.edges.size()) == ext.fan_size);
        }
        if (ext.status == ChainStep::Status::Augmenting) {
            shift(col, ext.edges, ext.edges.size() - 1);
            col.set_colour(ext.edges.back(), ext.final_colour);
            col.commit(g);
            CHECK(check_proper(g).empty());
        }
    }
    CHECK(avoided >= 5);
    CHECK(shared >= 5);
}

TEST_CASE("extend_chain: constructed reuse witness walks the previous colours") {
    // x misses colour 1 and carries 2; the second fan leaf has only colour 2
    // eligible, forcing the reuse stop with a (1,2) path.
    Graph g(13);
    VertexId x = 0, y = 1, a2 = 2, a3 = 3, a4 = 4, a6 = 5;
    VertexId b1 = 6, b5 = 7, b6 = 8, c1 = 9, c4 = 10, c5 = 11, c6 = 12;
    EdgeId xy = g.add_edge(x, y);
    g.set_colour(g.add_edge(x, a2), 2);
    EdgeId x_a3 = g.add_edge(x, a3);
    g.set_colour(x_a3, 3);
    g.set_colour(g.add_edge(x, a4), 4);
    g.set_colour(g.add_edge(x, a6), 6);
    g.set_colour(g.add_edge(y, b1), 1);
    g.set_colour(g.add_edge(y, b5), 5);
    g.set_colour(g.add_edge(y, b6), 6);
    EdgeId a3_c1 = g.add_edge(a3, c1);
    g.set_colour(a3_c1, 1);
    g.set_colour(g.add_edge(a3, c4), 4);
    g.set_colour(g.add_edge(a3, c5), 5);
    g.set_colour(g.add_edge(a3, c6), 6);

    REQUIRE(g.max_degree() == 5);
    Overlay col(g);
    ChainStep ext = extend_chain(col, xy, x, 1, 2, Mode::plain(6));
    CHECK(ext.fan.termination == Fan::Termination::ReusedPathColour);
    CHECK(ext.kappa1 == 1);
    CHECK(ext.kappa2 == 2);
    CHECK(ext.fan.leaves == std::vector<VertexId>{y, a3});
    REQUIRE(ext.status == ChainStep::Status::Augmenting);
    CHECK(ext.edges == std::vector<EdgeId>{xy, x_a3, a3_c1});
    augment_and_check(g, ext);
}

TEST_CASE("first_strictness_violation") {
    SUBCASE("unsatisfiable when degrees dominate the colours") {
        Graph g(4);
        EdgeId e0 = g.add_edge(0, 1);
        EdgeId e1 = g.add_edge(1, 2);
        g.add_edge(0, 2);
        g.add_edge(0, 3);
        g.set_colour(e0, 1);
        g.set_colour(e1, 2);
        Overlay col(g);
        std::vector<EdgeId> path{e0, e1};
        CHECK(!first_strictness_violation(col, path, 1, 2).has_value());
    }
    SUBCASE("degree-3 edge flipping to colour 5 is flagged") {
        Graph g(8);
        EdgeId xy = g.add_edge(0, 1);
        g.set_colour(xy, 2);
        // pad both endpoints to degree 3
        g.add_edge(0, 2);
        g.add_edge(0, 3);
        g.add_edge(1, 4);
        g.add_edge(1, 5);
        Overlay col(g);
        std::vector<EdgeId> path{xy};
        auto idx = first_strictness_violation(col, path, 5, 2);
        REQUIRE(idx.has_value());
        CHECK(*idx == 1);
    }
}
