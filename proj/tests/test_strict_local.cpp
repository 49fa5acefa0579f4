#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "vizing/generate.hpp"
#include "vizing/strict_local.hpp"
#include "vizing/verify.hpp"

using namespace vizing;

namespace {

StrictLocalOptions checked() {
    StrictLocalOptions o;
    o.check_potential = true;
    o.recompute_every = 16;
    o.check_truncation_edge = true;
    return o;
}

}  // namespace

TEST_CASE("potential of K3") {
    Graph g = make_complete(3);
    CHECK(potential_phi(g) == 9);
    g.set_colour(0, 1);
    CHECK(potential_phi(g) == 7);
}

TEST_CASE("potential matches the double-loop oracle on random instances") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = vztest::random_gnp_for_tests(25, 0.3, rng);
        vztest::greedy_partial_colouring(g, g.max_degree() + 1, 0.3, rng);
        CHECK(potential_phi(g) == vztest::phi_by_double_loop(g));
    }
}

TEST_CASE("K2 gets a colour within its list in one chain") {
    Graph g(2);
    EdgeId e = g.add_edge(0, 1);
    StrictLocalColourer colourer(g, checked());
    colourer.colour_edge(e);
    CHECK(g.colour(e) >= 1);
    CHECK(g.colour(e) <= 2);
    CHECK(colourer.stats().chains == 1);
    CHECK(colourer.stats().truncated_shifts == 0);
}

TEST_CASE("star edges get distinct strictly local colours") {
    int n = 9;
    Graph g = make_star(n);
    StrictLocalColourer colourer(g, checked());
    colourer.colour_all();
    std::set<Colour> used;
    for (EdgeId e : g.edges()) {
        CHECK(g.colour(e) != kUncoloured);
        CHECK(g.colour(e) <= n);  // max{d(hub), 1} + 1 = n
        used.insert(g.colour(e));
    }
    CHECK(used.size() == static_cast<std::size_t>(n - 1));
    CHECK(check_strict_local(g).empty());
}

TEST_CASE("coloured count grows by one per call and stays strictly local") {
    std::mt19937_64 rng(123);
    Graph g = vztest::random_gnp_for_tests(60, 0.15, rng);
    StrictLocalColourer colourer(g, checked());
    int expected = 0;
    for (EdgeId e : g.edges()) {
        colourer.colour_edge(e);
        ++expected;
        CHECK(g.coloured_count() == expected);
        if (expected % 20 == 0) {
            CHECK(check_proper(g).empty());
            CHECK(check_strict_local(g).empty());
        }
    }
    CHECK(check_proper(g).empty());
    CHECK(check_strict_local(g).empty());
}

TEST_CASE("cycle and complete graphs colour within their lists") {
    {
        Graph g = make_path(5);
        g.add_edge(4, 0);  // C5
        StrictLocalColourer colourer(g, checked());
        colourer.colour_all();
        for (EdgeId e : g.edges()) CHECK(g.colour(e) <= 3);
        CHECK(check_proper(g).empty());
    }
    {
        Graph g = make_complete(4);
        StrictLocalColourer colourer(g, checked());
        colourer.colour_all();
        for (EdgeId e : g.edges()) CHECK(g.colour(e) <= 4);
        CHECK(check_proper(g).empty());
    }
}

TEST_CASE("random graphs colour cleanly with potential checks enabled") {
    std::mt19937_64 rng(2024);
    for (int seed = 0; seed < 6; ++seed) {
        Graph g = vztest::random_gnp_for_tests(150, 0.05, rng);
        StrictLocalColourer colourer(g, checked());
        colourer.colour_all();
        CHECK(check_proper(g).empty());
        CHECK(check_strict_local(g).empty());
        CHECK(g.coloured_count() == g.edge_count());
        CHECK(colourer.phi() == potential_phi(g));
    }
}

TEST_CASE("truncations occur on random instances and drop the potential") {
    // degree spread in G(n, p) puts high path colours next to low-degree
    // edges often enough to exercise the truncation rule; the enabled
    // potential checks then enforce the drop on every truncated shift
    std::mt19937_64 rng(5);
    long long total_truncated = 0;
    for (int seed = 0; seed < 20; ++seed) {
        Graph g = vztest::random_gnp_for_tests(150, 0.15, rng);
        StrictLocalColourer colourer(g, checked());
        colourer.colour_all();
        CHECK(check_proper(g).empty());
        CHECK(check_strict_local(g).empty());
        total_truncated += colourer.stats().truncated_shifts;
    }
    CHECK(total_truncated > 0);
}

TEST_CASE("total truncated shifts respect the potential budget") {
    std::mt19937_64 rng(9);
    Graph g = vztest::random_gnp_for_tests(100, 0.08, rng);
    long long budget = static_cast<long long>(g.vertex_count()) * (g.max_degree() + 1) +
                       g.edge_count();
    StrictLocalColourer colourer(g, checked());
    colourer.colour_all();
    CHECK(colourer.stats().truncated_shifts <= budget);
    CHECK(colourer.stats().phi_initial <=
          static_cast<long long>(g.vertex_count()) * (g.max_degree() + 1));
}

TEST_CASE("plain colouring uses at most max-degree-plus-one colours") {
    std::mt19937_64 rng(456);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = vztest::random_gnp_for_tests(50, 0.2, rng);
        colour_graph_plain(g);
        CHECK(g.coloured_count() == g.edge_count());
        CHECK(check_proper(g).empty());
        for (EdgeId e : g.edges()) CHECK(g.colour(e) <= g.max_degree() + 1);
    }
}
