#ifndef VIZING_GENERATE_HPP
#define VIZING_GENERATE_HPP

#include <random>
#include <string>
#include <vector>

#include "vizing/graph.hpp"
#include "vizing/io.hpp"

namespace vizing {

Graph make_gnp(int n, double p, std::mt19937_64& rng);
Graph make_random_regular(int n, int degree, std::mt19937_64& rng);
Graph make_star(int n);
Graph make_path(int n);
Graph make_complete(int n);

/// Generator spec as it appears on the command line:
///   gnp <n> <p> | regular <n> <d> | star <n> | path <n> | complete <n>
struct GenSpec {
    enum class Kind { Gnp, Regular, Star, Path, Complete };
    Kind kind = Kind::Gnp;
    int n = 0;
    double p = 0.0;
    int degree = 0;
};

GenSpec parse_gen_spec(const std::vector<std::string>& args);
Graph make_graph(const GenSpec& spec, std::mt19937_64& rng);

/// Mixed random updates: inserts draw absent pairs uniformly, deletes pick
/// a random present edge. When the graph is empty (or full) the other kind
/// is used.
UpdateStream random_stream(int n, long long count, double insert_prob, std::mt19937_64& rng);

/// Degree ramp at a hub: grow vertex 0 to degree `high`, then delete hub
/// edges back down to degree `low`.
UpdateStream ramp_stream(int high, int low);

/// Colours everything with a seeded randomized (Delta+1) colouring, then
/// uncolours each edge independently with the given probability. Always
/// yields a proper partial colouring.
void random_partial_colouring(Graph& g, double uncolour_fraction, std::mt19937_64& rng);

}  // namespace vizing

#endif
