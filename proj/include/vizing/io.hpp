#ifndef VIZING_IO_HPP
#define VIZING_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "vizing/graph.hpp"

namespace vizing {

/// Text graph format: first line "n m", then m lines "u v" with 0-based
/// vertex ids. Duplicate edges and self-loops are rejected with the
/// offending line number.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

/// Colouring format: one line "edgeid colour" per edge, colour 0 meaning
/// uncoloured. Edge ids refer to the load order of the graph file.
void write_colouring(std::ostream& out, const Graph& g);

/// Loads a colouring onto g without conflict checks, so that the verifier
/// can inspect improper files. Do not run colourers on a graph loaded this
/// way unless the verifier reported it proper.
void read_colouring(std::istream& in, Graph& g);
void read_colouring_file(const std::string& path, Graph& g);

struct Update {
    bool insert = true;
    VertexId u = 0;
    VertexId v = 0;
};

struct UpdateStream {
    int vertex_count = 0;
    std::vector<Update> ops;
};

/// Update stream: optional first line "n N" pinning the vertex count, then
/// lines "+ u v" or "- u v". Without the header the vertex count is the
/// largest endpoint plus one.
UpdateStream read_stream(std::istream& in);
UpdateStream read_stream_file(const std::string& path);
void write_stream(std::ostream& out, const UpdateStream& s);

}  // namespace vizing

#endif
