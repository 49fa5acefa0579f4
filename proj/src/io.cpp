#include "vizing/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace vizing {

namespace {

[[noreturn]] void line_error(long long line, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace

Graph read_graph(std::istream& in) {
    long long line_no = 1;
    int n = 0;
    long long m = 0;
    std::string line;
    if (!std::getline(in, line)) line_error(1, "missing header 'n m'");
    {
        std::istringstream hdr(line);
        if (!(hdr >> n >> m) || n < 0 || m < 0) line_error(1, "bad header, expected 'n m'");
    }
    Graph g(n);
    for (long long i = 0; i < m; ++i) {
        ++line_no;
        if (!std::getline(in, line)) line_error(line_no, "unexpected end of file");
        std::istringstream ls(line);
        VertexId u, v;
        if (!(ls >> u >> v)) line_error(line_no, "expected 'u v'");
        if (u < 0 || u >= n || v < 0 || v >= n) line_error(line_no, "vertex id out of range");
        try {
            g.add_edge(u, v);
        } catch (const std::invalid_argument& ex) {
            line_error(line_no, ex.what());
        }
    }
    return g;
}

Graph read_graph_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (EdgeId e : g.edges()) {
        auto [u, v] = g.endpoints(e);
        out << u << " " << v << "\n";
    }
}

void write_colouring(std::ostream& out, const Graph& g) {
    for (EdgeId e : g.edges()) out << e << " " << g.colour(e) << "\n";
}

void read_colouring(std::istream& in, Graph& g) {
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        EdgeId e;
        Colour k;
        if (!(ls >> e >> k)) line_error(line_no, "expected 'edgeid colour'");
        if (!g.has_edge(e)) line_error(line_no, "unknown edge id " + std::to_string(e));
        if (k < 0) line_error(line_no, "negative colour");
        g.set_colour_unchecked(e, k);
    }
}

void read_colouring_file(const std::string& path, Graph& g) {
    auto in = open_or_throw(path);
    read_colouring(in, g);
}

UpdateStream read_stream(std::istream& in) {
    UpdateStream s;
    std::string line;
    long long line_no = 0;
    bool have_header = false;
    int max_vertex = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op)) continue;
        if (op == "n" && s.ops.empty() && !have_header) {
            if (!(ls >> s.vertex_count) || s.vertex_count <= 0)
                line_error(line_no, "bad vertex count header");
            have_header = true;
            continue;
        }
        if (op != "+" && op != "-") line_error(line_no, "expected '+ u v' or '- u v'");
        Update up;
        up.insert = (op == "+");
        if (!(ls >> up.u >> up.v)) line_error(line_no, "expected two vertex ids");
        if (up.u < 0 || up.v < 0) line_error(line_no, "negative vertex id");
        max_vertex = std::max({max_vertex, up.u, up.v});
        s.ops.push_back(up);
    }
    if (!have_header) s.vertex_count = max_vertex + 1;
    if (max_vertex >= s.vertex_count)
        throw std::runtime_error("stream endpoint exceeds declared vertex count");
    return s;
}

UpdateStream read_stream_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_stream(in);
}

void write_stream(std::ostream& out, const UpdateStream& s) {
    out << "n " << s.vertex_count << "\n";
    for (const Update& up : s.ops)
        out << (up.insert ? "+" : "-") << " " << up.u << " " << up.v << "\n";
}

}  // namespace vizing
