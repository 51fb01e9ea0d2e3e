#include "scg/graph.hpp"

#include "scg/errors.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace scg {

Graph::Graph(int n) : n_(n), adj_(n, n) {
    if (n < 0) throw invalid_parameter("graph: negative vertex count");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw invalid_parameter("add_edge: vertex out of range");
    if (u == v) throw invalid_parameter("add_edge: loops are not allowed");
    if (adj_.get(u, v)) return;
    adj_.set(u, v);
    adj_.set(v, u);
    ++edges_;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    adj_.for_each_in_row(v, [&](int u) { out.push_back(u); });
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int u = 0; u < n_; ++u)
        adj_.for_each_in_row(u, [&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw invalid_parameter("cycle_graph: need at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        bool found = false;
        g.adjacency().for_each_in_row(u, [&](int v) {
            if (u < v && !found && g.adjacency().rows_intersect(u, v))
                found = true;
        });
        if (found) return false;
    }
    return true;
}

void write_dimacs(std::ostream& os, const Graph& g) {
    os << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) os << "e " << u + 1 << " " << v + 1 << "\n";
}

Graph read_dimacs(std::istream& is) {
    std::string line;
    int ln = 0;
    int n = -1, m = -1, read_edges = 0;
    Graph g;
    while (std::getline(is, line)) {
        ++ln;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "p") {
            std::string fmt;
            ss >> fmt >> n >> m;
            if (!ss || (fmt != "edge" && fmt != "edges" && fmt != "col") || n < 0)
                throw parse_error("dimacs: bad header at line " +
                                  std::to_string(ln));
            g = Graph(n);
        } else if (tag == "e") {
            if (n < 0)
                throw parse_error("dimacs: edge before header at line " +
                                  std::to_string(ln));
            int u, v;
            ss >> u >> v;
            if (!ss || u < 1 || v < 1 || u > n || v > n)
                throw parse_error("dimacs: bad edge at line " +
                                  std::to_string(ln));
            g.add_edge(u - 1, v - 1);
            ++read_edges;
        }
    }
    if (n < 0) throw parse_error("dimacs: missing 'p edge' header");
    return g;
}

} // namespace scg
