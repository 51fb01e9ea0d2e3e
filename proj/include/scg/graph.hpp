#pragma once

#include "scg/bitmatrix.hpp"

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

namespace scg {

/// Finite simple undirected graph with a packed adjacency matrix.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_; }

    /// Inserts {u,v}. Loops are rejected; re-adding an edge is a no-op.
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj_.get(u, v); }

    int degree(int v) const { return adj_.row_popcount(v); }
    std::vector<int> neighbors(int v) const;
    const BitMatrix& adjacency() const { return adj_; }

    /// All edges as (u,v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && adj_ == o.adj_;
    }

private:
    int n_ = 0;
    std::size_t edges_ = 0;
    BitMatrix adj_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);

/// No 3-clique; decided by intersecting neighbor rows along each edge.
bool is_triangle_free(const Graph& g);

/// DIMACS .col: "p edge n m" header and 1-based "e u v" lines.
void write_dimacs(std::ostream& os, const Graph& g);
Graph read_dimacs(std::istream& is);

} // namespace scg
