#pragma once

// Finite simple undirected graphs, the standard constructors and products
// used by the spectrum solvers, and the twin-class reduction machinery.
//
// Vertex numbering conventions (all products are deterministic):
//   h_join / lexicographic:  parts laid out in order, offsets cumulative.
//   tensor:                  (g, h) -> g * |V(G2)| + h (row-major).
//   generalized_corona:      H first, then each part block in order.
//   inflate / embed_in_gvm:  new vertices appended after the originals,
//                            grouped by twin class in class order.

#include <utility>
#include <vector>

namespace gvm {

class Graph {
public:
    // Validates endpoints, rejects self-loops, deduplicates edges.
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    long long edge_count() const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

Graph path(int n);
Graph cycle(int n);  // n >= 3
Graph complete(int n);
Graph empty_graph(int n);
Graph complete_multipartite(const std::vector<int>& sizes);

// Replace vertex i of `h` by parts[i] and join parts completely across
// every edge of `h`.
Graph h_join(const Graph& h, const std::vector<Graph>& parts);

// h_join with every part equal to g.
Graph lexicographic(const Graph& h, const Graph& g);

// (g, h) ~ (g', h') iff g ~ g' and h ~ h'; degrees multiply.
Graph tensor(const Graph& g1, const Graph& g2);
Graph tensor_all(const Graph& first, const std::vector<Graph>& factors);

// One copy of `h` and of each part; vertex i of `h` joined to all of
// parts[i].
Graph generalized_corona(const Graph& h, const std::vector<Graph>& parts);

// Quotient of a graph by the twin relation N(u) = N(v). Blocks are listed
// by smallest member and are always independent sets.
struct ReducedGraph {
    Graph quotient;
    std::vector<std::vector<int>> classes;
    std::vector<int> multiplicities;
};

ReducedGraph twin_classes(const Graph& g);

// Add extra[i] vertices to twin class i, each made adjacent to every
// (old or new) member of the classes neighboring class i, so the twin
// classes of the result are the original ones with multiplicity
// m_i + extra[i] and the quotient is unchanged.
Graph inflate(const Graph& g, const std::vector<int>& extra);

// Grow every odd twin class by one vertex. The result has all class
// multiplicities even, hence all vertex degrees even, and contains g as
// the induced subgraph on its original vertex indices.
Graph embed_in_gvm(const Graph& g);

bool has_pendant(const Graph& g);
bool has_isolated_vertex(const Graph& g);
bool all_degrees_even(const Graph& g);
bool all_degrees_same_parity(const Graph& g);
bool is_connected(const Graph& g);
bool is_eulerian(const Graph& g);  // connected with all degrees even

}  // namespace gvm
