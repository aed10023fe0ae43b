#ifndef BLOCKSPEC_GRAPH_HPP
#define BLOCKSPEC_GRAPH_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace blockspec {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // always kept sorted
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1, stored as n adjacency bit-rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<Edge>& edges);
    static Graph complete(int n);

    int order() const { return static_cast<int>(rows_.size()); }
    std::size_t edge_count() const;

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }
    bool contains(Vertex v) const { return v >= 0 && v < order(); }

    int degree(Vertex v) const { return static_cast<int>(rows_[v].count()); }
    int max_degree() const;
    VertexSet neighbors(Vertex v) const;
    const boost::dynamic_bitset<>& row(Vertex v) const { return rows_[v]; }

    std::vector<Edge> edges() const;  // u < v, lexicographic

    bool operator==(const Graph&) const = default;

private:
    std::vector<boost::dynamic_bitset<>> rows_;
};

// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Remaining vertices keep their relative order and are relabeled densely.
Graph delete_vertex(const Graph& g, Vertex v);
Graph delete_vertices(const Graph& g, VertexSet vs);
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// Vertex-identified union: G keeps its labels, H's vertices other than h are
// appended in order after G's, and h is mapped onto g.
Graph coalesce(const Graph& g, Vertex at_g, const Graph& h, Vertex at_h);

// Label map used by coalesce for the vertices of H.
std::vector<Vertex> coalesce_map(int order_g, Vertex at_g, int order_h, Vertex at_h);

Graph disjoint_union(const Graph& a, const Graph& b);

// 2-connected components (Hopcroft-Tarjan). Isolated vertices yield singleton
// components and bridges yield two-vertex components.
std::vector<VertexSet> biconnected_components(const Graph& g);

}  // namespace blockspec

#endif  // BLOCKSPEC_GRAPH_HPP
