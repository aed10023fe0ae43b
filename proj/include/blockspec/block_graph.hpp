#ifndef BLOCKSPEC_BLOCK_GRAPH_HPP
#define BLOCKSPEC_BLOCK_GRAPH_HPP

#include "blockspec/graph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace blockspec {

enum class BlockGraphErrc {
    NonUniformBlock,
    BlocksShareEdge,
    Disconnected,
    BadDivisibility,
    BadVertexLabels,
    BlockMismatch,
};

const char* to_string(BlockGraphErrc code);

class BlockGraphError : public std::runtime_error {
public:
    BlockGraphError(BlockGraphErrc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    BlockGraphErrc code() const noexcept { return code_; }

private:
    BlockGraphErrc code_;
};

// A connected block graph whose blocks are all cliques on q+1 vertices.
// Immutable once built; every instance satisfies:
//   * n = q*b + 1 and |E| = b*q*(q+1)/2
//   * two blocks share at most one vertex
//   * the stored blocks coincide with the 2-connected components of graph()
//   * cut_vertices() is exactly the set of vertices lying in >= 2 blocks
class BlockGraph {
public:
    // Validates the block list against an independent biconnected-component
    // search. Vertices must be labeled 0..n-1. Block order is preserved and
    // each block is sorted.
    static BlockGraph from_blocks(int q, std::vector<VertexSet> blocks);

    int order() const { return graph_.order(); }
    int q() const { return q_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    const Graph& graph() const { return graph_; }
    const std::vector<VertexSet>& blocks() const { return blocks_; }
    const VertexSet& block(int index) const { return blocks_[index]; }
    const VertexSet& cut_vertices() const { return cut_vertices_; }
    bool is_cut_vertex(Vertex v) const { return blocks_of_[v].size() >= 2; }

    // Indices of the blocks containing v, ascending.
    const std::vector<int>& blocks_of(Vertex v) const { return blocks_of_[v]; }

    // Cut vertices lying in the given block, ascending.
    VertexSet cut_vertices_of_block(int index) const;

    // Block containing both u and v, if any.
    std::optional<int> common_block(Vertex u, Vertex v) const;

    friend bool operator==(const BlockGraph& a, const BlockGraph& b) {
        return a.q_ == b.q_ && a.blocks_ == b.blocks_;
    }

private:
    BlockGraph() = default;

    int q_ = 0;
    Graph graph_;
    std::vector<VertexSet> blocks_;
    std::vector<std::vector<int>> blocks_of_;
    VertexSet cut_vertices_;
};

// Named families.
BlockGraph complete_block(int q);                     // K_{q+1}
BlockGraph star(int n, int q);                        // S(n,q): all blocks share vertex 0
BlockGraph path_block(int q, int b);                  // P^q_b: B_i = {(i-1)q, ..., iq}
BlockGraph coalesce(const BlockGraph& g, Vertex at_g, const BlockGraph& h, Vertex at_h);

// Chain of `length` blocks glued at `at` by a non-cut vertex of its first
// leaf block. Returns the new graph and the far end (a non-cut vertex of the
// last block, or `at` itself when length is 0).
struct PendantPath {
    BlockGraph graph;
    Vertex end;
};
PendantPath attach_pendant_path(const BlockGraph& g, Vertex at, int length);

std::vector<int> leaf_blocks(const BlockGraph& g);
bool is_path_block(const BlockGraph& g);
bool is_star(const BlockGraph& g);

// Largest number of cut vertices inside one block. In a block graph the
// maximal cliques are the blocks, so this is the size of the largest set of
// pairwise adjacent cut vertices.
int max_cut_clique(const BlockGraph& g);

// Removing a vertex generally leaves a graph outside the class.
inline Graph delete_vertex(const BlockGraph& g, Vertex v) { return delete_vertex(g.graph(), v); }

// Length of the chain that starts at `v` through block `first`, if the part of
// the graph hanging from v through `first` is a pendant path-block.
std::optional<int> pendant_chain_length(const BlockGraph& g, Vertex v, int first);

// Blocks of that chain in order from v outward; empty when it is not a chain.
std::vector<int> pendant_chain_blocks(const BlockGraph& g, Vertex v, int first);

enum class SpecialKind { PathBlock, TypeOne, TypeTwo };

const char* to_string(SpecialKind kind);

struct SpecialBlockReport {
    SpecialKind kind = SpecialKind::PathBlock;
    std::optional<int> block;
    VertexSet attach_vertices;  // TypeOne: {v}; TypeTwo: {v, w} with chain(v) <= chain(w)

    bool operator==(const SpecialBlockReport&) const = default;
};

// Type one: a block B and v in B such that every other block at v starts a
// pendant path-block and there are at least two of them.
// Type two: a block B with single pendant path-blocks at two distinct
// vertices v, w of B.
// PathBlock takes precedence, then TypeOne, then TypeTwo; within a kind the
// lowest block index wins, then the lowest vertex ids.
SpecialBlockReport classify(const BlockGraph& g);

// Every type-one site (block, vertex) and type-two site (block, v, w), in
// tie-break order. Used to check exclusivity of classify.
std::vector<SpecialBlockReport> special_sites(const BlockGraph& g);

}  // namespace blockspec

#endif  // BLOCKSPEC_BLOCK_GRAPH_HPP
