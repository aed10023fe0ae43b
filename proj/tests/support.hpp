#ifndef BLOCKSPEC_TESTS_SUPPORT_HPP
#define BLOCKSPEC_TESTS_SUPPORT_HPP

#include "blockspec/block_graph.hpp"
#include "blockspec/enumeration.hpp"
#include "blockspec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace blockspec::testing {

inline int pick(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Random member of B(qb+1, q): glue K_{q+1} at random vertices.
inline BlockGraph random_block_graph(int q, int b, std::mt19937_64& rng) {
    BlockGraph g = complete_block(q);
    const BlockGraph leaf = complete_block(q);
    for (int i = 1; i < b; ++i) g = coalesce(g, pick(rng, 0, g.order() - 1), leaf, pick(rng, 0, q));
    return g;
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<Vertex> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[pick(rng, 0, i)]);
    return p;
}

inline BlockGraph relabel(const BlockGraph& g, const std::vector<Vertex>& perm) {
    auto blocks = g.blocks();
    for (auto& b : blocks)
        for (auto& v : b) v = perm[v];
    std::reverse(blocks.begin(), blocks.end());
    return BlockGraph::from_blocks(g.q(), std::move(blocks));
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    Graph h(g.order());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph star_graph(int n) {  // K_{1,n-1}
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

// Enumeration that never looks at canonical codes: extend every kept graph at
// every vertex and keep a child only if the brute-force oracle finds it new.
inline std::vector<BlockGraph> oracle_enumeration(int q, int b) {
    std::vector<BlockGraph> level{complete_block(q)};
    for (int k = 2; k <= b; ++k) {
        std::vector<BlockGraph> next;
        for (const auto& parent : level) {
            for (Vertex v = 0; v < parent.order(); ++v) {
                BlockGraph child = coalesce(parent, v, complete_block(q), 0);
                bool seen = false;
                for (const auto& other : next)
                    if (is_isomorphic_oracle(child.graph(), other.graph())) {
                        seen = true;
                        break;
                    }
                if (!seen) next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace blockspec::testing

#endif
