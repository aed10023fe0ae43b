#include "blockspec/block_graph.hpp"

#include <algorithm>
#include <set>

namespace blockspec {

const char* to_string(BlockGraphErrc code) {
    switch (code) {
        case BlockGraphErrc::NonUniformBlock: return "NonUniformBlock";
        case BlockGraphErrc::BlocksShareEdge: return "BlocksShareEdge";
        case BlockGraphErrc::Disconnected: return "Disconnected";
        case BlockGraphErrc::BadDivisibility: return "BadDivisibility";
        case BlockGraphErrc::BadVertexLabels: return "BadVertexLabels";
        case BlockGraphErrc::BlockMismatch: return "BlockMismatch";
    }
    return "?";
}

const char* to_string(SpecialKind kind) {
    switch (kind) {
        case SpecialKind::PathBlock: return "PathBlock";
        case SpecialKind::TypeOne: return "TypeOne";
        case SpecialKind::TypeTwo: return "TypeTwo";
    }
    return "?";
}

namespace {

[[noreturn]] void fail(BlockGraphErrc code, const std::string& detail) {
    throw BlockGraphError(code, std::string(to_string(code)) + ": " + detail);
}

}  // namespace

BlockGraph BlockGraph::from_blocks(int q, std::vector<VertexSet> blocks) {
    if (q < 1) fail(BlockGraphErrc::NonUniformBlock, "q must be at least 1");
    if (blocks.empty()) fail(BlockGraphErrc::NonUniformBlock, "no blocks");

    Vertex max_label = -1;
    for (auto& blk : blocks) {
        std::sort(blk.begin(), blk.end());
        if (std::adjacent_find(blk.begin(), blk.end()) != blk.end())
            fail(BlockGraphErrc::NonUniformBlock, "repeated vertex inside a block");
        if (static_cast<int>(blk.size()) != q + 1)
            fail(BlockGraphErrc::NonUniformBlock,
                 "block of size " + std::to_string(blk.size()) + ", expected " + std::to_string(q + 1));
        if (blk.front() < 0) fail(BlockGraphErrc::BadVertexLabels, "negative vertex label");
        max_label = std::max(max_label, blk.back());
    }

    const int n = max_label + 1;
    std::vector<std::vector<int>> blocks_of(static_cast<std::size_t>(n));
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
        for (Vertex v : blocks[i]) blocks_of[v].push_back(i);
    for (Vertex v = 0; v < n; ++v)
        if (blocks_of[v].empty()) fail(BlockGraphErrc::BadVertexLabels, "vertex " + std::to_string(v) + " unused");

    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            VertexSet common;
            std::set_intersection(blocks[i].begin(), blocks[i].end(), blocks[j].begin(), blocks[j].end(),
                                  std::back_inserter(common));
            if (common.size() >= 2)
                fail(BlockGraphErrc::BlocksShareEdge,
                     "blocks " + std::to_string(i) + " and " + std::to_string(j) + " share an edge");
        }
    }

    Graph g(n);
    for (const auto& blk : blocks)
        for (std::size_t a = 0; a < blk.size(); ++a)
            for (std::size_t c = a + 1; c < blk.size(); ++c) g.add_edge(blk[a], blk[c]);
    if (!is_connected(g)) fail(BlockGraphErrc::Disconnected, "graph is not connected");

    auto found = biconnected_components(g);
    auto expected = blocks;
    std::sort(found.begin(), found.end());
    std::sort(expected.begin(), expected.end());
    if (found != expected) fail(BlockGraphErrc::BlockMismatch, "2-connected components differ from the given blocks");

    BlockGraph out;
    out.q_ = q;
    out.graph_ = std::move(g);
    out.blocks_ = std::move(blocks);
    out.blocks_of_ = std::move(blocks_of);
    for (Vertex v = 0; v < n; ++v)
        if (out.blocks_of_[v].size() >= 2) out.cut_vertices_.push_back(v);
    return out;
}

VertexSet BlockGraph::cut_vertices_of_block(int index) const {
    VertexSet out;
    for (Vertex v : blocks_[index])
        if (is_cut_vertex(v)) out.push_back(v);
    return out;
}

std::optional<int> BlockGraph::common_block(Vertex u, Vertex v) const {
    for (int i : blocks_of_[u])
        if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), v)) return i;
    return std::nullopt;
}

BlockGraph complete_block(int q) {
    VertexSet blk(static_cast<std::size_t>(q + 1));
    for (int i = 0; i <= q; ++i) blk[i] = i;
    return BlockGraph::from_blocks(q, {blk});
}

BlockGraph star(int n, int q) {
    if (q < 1 || n < q + 1 || (n - 1) % q != 0)
        throw BlockGraphError(BlockGraphErrc::BadDivisibility,
                              "BadDivisibility: n-1 = " + std::to_string(n - 1) + " is not a positive multiple of q = " +
                                  std::to_string(q));
    const int b = (n - 1) / q;
    std::vector<VertexSet> blocks;
    for (int i = 0; i < b; ++i) {
        VertexSet blk{0};
        for (int j = 1; j <= q; ++j) blk.push_back(i * q + j);
        blocks.push_back(std::move(blk));
    }
    return BlockGraph::from_blocks(q, std::move(blocks));
}

BlockGraph path_block(int q, int b) {
    if (q < 1 || b < 1) throw std::invalid_argument("path_block needs q >= 1 and b >= 1");
    std::vector<VertexSet> blocks;
    for (int i = 0; i < b; ++i) {
        VertexSet blk;
        for (int j = 0; j <= q; ++j) blk.push_back(i * q + j);
        blocks.push_back(std::move(blk));
    }
    return BlockGraph::from_blocks(q, std::move(blocks));
}

BlockGraph coalesce(const BlockGraph& g, Vertex at_g, const BlockGraph& h, Vertex at_h) {
    if (g.q() != h.q()) throw std::invalid_argument("coalescence of block graphs with different q");
    if (!g.graph().contains(at_g) || !h.graph().contains(at_h))
        throw std::out_of_range("coalescence vertex out of range");
    const auto map = coalesce_map(g.order(), at_g, h.order(), at_h);
    auto blocks = g.blocks();
    for (const auto& blk : h.blocks()) {
        VertexSet mapped;
        for (Vertex v : blk) mapped.push_back(map[v]);
        blocks.push_back(std::move(mapped));
    }
    return BlockGraph::from_blocks(g.q(), std::move(blocks));
}

PendantPath attach_pendant_path(const BlockGraph& g, Vertex at, int length) {
    if (length < 0) throw std::invalid_argument("negative path length");
    if (length == 0) return {g, at};
    const int n = g.order();
    return {coalesce(g, at, path_block(g.q(), length), 0), n + length * g.q() - 1};
}

std::vector<int> leaf_blocks(const BlockGraph& g) {
    std::vector<int> out;
    for (int i = 0; i < g.block_count(); ++i)
        if (g.cut_vertices_of_block(i).size() == 1) out.push_back(i);
    return out;
}

bool is_path_block(const BlockGraph& g) {
    if (g.block_count() == 1) return true;
    if (leaf_blocks(g).size() > 2) return false;
    for (int i = 0; i < g.block_count(); ++i)
        if (g.cut_vertices_of_block(i).size() > 2) return false;
    return true;
}

bool is_star(const BlockGraph& g) { return g.cut_vertices().size() <= 1; }

int max_cut_clique(const BlockGraph& g) {
    int best = 0;
    for (int i = 0; i < g.block_count(); ++i)
        best = std::max(best, static_cast<int>(g.cut_vertices_of_block(i).size()));
    return best;
}

std::vector<int> pendant_chain_blocks(const BlockGraph& g, Vertex v, int first) {
    std::vector<int> chain;
    Vertex from = v;
    int cur = first;
    while (true) {
        chain.push_back(cur);
        VertexSet onward;
        for (Vertex x : g.block(cur))
            if (x != from && g.is_cut_vertex(x)) onward.push_back(x);
        if (onward.empty()) return chain;
        if (onward.size() > 1) return {};
        const Vertex x = onward.front();
        const auto& at_x = g.blocks_of(x);
        if (at_x.size() != 2) return {};
        from = x;
        cur = (at_x[0] == cur) ? at_x[1] : at_x[0];
    }
}

std::optional<int> pendant_chain_length(const BlockGraph& g, Vertex v, int first) {
    auto chain = pendant_chain_blocks(g, v, first);
    if (chain.empty()) return std::nullopt;
    return static_cast<int>(chain.size());
}

namespace {

std::vector<int> other_blocks_at(const BlockGraph& g, Vertex v, int block) {
    std::vector<int> out;
    for (int i : g.blocks_of(v))
        if (i != block) out.push_back(i);
    return out;
}

std::vector<SpecialBlockReport> type_one_sites(const BlockGraph& g) {
    std::vector<SpecialBlockReport> out;
    for (int b = 0; b < g.block_count(); ++b) {
        for (Vertex v : g.block(b)) {
            const auto others = other_blocks_at(g, v, b);
            if (others.size() < 2) continue;
            const bool all_chains = std::all_of(others.begin(), others.end(), [&](int c) {
                return pendant_chain_length(g, v, c).has_value();
            });
            if (all_chains) out.push_back({SpecialKind::TypeOne, b, {v}});
        }
    }
    return out;
}

// (vertex, chain length) for every vertex of the block carrying exactly one
// pendant path-block.
std::vector<std::pair<Vertex, int>> chain_vertices(const BlockGraph& g, int b) {
    std::vector<std::pair<Vertex, int>> out;
    for (Vertex v : g.block(b)) {
        const auto others = other_blocks_at(g, v, b);
        if (others.size() != 1) continue;
        if (auto len = pendant_chain_length(g, v, others.front())) out.emplace_back(v, *len);
    }
    return out;
}

SpecialBlockReport oriented_pair(int b, std::pair<Vertex, int> x, std::pair<Vertex, int> y) {
    if (y.second < x.second) std::swap(x, y);
    return {SpecialKind::TypeTwo, b, {x.first, y.first}};
}

}  // namespace

std::vector<SpecialBlockReport> special_sites(const BlockGraph& g) {
    auto out = type_one_sites(g);
    for (int b = 0; b < g.block_count(); ++b) {
        const auto cv = chain_vertices(g, b);
        for (std::size_t i = 0; i < cv.size(); ++i)
            for (std::size_t j = i + 1; j < cv.size(); ++j) out.push_back(oriented_pair(b, cv[i], cv[j]));
    }
    return out;
}

SpecialBlockReport classify(const BlockGraph& g) {
    if (is_path_block(g)) return {SpecialKind::PathBlock, std::nullopt, {}};
    if (auto ones = type_one_sites(g); !ones.empty()) return ones.front();
    for (int b = 0; b < g.block_count(); ++b) {
        const auto cv = chain_vertices(g, b);
        if (cv.size() >= 2) return oriented_pair(b, cv[0], cv[1]);
    }
    // Unreachable on valid block graphs: a non-path block-cut tree always has
    // a branching node all but one of whose directions are chains.
    throw std::logic_error("classify: no special block found in a non-path block graph");
}

}  // namespace blockspec
