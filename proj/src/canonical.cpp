#include "blockspec/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace blockspec {

namespace {

// Block-cut tree: nodes [0, B) are blocks, nodes [B, B + C) are cut vertices.
struct BlockCutTree {
    int block_count = 0;
    std::vector<int> block_size;
    std::vector<std::vector<int>> adj;

    bool is_block(int node) const { return node < block_count; }
};

BlockCutTree build_tree(const std::vector<VertexSet>& blocks) {
    BlockCutTree t;
    t.block_count = static_cast<int>(blocks.size());
    std::map<Vertex, std::vector<int>> containing;
    for (int i = 0; i < t.block_count; ++i) {
        t.block_size.push_back(static_cast<int>(blocks[i].size()));
        for (Vertex v : blocks[i]) containing[v].push_back(i);
    }
    t.adj.resize(static_cast<std::size_t>(t.block_count));
    for (const auto& [v, bs] : containing) {
        if (bs.size() < 2) continue;
        const int node = static_cast<int>(t.adj.size());
        t.adj.emplace_back(bs);
        for (int b : bs) t.adj[b].push_back(node);
    }
    return t;
}

std::vector<int> tree_centers(const BlockCutTree& t) {
    const int n = static_cast<int>(t.adj.size());
    if (n == 1) return {0};
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<int> layer;
    for (int i = 0; i < n; ++i) {
        deg[i] = static_cast<int>(t.adj[i].size());
        if (deg[i] <= 1) layer.push_back(i);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int leaf : layer)
            for (int w : t.adj[leaf])
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

// Blocks render as "[size children]", cut vertices as "(children)".
std::string encode(const BlockCutTree& t, int node, int parent) {
    std::vector<std::string> kids;
    for (int w : t.adj[node])
        if (w != parent) kids.push_back(encode(t, w, node));
    std::sort(kids.begin(), kids.end());
    std::string out;
    if (t.is_block(node)) {
        out += '[';
        out += std::to_string(t.block_size[node]);
    } else {
        out += '(';
    }
    for (const auto& k : kids) out += k;
    out += t.is_block(node) ? ']' : ')';
    return out;
}

}  // namespace

CanonicalCode canonical_code(const std::vector<VertexSet>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("canonical_code of an empty graph");
    const BlockCutTree t = build_tree(blocks);
    std::string best;
    for (int c : tree_centers(t)) {
        std::string s = encode(t, c, -1);
        if (best.empty() || s < best) best = std::move(s);
    }
    return {std::move(best)};
}

CanonicalCode canonical_code(const BlockGraph& g) { return canonical_code(g.blocks()); }

}  // namespace blockspec
