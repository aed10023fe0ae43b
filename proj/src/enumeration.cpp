#include "blockspec/enumeration.hpp"

#include "blockspec/parallel.hpp"

#include <algorithm>
#include <map>

namespace blockspec {

std::vector<ClassMember> enumerate_class(int q, int b, int jobs) {
    if (q < 1 || b < 1) throw std::invalid_argument("enumerate_class needs q >= 1 and b >= 1");
    std::vector<ClassMember> level;
    const BlockGraph seed = complete_block(q);
    level.push_back({canonical_code(seed), seed});
    const BlockGraph leaf = complete_block(q);

    for (int blocks = 2; blocks <= b; ++blocks) {
        std::vector<std::map<CanonicalCode, BlockGraph>> partial(level.size());
        parallel_for(level.size(), jobs, [&](std::size_t i) {
            const BlockGraph& parent = level[i].graph;
            for (Vertex v = 0; v < parent.order(); ++v) {
                BlockGraph child = coalesce(parent, v, leaf, 0);
                partial[i].try_emplace(canonical_code(child), std::move(child));
            }
        });
        // Merge in parent order so the kept representative does not depend on
        // thread scheduling.
        std::map<CanonicalCode, BlockGraph> merged;
        for (auto& m : partial)
            for (auto& [code, g] : m) merged.try_emplace(code, std::move(g));
        level.clear();
        for (auto& [code, g] : merged) level.push_back({code, std::move(g)});
    }
    return level;
}

namespace {

class IsoSearch {
public:
    IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h), map_(static_cast<std::size_t>(g.order()), -1),
                                                used_(static_cast<std::size_t>(g.order()), false) {
        // Map high-degree vertices first; they prune hardest.
        for (Vertex v = 0; v < g.order(); ++v) order_.push_back(v);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    bool run() { return extend(0); }

private:
    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const Vertex v = order_[depth];
        for (Vertex w = 0; w < h_.order(); ++w) {
            if (used_[w] || h_.degree(w) != g_.degree(v)) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const Vertex u = order_[k];
                ok = g_.has_edge(u, v) == h_.has_edge(map_[u], w);
            }
            if (!ok) continue;
            map_[v] = w;
            used_[w] = true;
            if (extend(depth + 1)) return true;
            used_[w] = false;
            map_[v] = -1;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<Vertex> map_;
    std::vector<bool> used_;
    std::vector<Vertex> order_;
};

}  // namespace

bool is_isomorphic_oracle(const Graph& g, const Graph& h) {
    if (g.order() > kOracleMaxOrder || h.order() > kOracleMaxOrder)
        throw TooLarge("is_isomorphic_oracle: more than " + std::to_string(kOracleMaxOrder) + " vertices");
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg, dh;
    for (Vertex v = 0; v < g.order(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return IsoSearch(g, h).run();
}

}  // namespace blockspec
