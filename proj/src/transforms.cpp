#include "blockspec/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace blockspec {

const char* to_string(Rule rule) {
    switch (rule) {
        case Rule::Prop1: return "Prop1";
        case Rule::Prop2: return "Prop2";
        case Rule::Prop3: return "Prop3";
    }
    return "?";
}

const char* to_string(TransformErrc code) {
    switch (code) {
        case TransformErrc::NotTypeOne: return "NotTypeOne";
        case TransformErrc::NotTypeTwo: return "NotTypeTwo";
        case TransformErrc::BadSizes: return "BadSizes";
        case TransformErrc::BadLengths: return "BadLengths";
        case TransformErrc::HypothesisUnverified: return "HypothesisUnverified";
        case TransformErrc::HypothesisViolated: return "HypothesisViolated";
        case TransformErrc::NoCutVertex: return "NoCutVertex";
    }
    return "?";
}

namespace {

[[noreturn]] void fail(TransformErrc code, const std::string& detail, std::optional<BlockGraph> offending = std::nullopt) {
    throw TransformError(code, std::string(to_string(code)) + ": " + detail, std::move(offending));
}

std::vector<int> other_blocks(const BlockGraph& g, Vertex v, int block) {
    std::vector<int> out;
    for (int i : g.blocks_of(v))
        if (i != block) out.push_back(i);
    return out;
}

// Drops the given blocks, keeps every other vertex and relabels densely.
struct Stripped {
    BlockGraph graph;
    std::map<Vertex, Vertex> relabel;
};

Stripped strip_blocks(const BlockGraph& g, const std::set<int>& drop) {
    std::set<Vertex> kept;
    std::vector<VertexSet> blocks;
    for (int i = 0; i < g.block_count(); ++i) {
        if (drop.count(i)) continue;
        blocks.push_back(g.block(i));
        kept.insert(g.block(i).begin(), g.block(i).end());
    }
    std::map<Vertex, Vertex> relabel;
    for (Vertex v : kept) relabel.emplace(v, static_cast<Vertex>(relabel.size()));
    for (auto& blk : blocks)
        for (auto& v : blk) v = relabel.at(v);
    return {BlockGraph::from_blocks(g.q(), std::move(blocks)), std::move(relabel)};
}

}  // namespace

BlockGraph prop1_shift(const BlockGraph& g, const SpecialBlockReport& site, int chain) {
    if (site.kind != SpecialKind::TypeOne || !site.block || site.attach_vertices.size() != 1)
        fail(TransformErrc::NotTypeOne, "site is not a type-one report");
    const int b = *site.block;
    const Vertex v = site.attach_vertices.front();
    if (b < 0 || b >= g.block_count() || !std::binary_search(g.block(b).begin(), g.block(b).end(), v))
        fail(TransformErrc::NotTypeOne, "site vertex is not in the site block");
    const auto starts = other_blocks(g, v, b);
    if (starts.size() < 2) fail(TransformErrc::NotTypeOne, "fewer than two pendant path-blocks at the site vertex");

    std::set<int> chain_blocks;
    std::vector<std::vector<int>> chains;
    for (int s : starts) {
        auto c = pendant_chain_blocks(g, v, s);
        if (c.empty()) fail(TransformErrc::NotTypeOne, "a block at the site vertex does not start a pendant path-block");
        chain_blocks.insert(c.begin(), c.end());
        chains.push_back(std::move(c));
    }
    if (chain < 0 || chain >= static_cast<int>(chains.size()))
        throw std::out_of_range("prop1_shift: chain index out of range");

    // Far end of the chosen chain: largest non-cut vertex of its last block.
    const VertexSet& last = g.block(chains[chain].back());
    Vertex w = -1;
    for (Vertex x : last)
        if (x != v && !g.is_cut_vertex(x)) w = std::max(w, x);

    auto blocks = g.blocks();
    for (int i = 0; i < g.block_count(); ++i) {
        if (chain_blocks.count(i)) continue;
        for (auto& x : blocks[i])
            if (x == v) x = w;
    }
    return BlockGraph::from_blocks(g.q(), std::move(blocks));
}

Prop1Pair prop1_instance(const BlockGraph& base, Vertex u, const std::vector<int>& arm_lengths, int chain) {
    if (!base.graph().contains(u)) throw std::out_of_range("prop1_instance: vertex out of range");
    if (base.is_cut_vertex(u)) fail(TransformErrc::NotTypeOne, "removing the hub from the base disconnects it");
    if (arm_lengths.size() < 2) fail(TransformErrc::NotTypeOne, "need at least two arms");
    BlockGraph h1 = base;
    for (int len : arm_lengths) {
        if (len < 1) fail(TransformErrc::BadLengths, "arm lengths must be positive");
        h1 = attach_pendant_path(h1, u, len).graph;
    }
    const SpecialBlockReport site{SpecialKind::TypeOne, base.blocks_of(u).front(), {u}};
    BlockGraph h2 = prop1_shift(h1, site, chain);
    return {std::move(h1), std::move(h2)};
}

Graph pendant_cliques(const Graph& g, Vertex u, Vertex v, int r, int s) {
    if (r < 1 || s < 1) fail(TransformErrc::BadSizes, "clique sizes must be positive");
    if (!g.contains(u) || !g.contains(v)) throw std::out_of_range("pendant_cliques: vertex out of range");
    Graph out = g;
    if (r >= 2) out = coalesce(out, u, Graph::complete(r), 0);
    if (s >= 2) out = coalesce(out, v, Graph::complete(s), 0);
    return out;
}

Prop2Step prop2_shift(const Graph& g, Vertex u, Vertex v, int r, int s) {
    if (!g.contains(u) || !g.contains(v)) throw std::out_of_range("prop2_shift: vertex out of range");
    if (u == v) fail(TransformErrc::BadSizes, "u and v must differ");
    if (r < 1 || r > s - 2) fail(TransformErrc::BadSizes, "need 1 <= r <= s - 2");
    Prop2Step step;
    const Graph gu = delete_vertex(g, u);
    const Graph gv = delete_vertex(g, v);
    if (gu == gv) {
        step.hypothesis_by_equality = true;
    } else {
        step.hypothesis_verdict = precedes(gu, gv);
        if (!step.hypothesis_verdict->holds())
            fail(TransformErrc::HypothesisUnverified,
                 std::string("G - u < G - v is ") + to_string(step.hypothesis_verdict->outcome));
    }
    step.before = pendant_cliques(g, u, v, r, s);
    step.after = pendant_cliques(g, u, v, r + 1, s - 1);
    return step;
}

PendantPair pendant_pair(const Graph& base, Vertex v, Vertex w, int q, int k, int l) {
    if (k < 0 || l < 0) fail(TransformErrc::BadLengths, "negative chain length");
    if (!base.contains(v) || !base.contains(w)) throw std::out_of_range("pendant_pair: vertex out of range");
    PendantPair out{base, v, w};
    if (l > 0) {
        const int n = out.graph.order();
        out.graph = coalesce(out.graph, v, path_block(q, l).graph(), 0);
        out.left_end = n + l * q - 1;
    }
    if (k > 0) {
        const int n = out.graph.order();
        out.graph = coalesce(out.graph, w, path_block(q, k).graph(), 0);
        out.right_end = n + k * q - 1;
    }
    return out;
}

BlockGraph pendant_pair(const BlockGraph& base, Vertex v, Vertex w, int k, int l) {
    if (k < 0 || l < 0) fail(TransformErrc::BadLengths, "negative chain length");
    return attach_pendant_path(attach_pendant_path(base, v, l).graph, w, k).graph;
}

BlockGraph prop3_shift(const BlockGraph& base, Vertex v, Vertex w, int k, int l, HypothesisPolicy policy) {
    if (!base.graph().contains(v) || !base.graph().contains(w)) throw std::out_of_range("prop3_shift: vertex out of range");
    if (v == w || !base.graph().has_edge(v, w)) throw std::invalid_argument("prop3_shift: v and w must be adjacent");
    if (base.cut_vertices().empty()) fail(TransformErrc::NoCutVertex, "the base graph has no cut vertex");
    if (l < 1 || l > k) fail(TransformErrc::BadLengths, "need 1 <= l <= k");
    BlockGraph before = pendant_pair(base, v, w, k, l);
    if (policy == HypothesisPolicy::Enforce && max_cut_clique(before) > 3)
        fail(TransformErrc::HypothesisViolated,
             "G[q,k,l] has " + std::to_string(max_cut_clique(before)) + " pairwise adjacent cut vertices",
             std::move(before));
    return pendant_pair(base, v, w, k + 1, l - 1);
}

BlockGraph prop3_shift(const BlockGraph& g, const SpecialBlockReport& site, HypothesisPolicy policy) {
    if (site.kind != SpecialKind::TypeTwo || !site.block || site.attach_vertices.size() != 2)
        fail(TransformErrc::NotTypeTwo, "site is not a type-two report");
    const int b = *site.block;
    Vertex v = site.attach_vertices[0];
    Vertex w = site.attach_vertices[1];
    const auto& blk = g.block(b);
    if (!std::binary_search(blk.begin(), blk.end(), v) || !std::binary_search(blk.begin(), blk.end(), w) || v == w)
        fail(TransformErrc::NotTypeTwo, "site vertices are not two vertices of the site block");

    const auto chain_at = [&](Vertex x) {
        const auto others = other_blocks(g, x, b);
        if (others.size() != 1) fail(TransformErrc::NotTypeTwo, "site vertex does not carry exactly one pendant path-block");
        auto c = pendant_chain_blocks(g, x, others.front());
        if (c.empty()) fail(TransformErrc::NotTypeTwo, "site vertex does not carry a pendant path-block");
        return c;
    };
    auto cv = chain_at(v);
    auto cw = chain_at(w);
    if (cv.size() > cw.size()) {
        std::swap(v, w);
        std::swap(cv, cw);
    }
    std::set<int> drop(cv.begin(), cv.end());
    drop.insert(cw.begin(), cw.end());
    const Stripped base = strip_blocks(g, drop);
    return prop3_shift(base.graph, base.relabel.at(v), base.relabel.at(w), static_cast<int>(cw.size()),
                       static_cast<int>(cv.size()), policy);
}

ReductionResult reduce_to_path_block(const BlockGraph& g, const ReduceOptions& options) {
    ReductionResult res{{}, g, spectral_radius(g, options.width).enclosure, 0};
    RationalInterval rho = res.rho_initial;
    const int cap = 4 * g.block_count() * g.block_count() + 16;
    while (true) {
        const SpecialBlockReport site = classify(res.final_graph);
        if (site.kind == SpecialKind::PathBlock) break;
        if (static_cast<int>(res.steps.size()) >= cap) throw std::logic_error("reduce_to_path_block: no termination");

        TransformStep step{site.kind == SpecialKind::TypeOne ? Rule::Prop1 : Rule::Prop3,
                           res.final_graph,
                           res.final_graph,
                           site,
                           max_cut_clique(res.final_graph),
                           false,
                           std::nullopt,
                           rho,
                           rho};
        if (step.rule == Rule::Prop1) {
            step.after = prop1_shift(step.before, site);
        } else {
            step.hypothesis_exceeded = step.max_cut_clique_before > 3;
            step.after = prop3_shift(step.before, site, options.policy);
        }
        step.rho_after = spectral_radius(step.after, options.width).enclosure;
        if (options.certify)
            step.verdict = precedes(step.before.graph(), step.after.graph(), options.order_budget);
        if (step.hypothesis_exceeded) ++res.hypothesis_exceeded_steps;
        rho = step.rho_after;
        res.final_graph = step.after;
        res.steps.push_back(std::move(step));
    }
    return res;
}

}  // namespace blockspec
