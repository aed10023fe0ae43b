#include "blockspec/block_graph.hpp"
#include "blockspec/enumeration.hpp"
#include "blockspec/graph.hpp"
#include "blockspec/transforms.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace blockspec;
using namespace blockspec::testing;

namespace {

BlockGraphErrc error_of(int q, std::vector<VertexSet> blocks) {
    try {
        BlockGraph::from_blocks(q, std::move(blocks));
    } catch (const BlockGraphError& e) {
        return e.code();
    }
    FAIL("expected BlockGraphError");
    return BlockGraphErrc::BlockMismatch;
}

}  // namespace

TEST_CASE("from_blocks examples") {
    const auto k3 = BlockGraph::from_blocks(2, {{0, 1, 2}});
    CHECK(k3.order() == 3);
    CHECK(k3.block_count() == 1);
    CHECK(k3.cut_vertices().empty());

    const auto p = BlockGraph::from_blocks(2, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
    CHECK(p.cut_vertices() == VertexSet{2, 4});
    CHECK(is_path_block(p));
    CHECK(p == path_block(2, 3));

    CHECK(error_of(2, {{0, 1, 2}, {1, 2, 3}}) == BlockGraphErrc::BlocksShareEdge);
}

TEST_CASE("from_blocks rejects malformed input") {
    CHECK(error_of(2, {{0, 1, 2}, {3, 4}}) == BlockGraphErrc::NonUniformBlock);
    CHECK(error_of(2, {{0, 1, 2}, {3, 4, 5}}) == BlockGraphErrc::Disconnected);
    CHECK(error_of(2, {{0, 1, 2}, {2, 3, 9}}) == BlockGraphErrc::BadVertexLabels);
    // Triangles around a cycle are not a block graph: the cycle 0-2-4 merges them.
    CHECK(error_of(2, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}) != BlockGraphErrc::NonUniformBlock);
}

TEST_CASE("coalesce examples") {
    const Graph k2 = Graph::complete(2);
    const Graph p3 = coalesce(k2, 1, k2, 0);
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.degree(1) == 2);

    CHECK(coalesce(complete_block(2), 2, complete_block(2), 0) == path_block(2, 2));

    const auto s7 = coalesce(star(5, 2), 0, complete_block(2), 0);
    CHECK(is_star(s7));
    CHECK(s7.order() == 7);
    CHECK(canonical_code(s7) == canonical_code(star(7, 2)));
}

TEST_CASE("coalesce keeps G's labels and maps h onto g") {
    const Graph g = path_graph(3);
    const Graph h = Graph::complete(3);
    const Graph f = coalesce(g, 2, h, 1);
    CHECK(f.order() == 5);
    CHECK(f.has_edge(0, 1));
    CHECK(f.has_edge(1, 2));
    CHECK(f.has_edge(2, 3));
    CHECK(f.has_edge(2, 4));
    CHECK(f.has_edge(3, 4));
    CHECK(coalesce_map(3, 2, 3, 1) == std::vector<Vertex>{3, 2, 4});
}

TEST_CASE("star examples") {
    const auto s = star(7, 2);
    CHECK(s.block_count() == 3);
    CHECK(s.cut_vertices() == VertexSet{0});
    CHECK(star(3, 2) == complete_block(2));
    CHECK_THROWS_AS(star(8, 2), BlockGraphError);
    try {
        star(8, 2);
    } catch (const BlockGraphError& e) {
        CHECK(e.code() == BlockGraphErrc::BadDivisibility);
    }
}

TEST_CASE("path_block examples") {
    const auto p5 = path_block(1, 4);
    CHECK(p5.order() == 5);
    CHECK(p5.graph() == path_graph(5));
    CHECK(path_block(2, 3).order() == 7);
    CHECK(path_block(3, 1) == complete_block(3));
    const auto p = path_block(3, 4);
    for (int i = 0; i + 1 < p.block_count(); ++i) {
        VertexSet common;
        std::set_intersection(p.block(i).begin(), p.block(i).end(), p.block(i + 1).begin(), p.block(i + 1).end(),
                              std::back_inserter(common));
        CHECK(common.size() == 1);
    }
}

TEST_CASE("classify examples") {
    CHECK(classify(path_block(2, 4)).kind == SpecialKind::PathBlock);

    const auto s = classify(star(7, 2));
    CHECK(s.kind == SpecialKind::TypeOne);
    CHECK(s.attach_vertices == VertexSet{0});

    // G[3,3,4]: K_4 carrying a 4-chain at 0, a 3-chain at 1 and a pendant K_4
    // at 2 so that the whole thing is not a path-block.
    const auto base = coalesce(complete_block(3), 2, complete_block(3), 0);
    const auto g = pendant_pair(base, 0, 1, 3, 4);
    const auto r = classify(g);
    CHECK(r.kind == SpecialKind::TypeTwo);
    REQUIRE(r.block);
    CHECK(*r.block == 0);
    CHECK(r.attach_vertices == VertexSet{1, 0});
}

TEST_CASE("max_cut_clique examples") {
    CHECK(max_cut_clique(path_block(2, 5)) == 2);
    CHECK(max_cut_clique(star(7, 2)) == 1);
    BlockGraph g = complete_block(3);
    for (Vertex v = 0; v < 4; ++v) g = coalesce(g, v, complete_block(3), 0);
    CHECK(max_cut_clique(g) == 4);
    CHECK(max_cut_clique(complete_block(2)) == 0);
}

TEST_CASE("q = 1 gives trees") {
    const auto s = star(5, 1);
    CHECK(s.graph() == star_graph(5));
    CHECK(classify(s).kind == SpecialKind::TypeOne);
    CHECK(classify(path_block(1, 6)).kind == SpecialKind::PathBlock);
}

TEST_CASE("biconnected components") {
    Graph g = path_graph(4);
    g.add_edge(0, 2);
    const auto comps = biconnected_components(g);
    CHECK(comps.size() == 2);
    CHECK(std::find(comps.begin(), comps.end(), VertexSet{0, 1, 2}) != comps.end());
    CHECK(std::find(comps.begin(), comps.end(), VertexSet{2, 3}) != comps.end());
    CHECK(biconnected_components(Graph(1)) == std::vector<VertexSet>{{0}});
}

TEST_CASE("delete_vertex relabels densely") {
    const Graph g = path_graph(4);
    const Graph h = delete_vertex(g, 1);
    CHECK(h.order() == 3);
    CHECK(h.edge_count() == 1);
    CHECK(h.has_edge(1, 2));
    CHECK(delete_vertices(g, {0, 3}) == path_graph(2));
}

TEST_CASE("property: class invariants on random members") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int q = pick(rng, 1, 4), b = pick(rng, 1, 7);
        const BlockGraph g = random_block_graph(q, b, rng);
        CHECK(g.order() == q * b + 1);
        CHECK(g.block_count() == b);
        CHECK(g.graph().edge_count() == static_cast<std::size_t>(b * q * (q + 1) / 2));
        for (Vertex v = 0; v < g.order(); ++v) {
            CHECK_FALSE(g.graph().has_edge(v, v));
            const bool connected = is_connected(delete_vertex(g, v));
            CHECK(connected == !g.is_cut_vertex(v));
        }
        // Cut vertices are exactly those in >= 2 blocks.
        for (Vertex v : g.cut_vertices()) CHECK(g.blocks_of(v).size() >= 2);
    }
}

TEST_CASE("property: coalesce edge count and block union") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const int q = pick(rng, 1, 3);
        const BlockGraph g = random_block_graph(q, pick(rng, 1, 4), rng);
        const BlockGraph h = random_block_graph(q, pick(rng, 1, 4), rng);
        const Vertex a = pick(rng, 0, g.order() - 1), c = pick(rng, 0, h.order() - 1);
        const BlockGraph f = coalesce(g, a, h, c);
        CHECK(f.graph().edge_count() == g.graph().edge_count() + h.graph().edge_count());
        CHECK(f.block_count() == g.block_count() + h.block_count());
        const auto map = coalesce_map(g.order(), a, h.order(), c);
        std::set<VertexSet> expected(g.blocks().begin(), g.blocks().end());
        for (auto blk : h.blocks()) {
            for (auto& v : blk) v = map[v];
            std::sort(blk.begin(), blk.end());
            expected.insert(blk);
        }
        CHECK(std::set<VertexSet>(f.blocks().begin(), f.blocks().end()) == expected);
    }
}

TEST_CASE("property: classify is total and exclusive on small classes") {
    for (int q = 1; q <= 4; ++q) {
        for (int b = 1; q * b + 1 <= 13; ++b) {
            for (const auto& m : enumerate_class(q, b)) {
                const auto r = classify(m.graph);
                const auto sites = special_sites(m.graph);
                if (is_path_block(m.graph)) {
                    CHECK(r.kind == SpecialKind::PathBlock);
                } else {
                    CHECK(r.kind != SpecialKind::PathBlock);
                    REQUIRE_FALSE(sites.empty());
                    // classify reports the first TypeOne site if any, else the first TypeTwo.
                    const auto first_one = std::find_if(sites.begin(), sites.end(),
                                                        [](const auto& s) { return s.kind == SpecialKind::TypeOne; });
                    CHECK(r == (first_one != sites.end() ? *first_one : sites.front()));
                }
            }
        }
    }
}

TEST_CASE("SpecialBlockReport invariant: PathBlock iff <= 2 leaves and <= 2 cut vertices per block") {
    for (int q = 2; q <= 3; ++q) {
        for (int b = 1; b <= 5; ++b) {
            for (const auto& m : enumerate_class(q, b)) {
                bool small = leaf_blocks(m.graph).size() <= 2;
                for (int i = 0; i < m.graph.block_count(); ++i)
                    small = small && m.graph.cut_vertices_of_block(i).size() <= 2;
                CHECK((classify(m.graph).kind == SpecialKind::PathBlock) == small);
            }
        }
    }
}
