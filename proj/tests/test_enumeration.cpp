#include "blockspec/canonical.hpp"
#include "blockspec/enumeration.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace blockspec;
using namespace blockspec::testing;

TEST_CASE("canonical_code examples") {
    std::mt19937_64 rng(51);
    const auto s = star(7, 2);
    for (int i = 0; i < 20; ++i) CHECK(canonical_code(relabel(s, random_permutation(7, rng))) == canonical_code(s));
    CHECK(canonical_code(s) != canonical_code(path_block(2, 3)));
}

TEST_CASE("canonical_code is invariant under sampled relabelings of B(7,2) members") {
    std::mt19937_64 rng(52);
    for (const auto& m : enumerate_class(2, 3)) {
        std::set<CanonicalCode> codes;
        for (int i = 0; i < 500; ++i) codes.insert(canonical_code(relabel(m.graph, random_permutation(7, rng))));
        CHECK(codes.size() == 1);
        CHECK(*codes.begin() == m.code);
    }
}

TEST_CASE("canonical_code tells apart the side a block hangs on") {
    // Both have a center block with pendants; only block sizes and the tree shape matter.
    const auto a = coalesce(path_block(2, 2), 1, complete_block(2), 0);  // pendant at a non-cut vertex
    const auto b = coalesce(path_block(2, 2), 2, complete_block(2), 0);  // pendant at the cut vertex
    CHECK(canonical_code(a) != canonical_code(b));
    CHECK(canonical_code(b) == canonical_code(star(7, 2)));
    CHECK(canonical_code(a) == canonical_code(path_block(2, 3)));
}

TEST_CASE("enumerate_class examples") {
    CHECK(enumerate_class(2, 1).size() == 1);
    CHECK(enumerate_class(2, 2).size() == 1);
    const auto b3 = enumerate_class(2, 3);
    REQUIRE(b3.size() == 2);
    std::set<CanonicalCode> codes{b3[0].code, b3[1].code};
    CHECK(codes == std::set<CanonicalCode>{canonical_code(star(7, 2)), canonical_code(path_block(2, 3))});
    // Triangular cacti with 4, 5, 6 triangles.
    CHECK(enumerate_class(2, 4).size() == 4);
    CHECK(enumerate_class(2, 5).size() == 8);
    CHECK(enumerate_class(2, 6).size() == 19);
    // Trees: 1, 1, 1, 2, 3, 6, 11, 23 unlabeled trees on 1..8 vertices.
    const std::vector<std::size_t> trees{1, 1, 2, 3, 6, 11, 23};
    for (int b = 1; b <= 7; ++b) CHECK(enumerate_class(1, b).size() == trees[b - 1]);
}

TEST_CASE("enumerate_class output is sorted and independent of jobs") {
    const auto a = enumerate_class(2, 6, 1);
    const auto b = enumerate_class(2, 6, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].code == b[i].code);
        CHECK(a[i].graph == b[i].graph);
        if (i) CHECK(a[i - 1].code < a[i].code);
    }
}

TEST_CASE("is_isomorphic_oracle examples") {
    std::mt19937_64 rng(53);
    const auto g = path_block(2, 4).graph();
    CHECK(is_isomorphic_oracle(g, relabel(g, random_permutation(g.order(), rng))));
    CHECK_FALSE(is_isomorphic_oracle(star(7, 2).graph(), path_block(2, 3).graph()));
    CHECK_THROWS_AS(is_isomorphic_oracle(path_graph(11), path_graph(11)), TooLarge);
}

TEST_CASE("property: class members are valid and contain one path and one star") {
    for (int q = 1; q <= 4; ++q) {
        std::size_t prev = 0;
        for (int b = 1; q * b + 1 <= 13; ++b) {
            const auto cls = enumerate_class(q, b);
            CHECK(cls.size() >= prev);
            prev = cls.size();
            int paths = 0, stars = 0;
            for (const auto& m : cls) {
                CHECK(m.graph.block_count() == b);
                CHECK(m.graph.q() == q);
                CHECK(canonical_code(m.graph) == m.code);
                CHECK_NOTHROW(BlockGraph::from_blocks(q, m.graph.blocks()));
                paths += is_path_block(m.graph);
                stars += is_star(m.graph);
            }
            CHECK(paths == 1);
            CHECK(stars == 1);
        }
    }
}

TEST_CASE("property: code equality matches the oracle for n <= 10") {
    for (int q = 1; q <= 9; ++q) {
        for (int b = 1; q * b + 1 <= 10; ++b) {
            // Include relabeled copies so equal codes on distinct labelings are exercised.
            std::mt19937_64 rng(static_cast<std::uint64_t>(100 * q + b));
            std::vector<BlockGraph> pool;
            for (const auto& m : enumerate_class(q, b)) {
                pool.push_back(m.graph);
                pool.push_back(relabel(m.graph, random_permutation(m.graph.order(), rng)));
            }
            for (std::size_t i = 0; i < pool.size(); ++i)
                for (std::size_t j = i; j < pool.size(); ++j)
                    CHECK((canonical_code(pool[i]) == canonical_code(pool[j])) ==
                          is_isomorphic_oracle(pool[i].graph(), pool[j].graph()));
        }
    }
}

TEST_CASE("oracle-driven enumeration agrees on counts") {
    for (int b = 1; b <= 4; ++b) CHECK(oracle_enumeration(2, b).size() == enumerate_class(2, b).size());
    for (int b = 1; b <= 3; ++b) CHECK(oracle_enumeration(3, b).size() == enumerate_class(3, b).size());
}
