#include "blockspec/charpoly.hpp"
#include "blockspec/enumeration.hpp"
#include "blockspec/identities.hpp"
#include "blockspec/spectral.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace blockspec;
using namespace blockspec::testing;

TEST_CASE("sturm_count examples") {
    CHECK(sturm_count(IntPolynomial{-2, 0, 1}, 0, 2) == 1);
    CHECK(sturm_count(IntPolynomial{0, -2, 0, 1}, -2, 2) == 3);
    CHECK(sturm_count(charpoly_schwenk(star(7, 2)), Rational(29, 10), Rational(31, 10)) == 1);
}

TEST_CASE("sturm_count with roots at the endpoints") {
    const IntPolynomial p{-1, 0, 1};  // roots -1, 1
    CHECK(sturm_count(p, -1, 1) == 1);
    CHECK(sturm_count(p, -2, -1) == 1);
    CHECK(sturm_count(p, 1, 2) == 0);
    // repeated roots are counted once
    const IntPolynomial sq = IntPolynomial{1, 1}.pow(3) * IntPolynomial::linear(2);
    CHECK(sturm_count(sq, -5, 5) == 2);
    CHECK(SturmChain(sq).count_real() == 2);
}

TEST_CASE("spectral_radius examples") {
    const auto k4 = spectral_radius(complete_block(3));
    CHECK(k4.enclosure.contains(3));
    CHECK(k4.enclosure.width() <= default_width());

    const auto s = spectral_radius(star(7, 2));
    CHECK(s.enclosure.contains(3));
    CHECK(s.numeric_agrees);

    const auto p = spectral_radius(path_block(2, 3));
    CHECK(std::abs(p.enclosure.mid_double() - 2.8136) < 1e-3);
    CHECK(std::abs(p.enclosure.mid_double() - 2.81360650435) < 1e-9);
}

TEST_CASE("refine_largest_root validates its bracket") {
    const IntPolynomial p{-2, 0, 1};
    CHECK_THROWS_AS(refine_largest_root(p, 0, 1, Rational(1, 100)), std::invalid_argument);  // root above
    CHECK_THROWS_AS(refine_largest_root(p, 2, 3, Rational(1, 100)), std::invalid_argument);  // no root
    const auto r = refine_largest_root(p, 0, 2, Rational(1, 1000000));
    CHECK(r.lo * r.lo < 2);
    CHECK(r.hi * r.hi > 2);
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("1e-8") == Rational(1, 100000000));
    CHECK(parse_rational("0.001") == Rational(1, 1000));
    CHECK(parse_rational("3/7") == Rational(3, 7));
    CHECK(parse_rational("5") == 5);
    CHECK(parse_rational("2.5e2") == 250);
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("property: paths and stars against closed forms") {
    for (int n = 2; n <= 30; ++n) {
        const auto p = spectral_radius(path_graph(n), parse_rational("1e-12"));
        const double expected = 2 * std::cos(M_PI / (n + 1));
        CHECK(std::abs(p.enclosure.mid_double() - expected) < 1e-10);
        const auto s = spectral_radius(star_graph(n), parse_rational("1e-12"));
        CHECK(std::abs(s.enclosure.mid_double() - std::sqrt(n - 1.0)) < 1e-10);
    }
}

TEST_CASE("property: proper subgraph has smaller radius") {
    std::mt19937_64 rng(31);
    const Rational w(1, 1000000);
    int checked = 0;
    while (checked < 50) {
        const Graph g = random_connected_graph(pick(rng, 3, 9), 0.4, rng);
        // Remove a non-cut vertex or an edge whose removal keeps the graph connected.
        Graph h;
        if (rng() % 2) {
            const Vertex v = pick(rng, 0, g.order() - 1);
            h = delete_vertex(g, v);
        } else {
            const auto edges = g.edges();
            const Edge e = edges[rng() % edges.size()];
            h = g;
            h.remove_edge(e.first, e.second);
        }
        if (!is_connected(h)) continue;
        const auto rg = spectral_radius(g, w).enclosure;
        const auto rh = spectral_radius(h, w).enclosure;
        CHECK(rh.hi < rg.lo);
        ++checked;
    }
}

TEST_CASE("property: edge addition increases the radius") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_connected_graph(pick(rng, 3, 9), 0.2, rng);
        const auto [u, v] = [&] {
            for (;;) {
                const Vertex a = pick(rng, 0, g.order() - 1), b = pick(rng, 0, g.order() - 1);
                if (a != b && !g.has_edge(a, b)) return std::pair{a, b};
                if (g.edge_count() == static_cast<std::size_t>(g.order() * (g.order() - 1) / 2)) return std::pair{-1, -1};
            }
        }();
        if (u < 0) continue;
        const auto before = spectral_radius(g, Rational(1, 1000000)).enclosure;
        g.add_edge(u, v);
        const auto after = spectral_radius(g, Rational(1, 1000000)).enclosure;
        CHECK(before.hi < after.lo);
    }
}

TEST_CASE("property: q <= rho <= rho(S) on enumerated classes") {
    for (int q = 1; q <= 4; ++q) {
        for (int b = 1; q * b + 1 <= 13; ++b) {
            const auto top = spectral_radius(star(q * b + 1, q)).enclosure;
            for (const auto& m : enumerate_class(q, b)) {
                const auto r = spectral_radius(m.graph);
                CHECK(r.enclosure.hi >= q);
                CHECK(r.enclosure.lo <= top.hi);
                CHECK(r.enclosure.width() <= default_width());
                CHECK(r.numeric_agrees);
            }
        }
    }
}

TEST_CASE("spectral_radius on general graphs uses the direct engine") {
    Graph c5(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    const auto r = spectral_radius(c5);
    CHECK(r.enclosure.contains(2));
    CHECK(spectral_radius(Graph(1)).enclosure.contains(0));
}
