#include "blockspec/bounds.hpp"
#include "blockspec/charpoly.hpp"
#include "blockspec/enumeration.hpp"
#include "blockspec/polynomial.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace blockspec;
using namespace blockspec::testing;

TEST_CASE("IntPolynomial basics") {
    const IntPolynomial p{-2, -3, 0, 1};  // x^3 - 3x - 2
    CHECK(p.degree() == 3);
    CHECK(p.to_text() == "-2 -3 0 1");
    CHECK(IntPolynomial::from_text("-2 -3 0 1") == p);
    CHECK(p.to_string() == "x^3 - 3*x - 2");
    CHECK(IntPolynomial{}.degree() == -1);
    CHECK(IntPolynomial{0, 0}.is_zero());
    CHECK(p.evaluate(2) == 0);
    CHECK(p.sign_at(Rational(5, 2)) > 0);
    CHECK(p.sign_at(-1) == 0);
    CHECK(p.derivative() == IntPolynomial{-3, 0, 3});
    CHECK((IntPolynomial{1, 1}.pow(3)) == IntPolynomial{1, 3, 3, 1});
    CHECK((p - p).is_zero());
}

TEST_CASE("pseudo division, gcd, square-free part") {
    const IntPolynomial a = IntPolynomial::linear(2) * IntPolynomial{1, 1} * IntPolynomial{1, 1};
    const IntPolynomial b = IntPolynomial{1, 1} * IntPolynomial::linear(5);
    const auto pd = pseudo_divide(a, b);
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), b.leading().get_mpz_t(), pd.exponent);
    CHECK(a * scale == pd.quotient * b + pd.remainder);
    CHECK(gcd(a, b) == IntPolynomial{1, 1});
    CHECK(square_free_part(a) == IntPolynomial::linear(2) * IntPolynomial{1, 1});
    CHECK(exact_divide(a, IntPolynomial{1, 1}) == IntPolynomial::linear(2) * IntPolynomial{1, 1});
    CHECK_THROWS_AS(exact_divide(a, IntPolynomial::linear(7)), std::domain_error);
}

TEST_CASE("charpoly_direct examples") {
    CHECK(charpoly_direct(Graph::complete(3)) == IntPolynomial{-2, -3, 0, 1});
    CHECK(charpoly_direct(path_graph(3)) == IntPolynomial{0, -2, 0, 1});
    CHECK(charpoly_direct(path_graph(4)) == IntPolynomial{1, 0, -3, 0, 1});
    CHECK(charpoly_direct(Graph(1)) == IntPolynomial::x());
}

TEST_CASE("complete_charpoly examples") {
    CHECK(complete_charpoly(1) == IntPolynomial::x());
    CHECK(complete_charpoly(3) == IntPolynomial{-2, -3, 0, 1});
    CHECK(complete_charpoly(4) == IntPolynomial{-3, -8, -6, 0, 1});
    for (int n = 1; n <= 12; ++n) CHECK(complete_charpoly(n) == charpoly_direct(Graph::complete(n)));
}

TEST_CASE("schwenk_coalescence examples") {
    const IntPolynomial k2{-1, 0, 1}, x = IntPolynomial::x();
    CHECK(schwenk_coalescence(k2, x, k2, x) == IntPolynomial{0, -2, 0, 1});

    const auto k3 = complete_charpoly(3);
    const auto pp = schwenk_coalescence(k3, k2, k3, k2);
    CHECK(pp.degree() == 5);
    CHECK(pp == charpoly_direct(path_block(2, 2).graph()));

    const Graph paw = coalesce(Graph::complete(2), 0, Graph::complete(3), 0);
    CHECK(schwenk_coalescence(k2, x, k3, k2) == charpoly_direct(paw));

    CHECK_THROWS_AS(schwenk_coalescence(k2, k2, k3, k2), DegreeMismatch);
}

TEST_CASE("charpoly_schwenk examples") {
    for (int q = 1; q <= 5; ++q) CHECK(charpoly_schwenk(complete_block(q)) == complete_charpoly(q + 1));

    // (x+1)^2 ((x-2)(x+2)+1)((x-2)((x-2)(x+2)+1)-4)
    const IntPolynomial inner = IntPolynomial::linear(2) * IntPolynomial{2, 1} + IntPolynomial{1};
    const IntPolynomial expected =
        IntPolynomial{1, 1}.pow(2) * inner * (IntPolynomial::linear(2) * inner - IntPolynomial{4});
    CHECK(charpoly_schwenk(path_block(2, 3)) == expected);
    CHECK(expected == p3_charpoly(2));

    const auto s = charpoly_schwenk(star(7, 2));
    CHECK(s.degree() == 7);
    CHECK(s.sign_at(3) == 0);
    CHECK(s == charpoly_direct(star(7, 2).graph()));
}

TEST_CASE("charpoly_schwenk on mixed block sizes and forests") {
    // K_2 and K_3 glued plus an isolated vertex.
    const std::vector<VertexSet> blocks{{0, 1}, {1, 2, 3}, {4}};
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    CHECK(charpoly_schwenk(blocks) == charpoly_direct(g));
}

TEST_CASE("property: engines agree and trace facts hold") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const int q = pick(rng, 1, 4);
        const int bmax = std::max(1, 14 / q);
        const BlockGraph g = random_block_graph(q, pick(rng, 1, bmax), rng);
        const auto p = charpoly_schwenk(g);
        CHECK(p == charpoly_direct(g.graph()));
        const int n = g.order();
        CHECK(p.degree() == n);
        CHECK(p.leading() == 1);
        CHECK(p.coeff(n - 1) == 0);
        CHECK(p.coeff(n - 2) == -Integer(g.block_count() * q * (q + 1) / 2));
    }
}

TEST_CASE("property: charpoly is label invariant") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        const BlockGraph g = random_block_graph(pick(rng, 1, 3), pick(rng, 1, 5), rng);
        const auto perm = random_permutation(g.order(), rng);
        CHECK(charpoly_schwenk(relabel(g, perm)) == charpoly_schwenk(g));
        CHECK(charpoly_direct(relabel(g.graph(), perm)) == charpoly_direct(g.graph()));
    }
}

TEST_CASE("property: derivative against central differences") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Integer> c;
        const int deg = pick(rng, 0, 6);
        for (int i = 0; i <= deg; ++i) c.emplace_back(pick(rng, -20, 20));
        const IntPolynomial p(c);
        const Rational r(pick(rng, -50, 50), pick(rng, 1, 9));
        const Rational h(1, 1000);
        const Rational fd = (p.evaluate(r + h) - p.evaluate(r - h)) / (2 * h);
        const Rational err = abs(Rational(fd - p.derivative().evaluate(r)));
        // central differences are exact up to the cubic term
        const Rational bound = Rational(p.derivative().derivative().derivative().evaluate(r) * h * h);
        CHECK(err <= abs(bound) + Rational(1, 1000));
    }
}

TEST_CASE("property: gcd divides both and pseudo-division identity") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 50; ++trial) {
        auto rand_poly = [&](int deg) {
            std::vector<Integer> c;
            for (int i = 0; i <= deg; ++i) c.emplace_back(pick(rng, -9, 9));
            c.back() = pick(rng, 1, 5);
            return IntPolynomial(c);
        };
        const auto common = rand_poly(pick(rng, 0, 2));
        const auto a = common * rand_poly(pick(rng, 1, 4));
        const auto b = common * rand_poly(pick(rng, 1, 3));
        const auto g = gcd(a, b);
        CHECK(pseudo_remainder(a, g).is_zero());
        CHECK(pseudo_remainder(b, g).is_zero());
        CHECK(pseudo_remainder(g, common.primitive_part()).is_zero());
    }
}
