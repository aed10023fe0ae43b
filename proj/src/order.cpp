#include "blockspec/order.hpp"

#include "blockspec/charpoly.hpp"

#include <stdexcept>

namespace blockspec {

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Holds: return "Holds";
        case Outcome::Fails: return "Fails";
        case Outcome::Undecided: return "Undecided";
    }
    return "?";
}

namespace {

// 1 + max |c_i / lc| bounds the modulus of every root.
Rational cauchy_bound(const IntPolynomial& p) {
    Rational best = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational r(abs(p.coeffs()[i]), abs(p.leading()));
        if (r > best) best = r;
    }
    return best + 1;
}

// Some x >= from with d(x) <= 0, given that d has a root above `from`.
std::optional<Rational> nonpositive_point_above(const IntPolynomial& d, const Rational& from) {
    const Rational top = std::max(cauchy_bound(d), Rational(from + 1));
    auto enc = refine_largest_root(d, from, top, Rational(1, 1 << 20));
    for (const Rational& x : {enc.lo, enc.hi})
        if (x >= from && d.sign_at(x) <= 0) return x;
    return std::nullopt;
}

OrderVerdict decide(const IntPolynomial& pg, const IntPolynomial& ph, const Rational& rho_upper, int budget) {
    OrderVerdict v;
    RationalInterval enc = refine_largest_root(pg, Rational(-1), rho_upper, Rational(1, 1024));
    const IntPolynomial d = ph - pg;

    if (d.is_zero()) {
        v.outcome = Outcome::Fails;
        v.reason = "P_H - P_G vanishes identically";
        v.witness = enc.hi;
        v.rho_g = enc;
        return v;
    }

    const SturmChain sc_g(pg);
    const SturmChain sc_d(d);
    const IntPolynomial common = gcd(d, pg);
    const std::optional<SturmChain> sc_common =
        common.degree() >= 1 ? std::optional<SturmChain>(SturmChain(common)) : std::nullopt;

    for (int round = 0;; ++round) {
        v.rho_g = enc;
        v.rounds = round;
        const Rational& lo = enc.lo;
        const Rational& hi = enc.hi;

        v.roots_above = sc_d.count_above(hi);
        if (v.roots_above > 0) {
            v.outcome = Outcome::Fails;
            v.reason = "P_H - P_G has a real root above the enclosure of rho(G)";
            v.witness = nonpositive_point_above(d, hi);
            return v;
        }
        if (d.sign_at_pos_infinity() < 0) {
            v.outcome = Outcome::Fails;
            v.reason = "P_H - P_G is negative beyond rho(G)";
            v.witness = hi + 1;
            return v;
        }
        if (d.sign_at(hi) <= 0) {
            v.outcome = Outcome::Fails;
            v.reason = "P_H - P_G <= 0 at the upper end of the enclosure of rho(G)";
            v.witness = hi;
            return v;
        }
        if (enc.is_point()) {
            v.outcome = Outcome::Holds;
            v.reason = "rho(G) is rational and P_H - P_G > 0 on [rho(G), inf)";
            return v;
        }
        v.roots_in_enclosure = sc_d.count(lo, hi);
        if (v.roots_in_enclosure == 0) {
            v.outcome = Outcome::Holds;
            v.reason = "P_H - P_G has no real root in (lo, inf) and is positive there";
            return v;
        }
        if (sc_common && sc_g.count(lo, hi) == 1 && sc_common->count(lo, hi) > 0) {
            v.outcome = Outcome::Fails;
            v.reason = "P_H(rho(G)) = P_G(rho(G)): gcd(P_H - P_G, P_G) vanishes at rho(G)";
            return v;
        }
        if (round >= budget) {
            v.outcome = Outcome::Undecided;
            v.reason = "refinement budget exhausted";
            return v;
        }
        Rational mid = (lo + hi) / 2;
        if (sc_g.count(mid, hi) >= 1) {
            enc.lo = mid;
        } else if (pg.sign_at(mid) == 0) {
            enc = {mid, mid};
        } else {
            enc.hi = mid;
        }
    }
}

}  // namespace

OrderVerdict precedes(const IntPolynomial& pg, const IntPolynomial& ph, int budget) {
    if (pg.degree() != ph.degree()) throw std::invalid_argument("precedes: graphs of different order");
    return decide(pg, ph, cauchy_bound(pg), budget);
}

OrderVerdict precedes(const Graph& g, const Graph& h, int budget) {
    if (g.order() != h.order()) throw std::invalid_argument("precedes: graphs of different order");
    const IntPolynomial pg = charpoly_direct(g);
    const IntPolynomial ph = charpoly_direct(h);
    OrderVerdict v = decide(pg, ph, Rational(g.max_degree()), budget);
    v.cospectral = (pg == ph) && !(g == h);
    return v;
}

}  // namespace blockspec
