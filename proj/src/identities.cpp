#include "blockspec/identities.hpp"

#include "blockspec/charpoly.hpp"
#include "blockspec/transforms.hpp"

#include <algorithm>
#include <sstream>

namespace blockspec {

const char* to_string(IdentityName id) {
    switch (id) {
        case IdentityName::HubSwap: return "hub-swap";
        case IdentityName::PieceSwap: return "piece-swap";
        case IdentityName::CliqueRecursion: return "clique-recursion";
        case IdentityName::CliqueDifference: return "clique-difference";
        case IdentityName::PendantShift: return "pendant-shift";
        case IdentityName::EndpointBaseCase: return "endpoint-base-case";
        case IdentityName::EndpointGeneral: return "endpoint-general";
        case IdentityName::PendantShiftClosed: return "pendant-shift-closed";
    }
    return "?";
}

std::string IdentityInstance::describe() const {
    std::ostringstream os;
    os << "g=" << g.order() << "v/" << g.edge_count() << "e h=" << h.order() << "v/" << h.edge_count()
       << "e h2=" << h2.order() << "v u=" << u << " v=" << v << " w=" << w << " v1=" << v1 << " v2=" << v2
       << " q=" << q << " k=" << k << " l=" << l << " r=" << r << " s=" << s << " j=" << j;
    return os.str();
}

namespace {

IntPolynomial P(const Graph& g) { return charpoly_direct(g); }

IntPolynomial x_plus_one_pow(int e) {
    if (e < 0) throw std::invalid_argument("identity instance needs a nonnegative exponent");
    return IntPolynomial{1, 1}.pow(static_cast<unsigned>(e));
}

const IntPolynomial& X() {
    static const IntPolynomial x = IntPolynomial::x();
    return x;
}

IntPolynomial lin(long shift) { return IntPolynomial{shift, 1}; }  // x + shift

// P of G^l[q,k,l] (far end of the l-chain removed) and G^r[q,k,l].
IntPolynomial P_left(const IdentityInstance& in, int k, int l) {
    auto pp = pendant_pair(in.g, in.v, in.w, in.q, k, l);
    return P(delete_vertex(pp.graph, pp.left_end));
}
IntPolynomial P_right(const IdentityInstance& in, int k, int l) {
    auto pp = pendant_pair(in.g, in.v, in.w, in.q, k, l);
    return P(delete_vertex(pp.graph, pp.right_end));
}
IntPolynomial P_pair(const IdentityInstance& in, int k, int l) {
    return P(pendant_pair(in.g, in.v, in.w, in.q, k, l).graph);
}

IntPolynomial hub_swap(const IdentityInstance& in) {
    const auto g1 = coalesce(in.g, in.u, in.h, in.v);
    const auto g2 = coalesce(in.g, in.u, in.h, in.w);
    const auto lhs = P(g2) - P(g1);
    const auto rhs = (P(in.g) - X() * P(delete_vertex(in.g, in.u))) *
                     (P(delete_vertex(in.h, in.w)) - P(delete_vertex(in.h, in.v)));
    return lhs - rhs;
}

IntPolynomial piece_swap(const IdentityInstance& in) {
    const auto g1 = coalesce(in.g, in.v, in.h, in.v1);
    const auto g2 = coalesce(in.g, in.v, in.h2, in.v2);
    const auto pgv = P(delete_vertex(in.g, in.v));
    const auto lhs = P(g2) - P(g1);
    const auto rhs = (P(in.g) - X() * pgv) * (P(delete_vertex(in.h2, in.v2)) - P(delete_vertex(in.h, in.v1))) +
                     (P(in.h2) - P(in.h)) * pgv;
    return lhs - rhs;
}

IntPolynomial clique_recursion(const IdentityInstance& in) {
    const int s = in.s;
    const auto full = pendant_cliques(in.g, in.u, in.v, in.r, s);
    // Removing the s-1 new clique vertices leaves G(r,1); removing all of K_s
    // also removes v.
    const auto minus_inner = pendant_cliques(in.g, in.u, in.v, in.r, 1);
    const auto minus_all = delete_vertex(minus_inner, in.v);
    const auto rhs = x_plus_one_pow(s - 2) *
                     (lin(-(s - 2)) * P(minus_inner) - IntPolynomial::constant(s - 1) * P(minus_all));
    return P(full) - rhs;
}

IntPolynomial clique_difference(const IdentityInstance& in) {
    const int r = in.r, s = in.s;
    const auto lhs = P(pendant_cliques(in.g, in.u, in.v, r + 1, s - 1)) - P(pendant_cliques(in.g, in.u, in.v, r, s));
    const auto a = P(in.g);
    const auto b = P(delete_vertex(in.g, in.u));
    const auto c = P(delete_vertex(in.g, in.v));
    const auto d = P(delete_vertices(in.g, {in.u, in.v}));
    const auto rhs = x_plus_one_pow(s + r - 4) *
                     (IntPolynomial::constant(s - r - 1) * (a + b + c + d) + lin(1) * (c - b));
    return lhs - rhs;
}

IntPolynomial pendant_shift(const IdentityInstance& in) {
    const int q = in.q, k = in.k, l = in.l;
    const auto lhs = P_pair(in, k + 1, l - 1) - P_pair(in, k, l);
    const auto rhs = IntPolynomial::constant(q) * x_plus_one_pow(q - 1) * (P_left(in, k, l - 1) - P_right(in, k, l - 1));
    return lhs - rhs;
}

IntPolynomial endpoint_base_case(const IdentityInstance& in) {
    const int q = in.q, k = in.k, l = in.l;
    const auto lhs = P_left(in, k, l) - P_right(in, k, l);
    const auto rhs = x_plus_one_pow(2 * (q - 1)) * (P_left(in, k - 1, l - 1) - P_right(in, k - 1, l - 1));
    return lhs - rhs;
}

IntPolynomial endpoint_general(const IdentityInstance& in) {
    const int q = in.q, k = in.k, l = in.l, j = in.j;
    const auto lhs = P_left(in, k, l) - P_right(in, k, l);
    const auto rhs = x_plus_one_pow(2 * j * (q - 1)) * (P_left(in, k - j, l - j) - P_right(in, k - j, l - j));
    return lhs - rhs;
}

IntPolynomial pendant_shift_closed(const IdentityInstance& in) {
    const int q = in.q, k = in.k, l = in.l;
    const int t = k - l + 1;
    const auto lhs = P_pair(in, k + 1, l - 1) - P_pair(in, k, l);
    // (G - v)[q, t, 0]: the chain hangs at w inside G - v.
    const Graph g_minus_v = delete_vertex(in.g, in.v);
    const Vertex w_shifted = in.w > in.v ? in.w - 1 : in.w;
    const auto without_v = pendant_pair(g_minus_v, w_shifted, w_shifted, q, t, 0).graph;
    const auto rhs = IntPolynomial::constant(q) * x_plus_one_pow((2 * l - 1) * (q - 1)) *
                     (P(without_v) - P_right(in, t, 0));
    return lhs - rhs;
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Edge random_edge(const Graph& g, std::mt19937_64& rng) {
    const auto edges = g.edges();
    Edge e = edges[rng() % edges.size()];
    if (rng() % 2) std::swap(e.first, e.second);
    return e;
}

std::pair<Vertex, Vertex> distinct_pair(int n, std::mt19937_64& rng) {
    Vertex a = uniform(rng, 0, n - 1);
    Vertex b = uniform(rng, 0, n - 2);
    if (b >= a) ++b;
    return {a, b};
}

}  // namespace

Graph random_connected_graph(int n, double extra_edge_probability, std::mt19937_64& rng) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v, uniform(rng, 0, v - 1));
    const auto threshold = static_cast<std::uint64_t>(extra_edge_probability * 1e9);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!g.has_edge(a, b) && rng() % 1000000000ULL < threshold) g.add_edge(a, b);
    return g;
}

IntPolynomial identity_check(IdentityName id, const IdentityInstance& inst) {
    switch (id) {
        case IdentityName::HubSwap: return hub_swap(inst);
        case IdentityName::PieceSwap: return piece_swap(inst);
        case IdentityName::CliqueRecursion: return clique_recursion(inst);
        case IdentityName::CliqueDifference: return clique_difference(inst);
        case IdentityName::PendantShift: return pendant_shift(inst);
        case IdentityName::EndpointBaseCase: return endpoint_base_case(inst);
        case IdentityName::EndpointGeneral: return endpoint_general(inst);
        case IdentityName::PendantShiftClosed: return pendant_shift_closed(inst);
    }
    throw std::invalid_argument("unknown identity");
}

IdentityInstance random_instance(IdentityName id, std::mt19937_64& rng) {
    IdentityInstance in;
    switch (id) {
        case IdentityName::HubSwap: {
            in.g = random_connected_graph(uniform(rng, 2, 6), 0.3, rng);
            in.h = random_connected_graph(uniform(rng, 2, 6), 0.3, rng);
            in.u = uniform(rng, 0, in.g.order() - 1);
            std::tie(in.v, in.w) = distinct_pair(in.h.order(), rng);
            break;
        }
        case IdentityName::PieceSwap: {
            in.g = random_connected_graph(uniform(rng, 2, 6), 0.3, rng);
            in.h = random_connected_graph(uniform(rng, 2, 5), 0.3, rng);
            in.h2 = random_connected_graph(uniform(rng, 2, 5), 0.3, rng);
            in.v = uniform(rng, 0, in.g.order() - 1);
            in.v1 = uniform(rng, 0, in.h.order() - 1);
            in.v2 = uniform(rng, 0, in.h2.order() - 1);
            break;
        }
        case IdentityName::CliqueRecursion:
        case IdentityName::CliqueDifference: {
            in.g = random_connected_graph(uniform(rng, 2, 6), 0.3, rng);
            std::tie(in.u, in.v) = distinct_pair(in.g.order(), rng);
            in.s = uniform(rng, 3, 5);
            in.r = uniform(rng, 1, in.s - 2);
            break;
        }
        case IdentityName::PendantShift:
        case IdentityName::EndpointBaseCase:
        case IdentityName::EndpointGeneral:
        case IdentityName::PendantShiftClosed: {
            in.g = random_connected_graph(uniform(rng, 2, 5), 0.3, rng);
            std::tie(in.v, in.w) = random_edge(in.g, rng);
            in.q = uniform(rng, 1, 3);
            in.k = uniform(rng, 1, 3);
            in.l = uniform(rng, 1, in.k);
            in.j = uniform(rng, 1, in.l);
            break;
        }
    }
    return in;
}

}  // namespace blockspec
