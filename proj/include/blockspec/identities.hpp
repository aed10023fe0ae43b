#ifndef BLOCKSPEC_IDENTITIES_HPP
#define BLOCKSPEC_IDENTITIES_HPP

#include "blockspec/graph.hpp"
#include "blockspec/polynomial.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>

namespace blockspec {

// Polynomial identities behind the monotone shifts. Every characteristic
// polynomial involved is computed with charpoly_direct, independently of the
// Schwenk engine.
enum class IdentityName {
    HubSwap,             // P_{G2} - P_{G1} = (P_G - x P_{G-u}) (P_{H-w} - P_{H-v})
    PieceSwap,           // two-piece variant with H1, H2
    CliqueRecursion,     // P_{G(r,s)} via G(r,s) - K_{s-1} and G(r,s) - K_s
    CliqueDifference,    // P_{G(r+1,s-1)} - P_{G(r,s)}
    PendantShift,        // P_{G[q,k+1,l-1]} - P_{G[q,k,l]} via G^l, G^r
    EndpointBaseCase,    // P_{G^l[q,k,l]} - P_{G^r[q,k,l]} one level down
    EndpointGeneral,     // same, j levels down
    PendantShiftClosed,  // the difference in terms of (G - v)[q,t,0] and G^r[q,t,0]
};

inline constexpr std::array<IdentityName, 8> kAllIdentities{
    IdentityName::HubSwap,          IdentityName::PieceSwap,        IdentityName::CliqueRecursion,
    IdentityName::CliqueDifference, IdentityName::PendantShift,     IdentityName::EndpointBaseCase,
    IdentityName::EndpointGeneral,  IdentityName::PendantShiftClosed,
};

const char* to_string(IdentityName id);

// Cast of characters; each identity reads the fields it needs.
//   HubSwap:            g, u, h, v, w
//   PieceSwap:          g, v, h (= H1), v1, h2, v2
//   CliqueRecursion:    g, u, v, r, s        (s >= 2)
//   CliqueDifference:   g, u, v, r, s        (r + s >= 4, s >= 2)
//   PendantShift:       g, v, w, q, k, l     (l >= 1)
//   EndpointBaseCase:   g, v, w, q, k, l     (k, l >= 1)
//   EndpointGeneral:    g, v, w, q, k, l, j  (1 <= j <= min(k, l))
//   PendantShiftClosed: g, v, w, q, k, l     (1 <= l <= k)
struct IdentityInstance {
    Graph g;
    Graph h;
    Graph h2;
    Vertex u = 0, v = 0, w = 0, v1 = 0, v2 = 0;
    int q = 2, k = 1, l = 1, r = 1, s = 3, j = 1;

    std::string describe() const;
};

// Left side minus right side, exactly. Zero when the identity holds.
IntPolynomial identity_check(IdentityName id, const IdentityInstance& inst);

// Random instantiation with small connected graphs.
IdentityInstance random_instance(IdentityName id, std::mt19937_64& rng);

// Connected graph on n vertices: random spanning tree plus extra edges.
Graph random_connected_graph(int n, double extra_edge_probability, std::mt19937_64& rng);

}  // namespace blockspec

#endif  // BLOCKSPEC_IDENTITIES_HPP
