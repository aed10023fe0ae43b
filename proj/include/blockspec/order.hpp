#ifndef BLOCKSPEC_ORDER_HPP
#define BLOCKSPEC_ORDER_HPP

#include "blockspec/graph.hpp"
#include "blockspec/polynomial.hpp"
#include "blockspec/spectral.hpp"

#include <optional>
#include <string>

namespace blockspec {

enum class Outcome { Holds, Fails, Undecided };

const char* to_string(Outcome o);

// Result of deciding G < H, i.e. P_H(x) > P_G(x) for every x >= rho(G).
struct OrderVerdict {
    Outcome outcome = Outcome::Undecided;
    std::string reason;

    // Fails: a rational x >= rho(G) with P_H(x) - P_G(x) <= 0, when one exists.
    std::optional<Rational> witness;
    // Enclosure of rho(G) at the moment of the decision.
    RationalInterval rho_g;
    int rounds = 0;
    // Distinct roots of D = P_H - P_G found in the final enclosure and above it.
    int roots_in_enclosure = 0;
    int roots_above = 0;
    // P_H == P_G on different adjacency matrices.
    bool cospectral = false;

    bool holds() const { return outcome == Outcome::Holds; }
};

inline constexpr int kDefaultOrderBudget = 64;

// Exact decision procedure. Each round halves the enclosure of rho(G);
// Undecided is returned once `budget` rounds have been spent.
OrderVerdict precedes(const Graph& g, const Graph& h, int budget = kDefaultOrderBudget);

// Variant on precomputed characteristic polynomials.
OrderVerdict precedes(const IntPolynomial& pg, const IntPolynomial& ph, int budget = kDefaultOrderBudget);

}  // namespace blockspec

#endif  // BLOCKSPEC_ORDER_HPP
