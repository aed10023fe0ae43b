#ifndef BLOCKSPEC_CHARPOLY_HPP
#define BLOCKSPEC_CHARPOLY_HPP

#include "blockspec/block_graph.hpp"
#include "blockspec/graph.hpp"
#include "blockspec/polynomial.hpp"

#include <stdexcept>

namespace blockspec {

class DegreeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// det(xI - A) by Faddeev-LeVerrier over the integers. Every division by k in
// the recurrence is exact and is checked. The empty graph gives 1.
IntPolynomial charpoly_direct(const Graph& g);

// (x - n + 1)(x + 1)^(n - 1); complete_charpoly(0) = 1.
IntPolynomial complete_charpoly(int n);

// Characteristic polynomial of the coalescence G.H at g and h:
//   P_G P_{H-h} + P_{G-g} P_H - x P_{G-g} P_{H-h}
IntPolynomial schwenk_coalescence(const IntPolynomial& pg, const IntPolynomial& pg_minus_g, const IntPolynomial& ph,
                                  const IntPolynomial& ph_minus_h);

// Peels leaf blocks one at a time, each peel being one coalescence with a
// complete graph. Subproblems are memoized by canonical code for the duration
// of one call.
IntPolynomial charpoly_schwenk(const BlockGraph& g);

// Same recursion over an arbitrary disjoint union of clique-block graphs
// (blocks of any size, singleton blocks for isolated vertices).
IntPolynomial charpoly_schwenk(const std::vector<VertexSet>& blocks);

}  // namespace blockspec

#endif  // BLOCKSPEC_CHARPOLY_HPP
