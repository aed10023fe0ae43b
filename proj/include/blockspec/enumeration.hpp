#ifndef BLOCKSPEC_ENUMERATION_HPP
#define BLOCKSPEC_ENUMERATION_HPP

#include "blockspec/block_graph.hpp"
#include "blockspec/canonical.hpp"

#include <stdexcept>
#include <vector>

namespace blockspec {

struct ClassMember {
    CanonicalCode code;
    BlockGraph graph;
};

// One representative per isomorphism class of B(q*b + 1, q), sorted by code.
// Members with b blocks are obtained from those with b - 1 blocks by gluing a
// new K_{q+1} at one vertex; vertices in the same orbit are skipped through
// the code dedup. `jobs` > 1 spreads the extension of parents over threads.
std::vector<ClassMember> enumerate_class(int q, int b, int jobs = 1);

class TooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kOracleMaxOrder = 10;

// Backtracking permutation search with degree pruning. Throws TooLarge above
// kOracleMaxOrder vertices.
bool is_isomorphic_oracle(const Graph& g, const Graph& h);

}  // namespace blockspec

#endif  // BLOCKSPEC_ENUMERATION_HPP
