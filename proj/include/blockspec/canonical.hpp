#ifndef BLOCKSPEC_CANONICAL_HPP
#define BLOCKSPEC_CANONICAL_HPP

#include "blockspec/block_graph.hpp"

#include <string>
#include <vector>

namespace blockspec {

// Label-invariant certificate of an isomorphism class.
struct CanonicalCode {
    std::string bytes;

    auto operator<=>(const CanonicalCode&) const = default;
};

// Code of a connected graph given as its list of clique blocks. Block sizes
// may differ; a lone vertex is a single block of size one. Vertex labels are
// arbitrary integers.
//
// The block-cut tree determines a block graph up to isomorphism once every
// block node is labeled by its size, so the code is the AHU string of that
// labeled tree rooted at its center (the smaller string when the center is an
// edge). Non-cut vertices are anonymous and only counted through block sizes.
CanonicalCode canonical_code(const std::vector<VertexSet>& blocks);
CanonicalCode canonical_code(const BlockGraph& g);

}  // namespace blockspec

#endif  // BLOCKSPEC_CANONICAL_HPP
