#ifndef BLOCKSPEC_IO_HPP
#define BLOCKSPEC_IO_HPP

#include "blockspec/block_graph.hpp"
#include "blockspec/order.hpp"
#include "blockspec/polynomial.hpp"
#include "blockspec/spectral.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace blockspec {

using Json = nlohmann::ordered_json;

// {"q": 2, "blocks": [[0,1,2],[2,3,4]]}
Json to_json(const BlockGraph& g);
BlockGraph block_graph_from_json(const Json& j);

// One "u v" pair per line; '#' starts a comment. Order is max label + 1.
std::string to_edge_list(const Graph& g);
Graph graph_from_edge_list(const std::string& text);

// The block structure of g when every block is a clique of one common size
// q + 1 >= 2; nullopt otherwise.
std::optional<BlockGraph> as_block_graph(const Graph& g);

struct LoadedGraph {
    Graph graph;
    std::optional<BlockGraph> block;  // set when the graph is in some B(n, q)
};

// JSON when the first non-blank character is '{', edge list otherwise.
LoadedGraph parse_graph(const std::string& text);
LoadedGraph load_graph_file(const std::string& path);

// Coefficients constant term first; numbers when they fit in 64 bits,
// decimal strings otherwise.
Json to_json(const IntPolynomial& p);
Json to_json(const RationalInterval& r);
Json to_json(const OrderVerdict& v);

}  // namespace blockspec

#endif  // BLOCKSPEC_IO_HPP
