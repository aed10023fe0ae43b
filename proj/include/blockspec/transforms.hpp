#ifndef BLOCKSPEC_TRANSFORMS_HPP
#define BLOCKSPEC_TRANSFORMS_HPP

#include "blockspec/block_graph.hpp"
#include "blockspec/order.hpp"
#include "blockspec/spectral.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace blockspec {

enum class Rule { Prop1, Prop2, Prop3 };

const char* to_string(Rule rule);

enum class TransformErrc {
    NotTypeOne,
    NotTypeTwo,
    BadSizes,
    BadLengths,
    HypothesisUnverified,
    HypothesisViolated,
    NoCutVertex,
};

const char* to_string(TransformErrc code);

class TransformError : public std::runtime_error {
public:
    TransformError(TransformErrc code, const std::string& what, std::optional<BlockGraph> offending = std::nullopt)
        : std::runtime_error(what), code_(code), offending_(std::move(offending)) {}

    TransformErrc code() const noexcept { return code_; }
    const std::optional<BlockGraph>& offending() const noexcept { return offending_; }

private:
    TransformErrc code_;
    std::optional<BlockGraph> offending_;
};

// What to do when the pendant-path rebalancing is asked for on a graph with
// four or more cut vertices in one block.
enum class HypothesisPolicy {
    Enforce,  // throw HypothesisViolated
    Track,    // apply anyway and flag the step
};

// ---------------------------------------------------------------------------
// Hub shift. A type-one site (B, v) has k >= 2 pendant path-blocks at v and
// the rest of the graph meets v only through B. The rest is detached from v
// and glued instead at the far end (a non-cut vertex of the last block) of
// one of the chains. `chain` picks that chain among those at v, ordered by the
// index of their first block.
BlockGraph prop1_shift(const BlockGraph& g, const SpecialBlockReport& site, int chain = 0);

// Both sides of the hub shift for a base graph G, a vertex u that is not a
// cut vertex of G, and arms (chains of the given lengths, each >= 1) glued at
// u. `h1` is the assembly glued at the hub, `h2` the shifted one.
struct Prop1Pair {
    BlockGraph h1;
    BlockGraph h2;
};
Prop1Pair prop1_instance(const BlockGraph& base, Vertex u, const std::vector<int>& arm_lengths, int chain = 0);

// ---------------------------------------------------------------------------
// G(r, s): K_r glued at u and K_s glued at v (K_1 glues nothing).
Graph pendant_cliques(const Graph& g, Vertex u, Vertex v, int r, int s);

struct Prop2Step {
    Graph before;  // G(r, s)
    Graph after;   // G(r + 1, s - 1)
    // How "G - u < G - v or G - u = G - v" was established.
    bool hypothesis_by_equality = false;
    std::optional<OrderVerdict> hypothesis_verdict;
};

// Requires 1 <= r <= s - 2 (BadSizes) and a verified hypothesis
// (HypothesisUnverified otherwise).
Prop2Step prop2_shift(const Graph& g, Vertex u, Vertex v, int r, int s);

// ---------------------------------------------------------------------------
// G[q, k, l]: a pendant (q, l)-path-block at v and a pendant (q, k)-path-block
// at w. Ends are the far non-cut vertices v_l and v'_k, or v / w for an empty
// chain. The l-chain is attached first, so its vertices come first.
struct PendantPair {
    Graph graph;
    Vertex left_end;
    Vertex right_end;
};
PendantPair pendant_pair(const Graph& base, Vertex v, Vertex w, int q, int k, int l);
BlockGraph pendant_pair(const BlockGraph& base, Vertex v, Vertex w, int k, int l);

// G[q, k, l] -> G[q, k + 1, l - 1]. Requires v, w adjacent, a cut vertex in the
// base, 1 <= l <= k, and (under Enforce) max_cut_clique(G[q, k, l]) <= 3.
BlockGraph prop3_shift(const BlockGraph& base, Vertex v, Vertex w, int k, int l,
                       HypothesisPolicy policy = HypothesisPolicy::Enforce);

// Same surgery located by a type-two site of a whole graph: one block moves
// from the shorter chain (at attach_vertices[0]) to the longer one.
BlockGraph prop3_shift(const BlockGraph& g, const SpecialBlockReport& site,
                       HypothesisPolicy policy = HypothesisPolicy::Enforce);

// ---------------------------------------------------------------------------
struct TransformStep {
    Rule rule;
    BlockGraph before;
    BlockGraph after;
    SpecialBlockReport site;
    int max_cut_clique_before = 0;
    bool hypothesis_exceeded = false;  // Prop3 applied with a block of >= 4 cut vertices
    std::optional<OrderVerdict> verdict;  // precedes(before, after)
    RationalInterval rho_before;
    RationalInterval rho_after;
};

struct ReduceOptions {
    HypothesisPolicy policy = HypothesisPolicy::Enforce;
    Rational width = default_width();
    bool certify = true;  // decide precedes(before, after) for every step
    int order_budget = kDefaultOrderBudget;
};

struct ReductionResult {
    std::vector<TransformStep> steps;
    BlockGraph final_graph;
    RationalInterval rho_initial;
    int hypothesis_exceeded_steps = 0;
};

// Repeatedly classifies and applies the matching shift (type one: hub shift,
// type two: pendant rebalancing) until a path-block is reached.
ReductionResult reduce_to_path_block(const BlockGraph& g, const ReduceOptions& options = {});

}  // namespace blockspec

#endif  // BLOCKSPEC_TRANSFORMS_HPP
