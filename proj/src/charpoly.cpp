#include "blockspec/charpoly.hpp"

#include "blockspec/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace blockspec {

IntPolynomial charpoly_direct(const Graph& g) {
    const int n = g.order();
    if (n == 0) return IntPolynomial::constant(1);
    std::vector<std::vector<Vertex>> nbrs(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);

    using Matrix = std::vector<std::vector<Integer>>;
    const auto times_adjacency = [&](const Matrix& m) {
        Matrix out(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (Vertex j : nbrs[i])
                for (int c = 0; c < n; ++c) out[i][c] += m[j][c];
        return out;
    };

    std::vector<Integer> coeffs(static_cast<std::size_t>(n + 1));
    coeffs[n] = 1;
    Matrix m(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n)));
    for (int k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k) / k
        m = times_adjacency(m);
        for (int i = 0; i < n; ++i) m[i][i] += coeffs[n - k + 1];
        Integer trace = 0;
        for (int i = 0; i < n; ++i)
            for (Vertex j : nbrs[i]) trace += m[j][i];
        if (!mpz_divisible_ui_p(trace.get_mpz_t(), static_cast<unsigned long>(k)))
            throw std::logic_error("charpoly_direct: inexact Faddeev-LeVerrier division");
        Integer c;
        mpz_divexact_ui(c.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
        coeffs[n - k] = -c;
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial complete_charpoly(int n) {
    if (n < 0) throw std::invalid_argument("complete_charpoly: negative order");
    if (n == 0) return IntPolynomial::constant(1);
    return IntPolynomial::linear(n - 1) * IntPolynomial{1, 1}.pow(static_cast<unsigned>(n - 1));
}

IntPolynomial schwenk_coalescence(const IntPolynomial& pg, const IntPolynomial& pg_minus_g, const IntPolynomial& ph,
                                  const IntPolynomial& ph_minus_h) {
    if (pg.degree() != pg_minus_g.degree() + 1 || ph.degree() != ph_minus_h.degree() + 1)
        throw DegreeMismatch("schwenk_coalescence: deleted-vertex polynomials must have degree one less");
    return pg * ph_minus_h + pg_minus_g * ph - IntPolynomial::x() * pg_minus_g * ph_minus_h;
}

namespace {

using BlockList = std::vector<VertexSet>;

std::vector<BlockList> split_components(const BlockList& blocks) {
    std::map<Vertex, int> first_block;
    std::vector<int> parent(blocks.size());
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
        for (Vertex v : blocks[i]) {
            auto [it, inserted] = first_block.emplace(v, i);
            if (!inserted) parent[find(i)] = find(it->second);
        }
    }
    std::map<int, BlockList> groups;
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i) groups[find(i)].push_back(blocks[i]);
    std::vector<BlockList> out;
    for (auto& [root, bl] : groups) out.push_back(std::move(bl));
    return out;
}

// Block list of the graph with v removed. Blocks through v lose it; a block
// reduced to one vertex survives only if that vertex would otherwise vanish.
BlockList remove_vertex(const BlockList& blocks, Vertex v) {
    BlockList shrunk, out;
    std::map<Vertex, int> multiplicity;
    for (const auto& blk : blocks) {
        VertexSet b;
        for (Vertex x : blk)
            if (x != v) b.push_back(x);
        if (b.empty()) continue;
        if (b.size() >= 2)
            for (Vertex x : b) ++multiplicity[x];
        shrunk.push_back(std::move(b));
    }
    for (auto& b : shrunk) {
        if (b.size() == 1) {
            if (multiplicity[b.front()] > 0) continue;
            ++multiplicity[b.front()];
        }
        out.push_back(std::move(b));
    }
    return out;
}

class SchwenkEngine {
public:
    IntPolynomial of(const BlockList& blocks) {
        IntPolynomial p = IntPolynomial::constant(1);
        for (const auto& comp : split_components(blocks)) p *= connected(comp);
        return p;
    }

private:
    IntPolynomial connected(const BlockList& comp) {
        if (comp.size() == 1) return complete_charpoly(static_cast<int>(comp.front().size()));
        auto key = canonical_code(comp).bytes;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::map<Vertex, int> count;
        for (const auto& blk : comp)
            for (Vertex v : blk) ++count[v];
        // Lowest-index leaf block and its unique cut vertex.
        std::size_t leaf = comp.size();
        Vertex cut = -1;
        for (std::size_t i = 0; i < comp.size() && leaf == comp.size(); ++i) {
            int cuts = 0;
            Vertex c = -1;
            for (Vertex v : comp[i])
                if (count[v] >= 2) {
                    ++cuts;
                    c = v;
                }
            if (cuts == 1) {
                leaf = i;
                cut = c;
            }
        }
        if (leaf == comp.size()) throw std::logic_error("charpoly_schwenk: input is not a clique-block graph");

        BlockList rest;
        for (std::size_t i = 0; i < comp.size(); ++i)
            if (i != leaf) rest.push_back(comp[i]);
        const int m = static_cast<int>(comp[leaf].size());
        IntPolynomial p = schwenk_coalescence(connected(rest), of(remove_vertex(rest, cut)), complete_charpoly(m),
                                              complete_charpoly(m - 1));
        memo_.emplace(std::move(key), p);
        return p;
    }

    std::unordered_map<std::string, IntPolynomial> memo_;
};

}  // namespace

IntPolynomial charpoly_schwenk(const std::vector<VertexSet>& blocks) {
    if (blocks.empty()) return IntPolynomial::constant(1);
    SchwenkEngine engine;
    return engine.of(blocks);
}

IntPolynomial charpoly_schwenk(const BlockGraph& g) { return charpoly_schwenk(g.blocks()); }

}  // namespace blockspec
