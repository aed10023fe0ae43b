#include "blockspec/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace blockspec {

Graph::Graph(int n) : rows_(static_cast<std::size_t>(n), boost::dynamic_bitset<>(static_cast<std::size_t>(n))) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (!contains(u) || !contains(v)) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    rows_[u].set(v);
    rows_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    rows_[u].reset(v);
    rows_[v].reset(u);
}

int Graph::max_degree() const {
    int best = 0;
    for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
    return best;
}

VertexSet Graph::neighbors(Vertex v) const {
    VertexSet out;
    for (auto i = rows_[v].find_first(); i != boost::dynamic_bitset<>::npos; i = rows_[v].find_next(i))
        out.push_back(static_cast<Vertex>(i));
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
        for (auto i = rows_[u].find_next(static_cast<std::size_t>(u)); i != boost::dynamic_bitset<>::npos;
             i = rows_[u].find_next(i))
            out.emplace_back(u, static_cast<Vertex>(i));
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Vertex> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) { return g.order() > 0 && connected_components(g).size() == 1; }

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return out;
}

Graph delete_vertices(const Graph& g, VertexSet vs) {
    std::sort(vs.begin(), vs.end());
    VertexSet keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!std::binary_search(vs.begin(), vs.end(), v)) keep.push_back(v);
    return induced_subgraph(g, keep);
}

Graph delete_vertex(const Graph& g, Vertex v) {
    if (!g.contains(v)) throw std::out_of_range("vertex out of range");
    return delete_vertices(g, {v});
}

std::vector<Vertex> coalesce_map(int order_g, Vertex at_g, int order_h, Vertex at_h) {
    std::vector<Vertex> map(static_cast<std::size_t>(order_h));
    Vertex next = order_g;
    for (Vertex y = 0; y < order_h; ++y) map[y] = (y == at_h) ? at_g : next++;
    return map;
}

Graph coalesce(const Graph& g, Vertex at_g, const Graph& h, Vertex at_h) {
    if (!g.contains(at_g) || !h.contains(at_h)) throw std::out_of_range("coalescence vertex out of range");
    const auto map = coalesce_map(g.order(), at_g, h.order(), at_h);
    Graph out(g.order() + h.order() - 1);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(map[u], map[v]);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.order() + b.order());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
    return out;
}

std::vector<VertexSet> biconnected_components(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> edge_stack;
    std::vector<VertexSet> out;
    int timer = 0;

    struct Frame {
        Vertex v;
        Vertex parent;
        VertexSet nbrs;
        std::size_t next;
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            out.push_back({root});
            continue;
        }
        std::vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, g.neighbors(root), 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < f.nbrs.size()) {
                Vertex w = f.nbrs[f.next++];
                if (disc[w] < 0) {
                    edge_stack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    Vertex parent = f.v;
                    stack.push_back({w, parent, g.neighbors(w), 0});
                } else if (w != f.parent && disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const Vertex v = f.v;
            const Vertex parent = f.parent;
            stack.pop_back();
            if (parent < 0) continue;
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] >= disc[parent]) {
                VertexSet comp;
                while (true) {
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    comp.push_back(e.first);
                    comp.push_back(e.second);
                    if (e == Edge{parent, v}) break;
                }
                std::sort(comp.begin(), comp.end());
                comp.erase(std::unique(comp.begin(), comp.end()), comp.end());
                out.push_back(std::move(comp));
            }
        }
    }
    return out;
}

}  // namespace blockspec
