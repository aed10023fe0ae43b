#include "blockspec/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace blockspec {

Json to_json(const BlockGraph& g) {
    Json blocks = Json::array();
    for (const auto& b : g.blocks()) blocks.push_back(b);
    return Json{{"q", g.q()}, {"blocks", std::move(blocks)}};
}

BlockGraph block_graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("blocks"))
        throw std::invalid_argument("graph JSON needs \"q\" and \"blocks\"");
    return BlockGraph::from_blocks(j.at("q").get<int>(), j.at("blocks").get<std::vector<VertexSet>>());
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::vector<Edge> edges;
    std::string line;
    int lineno = 0;
    Vertex top = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long u, v;
        if (!(ls >> u)) continue;
        std::string rest;
        if (!(ls >> v) || (ls >> rest) || u < 0 || v < 0 || u == v)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": expected \"u v\" with u != v");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        top = std::max<Vertex>(top, static_cast<Vertex>(std::max(u, v)));
    }
    return Graph::from_edges(top + 1, edges);
}

std::optional<BlockGraph> as_block_graph(const Graph& g) {
    if (g.order() < 2 || !is_connected(g)) return std::nullopt;
    auto comps = biconnected_components(g);
    const std::size_t size = comps.front().size();
    for (const auto& c : comps) {
        if (c.size() != size || size < 2) return std::nullopt;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t k = i + 1; k < c.size(); ++k)
                if (!g.has_edge(c[i], c[k])) return std::nullopt;
    }
    std::sort(comps.begin(), comps.end());
    return BlockGraph::from_blocks(static_cast<int>(size) - 1, std::move(comps));
}

LoadedGraph parse_graph(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        BlockGraph bg = block_graph_from_json(Json::parse(text));
        return {bg.graph(), bg};
    }
    Graph g = graph_from_edge_list(text);
    auto bg = as_block_graph(g);
    return {std::move(g), std::move(bg)};
}

LoadedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

Json to_json(const IntPolynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) {
        if (c.fits_slong_p()) out.push_back(c.get_si());
        else out.push_back(c.get_str());
    }
    return out;
}

Json to_json(const RationalInterval& r) {
    return Json{{"lo", r.lo.get_str()}, {"hi", r.hi.get_str()}, {"decimal", r.to_decimal()}};
}

Json to_json(const OrderVerdict& v) {
    Json j{{"outcome", to_string(v.outcome)},
           {"reason", v.reason},
           {"rho_g", to_json(v.rho_g)},
           {"rounds", v.rounds},
           {"roots_in_enclosure", v.roots_in_enclosure},
           {"roots_above", v.roots_above},
           {"cospectral", v.cospectral}};
    if (v.witness) j["witness"] = v.witness->get_str();
    return j;
}

}  // namespace blockspec
