#include "z2embed/graph.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace z2embed {

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges)
    : vertex_count_(vertex_count), incident_(vertex_count) {
    std::set<std::pair<Vertex, Vertex>> seen;
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a >= vertex_count || b >= vertex_count) {
            throw InputError("edge endpoint out of range: " + std::to_string(a) + " " +
                             std::to_string(b));
        }
        if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
        if (!seen.emplace(a, b).second) {
            throw InputError("parallel edge " + std::to_string(a) + " " + std::to_string(b));
        }
        incident_[a].push_back(edges_.size());
        incident_[b].push_back(edges_.size());
        edges_.push_back({a, b});
    }
}

std::vector<EdgePair> independent_pairs(const Graph& g) {
    std::vector<EdgePair> out;
    const auto& es = g.edges();
    for (EdgeId i = 0; i < es.size(); ++i) {
        for (EdgeId j = i + 1; j < es.size(); ++j) {
            if (!es[i].shares_vertex(es[j])) out.push_back({i, j, PairKind::independent});
        }
    }
    return out;
}

PairIndex::PairIndex(const Graph& g)
    : edge_count_(g.edge_count()),
      pairs_(independent_pairs(g)),
      slot_(edge_count_ * edge_count_, npos) {
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        slot_[pairs_[k].i * edge_count_ + pairs_[k].j] = k;
        slot_[pairs_[k].j * edge_count_ + pairs_[k].i] = k;
    }
}

std::size_t PairIndex::find(EdgeId i, EdgeId j) const {
    if (i >= edge_count_ || j >= edge_count_) return npos;
    return slot_[i * edge_count_ + j];
}

Graph complete_graph(std::size_t n) {
    if (n == 0) throw InputError("complete_graph: n must be positive");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) es.emplace_back(a, b);
    return Graph(n, std::move(es));
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) throw InputError("complete_bipartite: sizes must be positive");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex a = 0; a < m; ++a)
        for (Vertex b = 0; b < n; ++b) es.emplace_back(a, m + b);
    return Graph(m + n, std::move(es));
}

namespace {

// Reads the next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

std::size_t parse_index(const std::string& tok, const char* what) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw InputError(std::string("expected non-negative integer for ") + what + ", got '" +
                         tok + "'");
    }
    return std::stoull(tok);
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw InputError("graph: empty input");
    std::istringstream header(line);
    std::string kw, count;
    header >> kw >> count;
    if (kw != "graph") throw InputError("graph: expected 'graph <vertex_count>' header");
    const std::size_t n = parse_index(count, "vertex count");
    std::vector<std::pair<Vertex, Vertex>> es;
    while (next_content_line(in, line)) {
        std::istringstream ls(line);
        std::string a, b, extra;
        ls >> a >> b;
        if (b.empty() || (ls >> extra)) throw InputError("graph: bad edge line '" + line + "'");
        es.emplace_back(parse_index(a, "vertex"), parse_index(b, "vertex"));
    }
    return Graph(n, std::move(es));
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.vertex_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace z2embed
