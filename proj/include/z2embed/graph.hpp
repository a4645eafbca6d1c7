#ifndef Z2EMBED_GRAPH_HPP
#define Z2EMBED_GRAPH_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace z2embed {

/// Raised for malformed user input (files, command-line values, contract violations
/// on public entry points).
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using Vertex = std::size_t;
using EdgeId = std::size_t;

struct Edge {
    Vertex u;
    Vertex v;

    bool touches(Vertex w) const { return u == w || v == w; }
    bool shares_vertex(const Edge& o) const { return touches(o.u) || touches(o.v); }
    friend bool operator==(const Edge&, const Edge&) = default;
};

enum class PairKind { adjacent, independent };

struct EdgePair {
    EdgeId i;
    EdgeId j;
    PairKind kind;
    friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

/**
 * @brief Simple undirected graph with a stable edge index.
 *
 * Edge i is the i-th entry of the list it was built from, with endpoints stored
 * as (min, max). Loops and parallel edges are rejected on construction.
 */
class Graph {
  public:
    Graph() = default;
    Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId i) const { return edges_.at(i); }

    bool independent(EdgeId i, EdgeId j) const {
        return i != j && !edges_[i].shares_vertex(edges_[j]);
    }

    /// Edge ids incident to `v`, increasing.
    const std::vector<EdgeId>& incident(Vertex v) const { return incident_.at(v); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

  private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incident_;
};

/// Non-adjacent edge pairs (i < j), lexicographic in (i, j).
std::vector<EdgePair> independent_pairs(const Graph& g);

/// Dense lookup from (i, j) to the position of that pair in independent_pairs(g).
class PairIndex {
  public:
    explicit PairIndex(const Graph& g);

    std::size_t size() const { return pairs_.size(); }
    const std::vector<EdgePair>& pairs() const { return pairs_; }
    const EdgePair& operator[](std::size_t k) const { return pairs_[k]; }

    /// Position of {i, j} or npos when the pair is adjacent or i == j.
    std::size_t find(EdgeId i, EdgeId j) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  private:
    std::size_t edge_count_ = 0;
    std::vector<EdgePair> pairs_;
    std::vector<std::size_t> slot_;
};

Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t m, std::size_t n);

Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

}  // namespace z2embed

#endif
