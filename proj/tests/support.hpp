#ifndef Z2EMBED_TESTS_SUPPORT_HPP
#define Z2EMBED_TESTS_SUPPORT_HPP

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "z2embed/gf2.hpp"
#include "z2embed/graph.hpp"
#include "z2embed/int_matrix.hpp"

namespace z2embed::testing {

inline BitMatrix random_bits(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() & 1) m.set(r, c);
    return m;
}

inline IntMatrix random_ints(std::size_t rows, std::size_t cols, long lo, long hi, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    return m;
}

// Rank by brute force: size of the row span, counted by enumerating all row subsets.
inline std::size_t rank_by_span_size(const BitMatrix& a) {
    std::vector<BitVector> span{BitVector(a.cols())};
    for (std::size_t r = 0; r < a.rows(); ++r) {
        bool inside = false;
        for (const auto& s : span) inside = inside || s == a.row(r);
        if (inside) continue;
        const std::size_t n = span.size();
        for (std::size_t k = 0; k < n; ++k) span.push_back(span[k] ^ a.row(r));
    }
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < span.size()) ++rank;
    return rank;
}

inline BitMatrix gram(const BitMatrix& y, const BitMatrix& form) {
    return y.transposed() * form * y;
}

using Adjacency = std::vector<std::vector<bool>>;

inline Adjacency adjacency(const Graph& g) {
    Adjacency adj(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
    for (EdgeId e = 0; e < g.edge_count(); ++e) adj[g.edge(e).u][g.edge(e).v] = adj[g.edge(e).v][g.edge(e).u] = true;
    return adj;
}

// Kuratowski check valid for at most 6 vertices: a K3,3 subdivision then has no
// subdividing vertex, and a K5 subdivision has at most one.
inline bool planar_small(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const Adjacency adj = adjacency(g);
    if (n >= 6) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            if (__builtin_popcountll(mask) != 3) continue;
            bool all = true;
            for (std::size_t a = 0; a < n && all; ++a)
                for (std::size_t b = 0; b < n && all; ++b)
                    if ((mask >> a & 1) && !(mask >> b & 1)) all = adj[a][b];
            if (all) return false;
        }
    }
    for (std::size_t skip = 0; skip <= n; ++skip) {
        // Branch vertices: everything except `skip` (or all when skip == n).
        std::vector<std::size_t> branch;
        for (std::size_t v = 0; v < n; ++v)
            if (v != skip) branch.push_back(v);
        if (branch.size() != 5) continue;
        std::size_t missing = 0;
        bool detour_ok = true;
        for (std::size_t a = 0; a < 5; ++a)
            for (std::size_t b = a + 1; b < 5; ++b) {
                if (adj[branch[a]][branch[b]]) continue;
                ++missing;
                detour_ok = detour_ok && skip < n && adj[skip][branch[a]] && adj[skip][branch[b]];
            }
        if (missing == 0 || (missing == 1 && detour_ok)) return false;
    }
    return true;
}

// Smallest edge bitmask over all vertex relabelings.
inline std::uint32_t canonical_code(std::size_t n, const Adjacency& adj) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::uint32_t best = ~std::uint32_t{0};
    do {
        std::uint32_t code = 0;
        std::size_t bit = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b, ++bit)
                if (adj[perm[a]][perm[b]]) code |= std::uint32_t{1} << bit;
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// One graph per isomorphism class on exactly n vertices.
inline std::vector<Graph> graphs_up_to_isomorphism(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) slots.emplace_back(a, b);
    std::vector<std::uint32_t> seen;
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
        Adjacency adj(n, std::vector<bool>(n, false));
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (mask >> k & 1) {
                adj[slots[k].first][slots[k].second] = adj[slots[k].second][slots[k].first] = true;
                edges.emplace_back(slots[k].first, slots[k].second);
            }
        if (canonical_code(n, adj) != mask) continue;
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

}  // namespace z2embed::testing

#endif
