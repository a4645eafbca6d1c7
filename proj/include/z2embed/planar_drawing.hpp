#ifndef Z2EMBED_PLANAR_DRAWING_HPP
#define Z2EMBED_PLANAR_DRAWING_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "z2embed/geometry.hpp"
#include "z2embed/gf2.hpp"
#include "z2embed/graph.hpp"
#include "z2embed/int_matrix.hpp"

namespace z2embed {

/**
 * @brief General-position piecewise-linear drawing of a graph in the plane.
 *
 * Edge e is drawn as polyline(e), running from the point of its first endpoint to
 * the point of its second; the listing direction is the edge's orientation for
 * signed crossing counts. Construction validates general position exactly and
 * throws GeneralPositionError otherwise.
 */
class PlanarDrawing {
  public:
    PlanarDrawing(Graph graph, std::vector<Point> vertex_points,
                  std::vector<std::vector<Point>> edge_polylines);

    const Graph& graph() const { return graph_; }
    const std::vector<Point>& vertex_points() const { return vertex_points_; }
    const Point& vertex_point(Vertex v) const { return vertex_points_.at(v); }
    const std::vector<Point>& polyline(EdgeId e) const { return polylines_.at(e); }
    const std::vector<std::vector<Point>>& polylines() const { return polylines_; }

    /// Same drawing with the listing direction of edge e reversed.
    PlanarDrawing with_reversed_edge(EdgeId e) const;

    /// Crossings between segments of distinct edges (computed at construction).
    const std::vector<CrossingRecord>& crossings() const { return crossings_; }

    friend bool operator==(const PlanarDrawing& a, const PlanarDrawing& b) {
        return a.graph_ == b.graph_ && a.vertex_points_ == b.vertex_points_ &&
               a.polylines_ == b.polylines_;
    }

  private:
    Graph graph_;
    std::vector<Point> vertex_points_;
    std::vector<std::vector<Point>> polylines_;
    std::vector<CrossingRecord> crossings_;
};

/// Symmetric |E| x |E| matrix of which only the independent-pair entries carry meaning.
struct ParityMatrix {
    BitMatrix values;

    BitVector on_pairs(const PairIndex& pairs) const;
    static ParityMatrix from_pairs(const BitVector& v, const PairIndex& pairs,
                                   std::size_t edge_count);
};

ParityMatrix crossing_parity_matrix(const PlanarDrawing& d);

/// Skew-symmetric matrix of algebraic crossing numbers on independent pairs.
IntMatrix signed_crossing_matrix(const PlanarDrawing& d);

/// Straight-line drawing with vertices on a circle in the given cyclic order.
PlanarDrawing convex_drawing(const Graph& g, const std::vector<Vertex>& order);

/// convex_drawing with vertices in index order.
PlanarDrawing canonical_drawing(const Graph& g);

/// Rerouting of `edge` around `vertex` (which must not be an endpoint of it).
struct FingerMove {
    EdgeId edge;
    Vertex vertex;
    friend bool operator==(const FingerMove&, const FingerMove&) = default;
};

/// Every (edge, vertex) pair with the vertex off the edge, edge-major order.
std::vector<FingerMove> finger_moves(const Graph& g);

/// Parity flip vector of each finger move over the independent pairs.
std::vector<BitVector> finger_move_generators(const Graph& g);

/**
 * @brief Applies finger moves to a drawing whose moved edges are single straight
 * segments; each move loops the edge around the vertex in a thin kite.
 *
 * Parameters are shrunk and perturbed deterministically until the result is in
 * general position. Throws std::runtime_error if no placement is found.
 */
PlanarDrawing apply_finger_moves(const PlanarDrawing& d, const std::vector<FingerMove>& moves);

/**
 * @brief The affine family of crossing-parity vectors realizable by drawings of g:
 * the canonical drawing's vector plus the span of the finger-move generators.
 */
class CompatibilityClass {
  public:
    explicit CompatibilityClass(const Graph& g);

    const Graph& graph() const { return graph_; }
    const PairIndex& pairs() const { return pairs_; }
    const BitVector& base() const { return base_; }
    const std::vector<FingerMove>& moves() const { return moves_; }
    const std::vector<BitVector>& generators() const { return generators_; }
    const SpanSolver& solver() const { return solver_; }

    /// Coefficients over moves() taking base() to target, or nullopt.
    std::optional<BitVector> certificate(const BitVector& target_on_pairs) const;

  private:
    Graph graph_;
    PairIndex pairs_;
    BitVector base_;
    std::vector<FingerMove> moves_;
    std::vector<BitVector> generators_;
    SpanSolver solver_;
};

/// Certificate (finger-move coefficients) when g is compatible modulo 2 to target.
std::optional<BitVector> is_compatible_mod2(const Graph& g, const ParityMatrix& target);

/// A drawing of g whose independent-pair crossing parities equal target's; the
/// result is re-verified before returning. Throws InputError when incompatible.
PlanarDrawing realize_parity(const Graph& g, const ParityMatrix& target);

/// Random rational drawing: vertices at random points, edges with up to max_bends
/// random bends. Retries until the sample is in general position.
PlanarDrawing random_drawing(const Graph& g, std::mt19937_64& rng, std::size_t max_bends);

PlanarDrawing parse_drawing(std::istream& in);
PlanarDrawing parse_drawing(const std::string& text);
std::string serialize_drawing(const PlanarDrawing& d);

/// Flat SVG rendering (straight segments only).
std::string drawing_to_svg(const PlanarDrawing& d);

}  // namespace z2embed

#endif
