#ifndef Z2EMBED_SURFACE_HPP
#define Z2EMBED_SURFACE_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "z2embed/gf2.hpp"
#include "z2embed/int_matrix.hpp"
#include "z2embed/planar_drawing.hpp"

namespace z2embed {

enum class SurfaceKind { orientable, nonorientable };

/// S_g (disk with g interlaced pairs of untwisted ribbons) or M_m (disk with m
/// twisted, pairwise non-interlacing ribbons).
struct SurfaceSpec {
    SurfaceKind kind = SurfaceKind::orientable;
    std::size_t parameter = 0;  // g or m

    static SurfaceSpec orientable(std::size_t g) { return {SurfaceKind::orientable, g}; }
    static SurfaceSpec nonorientable(std::size_t m);

    std::size_t ribbon_count() const { return kind == SurfaceKind::orientable ? 2 * parameter : parameter; }
    /// Euler characteristic of the surface with its hole: 1 - 2g or 1 - m.
    long euler_characteristic() const { return 1 - static_cast<long>(ribbon_count()); }

    friend bool operator==(const SurfaceSpec&, const SurfaceSpec&) = default;
};

/// Parses "S:<g>" or "M:<m>".
SurfaceSpec parse_surface_spec(const std::string& text);
std::string format_surface_spec(const SurfaceSpec& s);

enum class CountMode { z2, z };

/**
 * @brief A drawing on the ribbon model of a surface.
 *
 * The core planar drawing sits inside the disk. Edge e is spliced, at segment
 * attach[e] of its core polyline, with a closed curve that runs through ribbon k
 * |passes[e][k]| times, in the ribbon's positive direction when the entry is
 * positive. In modulo-2 use only the parity of each entry matters.
 */
class SurfaceDrawing {
  public:
    SurfaceDrawing(SurfaceSpec surface, PlanarDrawing core, std::vector<std::vector<long>> passes,
                   std::vector<EdgeId> tube_order, std::vector<std::size_t> attach);

    const SurfaceSpec& surface() const { return surface_; }
    const PlanarDrawing& core() const { return core_; }
    const Graph& graph() const { return core_.graph(); }
    const std::vector<std::vector<long>>& passes() const { return passes_; }
    const std::vector<EdgeId>& tube_order() const { return tube_order_; }
    const std::vector<std::size_t>& attach() const { return attach_; }

    /// Homology coordinates: per-ribbon pass counts as a ribbons x edges matrix.
    IntMatrix homology_int() const;
    BitMatrix homology_gf2() const;

    friend bool operator==(const SurfaceDrawing& a, const SurfaceDrawing& b) {
        return a.surface_ == b.surface_ && a.core_ == b.core_ && a.passes_ == b.passes_ &&
               a.tube_order_ == b.tube_order_ && a.attach_ == b.attach_;
    }

  private:
    SurfaceSpec surface_;
    PlanarDrawing core_;
    std::vector<std::vector<long>> passes_;
    std::vector<EdgeId> tube_order_;
    std::vector<std::size_t> attach_;
};

/// Default splice segment of each edge: the middle segment of its polyline.
std::vector<std::size_t> default_attach(const PlanarDrawing& d);

/// Y has one column per edge and ribbon_count() rows (fewer rows are padded with
/// zero rows when the surface is nonorientable).
SurfaceDrawing construct_z2_embedding(const Graph& g, const PlanarDrawing& f, const BitMatrix& y,
                                      const SurfaceSpec& s);

/// B has one column per edge and at most 2g rows (padded with zero rows); the
/// surface must be orientable.
SurfaceDrawing construct_z_embedding(const Graph& g, const PlanarDrawing& f, const IntMatrix& b,
                                     const SurfaceSpec& s);

struct PairValue {
    EdgeId i;
    EdgeId j;
    long value;  // parity (0/1) or signed crossing sum
};

struct SurfaceReport {
    CountMode mode = CountMode::z2;
    std::vector<PairValue> pairs;  // independent pairs, i < j, lexicographic
    bool is_embedding = false;
};

/// Modulo-2 count per independent pair: core parity plus the ribbon form term.
SurfaceReport verify_z2(const SurfaceDrawing& sd);

/// Signed count per independent pair: core signed sum minus y_i^T H_g y_j.
SurfaceReport verify_z(const SurfaceDrawing& sd);

/// Raised when the explicit picture of a surface drawing cannot be laid out in
/// general position.
class LayoutError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/**
 * @brief The surface drawing laid out with exact coordinates in the standard
 * immersed picture of the surface.
 *
 * curves[e] is the full image of edge e; region[e][s] names the surface piece that
 * segment s lies on (0 for the disk, 1 + k for ribbon k, and for a twisted ribbon
 * 1 + ribbon_count() + k for the layer past its fold).
 */
struct SurfacePicture {
    std::vector<Point> vertex_points;
    std::vector<TaggedCurve> curves;
    std::vector<CrossingRecord> crossings;  // all picture crossings, artifacts included
};

SurfacePicture layout_picture(const SurfaceDrawing& sd);

/// Counts crossings in the picture, keeping only those whose two segments lie on
/// the same surface piece.
SurfaceReport verify_geometric(const SurfaceDrawing& sd, CountMode mode);

struct Extraction {
    CountMode mode = CountMode::z2;
    BitMatrix a_gf2;  // set in z2 mode
    IntMatrix a_int;  // set in z mode
    IntMatrix y;      // homology coordinates, ribbons x edges
    PlanarDrawing projected;  // the picture curves as a planar drawing
};

/**
 * @brief Closes each edge through the disk and returns the Gram matrix of the
 * closed cycles together with the projected planar drawing.
 *
 * z2 mode: Y^T H Y on S_g; on M_m, Y^T Y with entry (0, 0) set to 1 when Y^T Y is
 * even. z mode: Y^T H_g Y (the negated intersection form of the closed cycles).
 */
Extraction extract_matrix(const SurfaceDrawing& sd, CountMode mode);

SurfaceDrawing parse_surface_drawing(std::istream& in);
SurfaceDrawing parse_surface_drawing(const std::string& text);
std::string serialize_surface_drawing(const SurfaceDrawing& sd);

std::string format_report(const SurfaceReport& r);

}  // namespace z2embed

#endif
