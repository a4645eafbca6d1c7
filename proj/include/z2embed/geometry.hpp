#ifndef Z2EMBED_GEOMETRY_HPP
#define Z2EMBED_GEOMETRY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "z2embed/graph.hpp"

namespace z2embed {

struct Point {
    mpq_class x;
    mpq_class y;

    friend bool operator==(const Point&, const Point&) = default;
    friend bool operator<(const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

/// Canonical rational num/den (den != 0).
inline mpq_class ratio(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const mpq_class& k, const Point& p) { return {k * p.x, k * p.y}; }

inline mpq_class cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
/// Sign of the turn a -> b -> c: +1 counterclockwise, -1 clockwise, 0 collinear.
inline int orientation(const Point& a, const Point& b, const Point& c) {
    return sgn(mpq_class(cross(b - a, c - a)));
}

std::string format_rational(const mpq_class& q);
/// Parses "p/q" or "p"; throws InputError on malformed text or zero denominator.
mpq_class parse_rational(const std::string& text);

/// Winding number of the closed polygon around p; p must not lie on the polygon.
int winding_number(std::span<const Point> polygon, const Point& p);

/// True when p lies on the closed segment [a, b].
bool on_segment(const Point& a, const Point& b, const Point& p);

/// Raised when a drawing violates general position; names the offending segments.
class GeneralPositionError : public InputError {
  public:
    GeneralPositionError(const std::string& what, std::size_t curve_a, std::size_t segment_a,
                         std::size_t curve_b, std::size_t segment_b)
        : InputError(what),
          curve_a(curve_a),
          segment_a(segment_a),
          curve_b(curve_b),
          segment_b(segment_b) {}

    std::size_t curve_a, segment_a, curve_b, segment_b;
};

/// A polyline between two marked vertex points; `region` tags one value per segment.
struct TaggedCurve {
    std::vector<Point> points;
    std::vector<int> region;  // empty means every segment is in region 0
    std::size_t start_vertex = 0;
    std::size_t end_vertex = 0;
};

struct CrossingRecord {
    std::size_t curve_a;
    std::size_t segment_a;
    std::size_t curve_b;
    std::size_t segment_b;
    int sign;  // sign of cross(direction of a, direction of b)
    bool same_region;
};

/**
 * @brief Validates general position of a family of curves and lists their crossings.
 *
 * Distinct curves may only meet in transversal crossings interior to a segment of
 * each, or at a shared endpoint vertex. No curve passes through a vertex point other
 * than at its own ends, no point lies on three segments, and consecutive segments
 * never fold back. Self-crossings of a curve are allowed and reported with
 * curve_a == curve_b. Every pair is reported once with curve_a <= curve_b.
 *
 * Throws GeneralPositionError on the first violation found.
 */
std::vector<CrossingRecord> find_crossings(std::span<const TaggedCurve> curves,
                                           std::span<const Point> vertex_points);

}  // namespace z2embed

#endif
