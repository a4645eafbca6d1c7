#include "z2embed/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace z2embed {

std::string format_rational(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto valid = [](const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && s[0] == '-') i = 1;
        return i < s.size() && s.find_first_not_of("0123456789", i) == std::string::npos;
    };
    if (!valid(num, true) || !valid(den, false)) throw InputError("bad rational '" + text + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw InputError("zero denominator in '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

int winding_number(std::span<const Point> polygon, const Point& p) {
    int wn = 0;
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = polygon[i];
        const Point& b = polygon[(i + 1) % n];
        if (a.y <= p.y) {
            if (b.y > p.y && orientation(a, b, p) > 0) ++wn;
        } else {
            if (b.y <= p.y && orientation(a, b, p) < 0) --wn;
        }
    }
    return wn;
}

namespace {

struct SweepItem {
    double xlo, xhi, ylo, yhi;
    std::size_t curve;    // curve index, or vertex index when is_vertex
    std::size_t segment;  // segment index within the curve
    bool is_vertex;
};

double lower(const mpq_class& q) {
    const double d = q.get_d();
    return d - 1e-9 * (1.0 + std::fabs(d));
}
double upper(const mpq_class& q) {
    const double d = q.get_d();
    return d + 1e-9 * (1.0 + std::fabs(d));
}

struct Located {
    Point at;
    std::size_t record;
};

class CrossingFinder {
  public:
    CrossingFinder(std::span<const TaggedCurve> curves, std::span<const Point> vertices)
        : curves_(curves), vertices_(vertices) {}

    std::vector<CrossingRecord> run() {
        check_curves();
        std::vector<SweepItem> items;
        for (std::size_t c = 0; c < curves_.size(); ++c) {
            const auto& pts = curves_[c].points;
            for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
                const Point& a = pts[s];
                const Point& b = pts[s + 1];
                items.push_back({lower(std::min(a.x, b.x)), upper(std::max(a.x, b.x)),
                                 lower(std::min(a.y, b.y)), upper(std::max(a.y, b.y)), c, s,
                                 false});
            }
        }
        for (std::size_t v = 0; v < vertices_.size(); ++v) {
            const Point& p = vertices_[v];
            items.push_back({lower(p.x), upper(p.x), lower(p.y), upper(p.y), v, 0, true});
        }
        std::sort(items.begin(), items.end(),
                  [](const SweepItem& a, const SweepItem& b) { return a.xlo < b.xlo; });

        for (std::size_t i = 0; i < items.size(); ++i) {
            for (std::size_t j = i + 1; j < items.size() && items[j].xlo <= items[i].xhi; ++j) {
                const auto& u = items[i];
                const auto& w = items[j];
                if (u.yhi < w.ylo || w.yhi < u.ylo) continue;
                if (u.is_vertex && w.is_vertex) {
                    if (vertices_[u.curve] == vertices_[w.curve]) {
                        throw GeneralPositionError("two vertices share a point", u.curve, 0,
                                                   w.curve, 0);
                    }
                } else if (u.is_vertex) {
                    check_vertex(u.curve, w.curve, w.segment);
                } else if (w.is_vertex) {
                    check_vertex(w.curve, u.curve, u.segment);
                } else if (u.curve < w.curve || (u.curve == w.curve && u.segment < w.segment)) {
                    check_pair(u.curve, u.segment, w.curve, w.segment);
                } else {
                    check_pair(w.curve, w.segment, u.curve, u.segment);
                }
            }
        }

        std::sort(points_.begin(), points_.end(),
                  [](const Located& a, const Located& b) { return a.at < b.at; });
        for (std::size_t k = 1; k < points_.size(); ++k) {
            if (points_[k].at == points_[k - 1].at) {
                const auto& r = records_[points_[k].record];
                throw GeneralPositionError("three segments through one crossing point", r.curve_a,
                                           r.segment_a, r.curve_b, r.segment_b);
            }
        }
        std::sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) {
            return std::tie(a.curve_a, a.curve_b, a.segment_a, a.segment_b) <
                   std::tie(b.curve_a, b.curve_b, b.segment_a, b.segment_b);
        });
        return std::move(records_);
    }

  private:
    int region(std::size_t c, std::size_t s) const {
        const auto& r = curves_[c].region;
        return r.empty() ? 0 : r[s];
    }

    void check_curves() const {
        for (std::size_t c = 0; c < curves_.size(); ++c) {
            const auto& cv = curves_[c];
            if (cv.points.size() < 2) {
                throw GeneralPositionError("curve has fewer than two points", c, 0, c, 0);
            }
            if (!cv.region.empty() && cv.region.size() + 1 != cv.points.size()) {
                throw GeneralPositionError("region tags do not match segments", c, 0, c, 0);
            }
            if (cv.start_vertex >= vertices_.size() || cv.end_vertex >= vertices_.size() ||
                cv.points.front() != vertices_[cv.start_vertex] ||
                cv.points.back() != vertices_[cv.end_vertex]) {
                throw GeneralPositionError("curve does not end at its vertex points", c, 0, c, 0);
            }
            for (std::size_t s = 0; s + 1 < cv.points.size(); ++s) {
                if (cv.points[s] == cv.points[s + 1]) {
                    throw GeneralPositionError("zero-length segment", c, s, c, s);
                }
                if (s + 2 < cv.points.size()) {
                    const Point d1 = cv.points[s + 1] - cv.points[s];
                    const Point d2 = cv.points[s + 2] - cv.points[s + 1];
                    if (sgn(mpq_class(cross(d1, d2))) == 0 && d1.x * d2.x + d1.y * d2.y < 0) {
                        throw GeneralPositionError("polyline folds back on itself", c, s, c, s + 1);
                    }
                }
            }
        }
    }

    // True when p is the endpoint of segment s at which curve c meets its own vertex.
    bool is_curve_end(std::size_t c, std::size_t s, const Point& p) const {
        const auto& cv = curves_[c];
        if (s == 0 && p == cv.points.front()) return true;
        if (s + 2 == cv.points.size() && p == cv.points.back()) return true;
        return false;
    }

    void check_vertex(std::size_t v, std::size_t c, std::size_t s) const {
        const auto& pts = curves_[c].points;
        const Point& p = vertices_[v];
        if (!on_segment(pts[s], pts[s + 1], p)) return;
        const bool own = (s == 0 && p == pts.front() && curves_[c].start_vertex == v) ||
                         (s + 2 == pts.size() && p == pts.back() && curves_[c].end_vertex == v);
        if (!own) throw GeneralPositionError("curve passes through a vertex", c, s, c, s);
    }

    void check_pair(std::size_t c1, std::size_t s1, std::size_t c2, std::size_t s2) {
        const auto& p1 = curves_[c1].points;
        const auto& p2 = curves_[c2].points;
        const Point &a1 = p1[s1], &b1 = p1[s1 + 1];
        const Point &a2 = p2[s2], &b2 = p2[s2 + 1];
        const int o1 = orientation(a1, b1, a2);
        const int o2 = orientation(a1, b1, b2);
        const int o3 = orientation(a2, b2, a1);
        const int o4 = orientation(a2, b2, b1);
        if (o1 * o2 > 0 || o3 * o4 > 0) return;

        if (o1 * o2 < 0 && o3 * o4 < 0) {
            const Point d1 = b1 - a1;
            const Point d2 = b2 - a2;
            const mpq_class den = cross(d1, d2);
            const mpq_class t = cross(a2 - a1, d2) / den;
            CrossingRecord rec{c1, s1, c2, s2, sgn(den), region(c1, s1) == region(c2, s2)};
            points_.push_back({a1 + t * d1, records_.size()});
            records_.push_back(rec);
            return;
        }

        // Some contact that is not a proper crossing.
        const bool collinear = o1 == 0 && o2 == 0;
        if (c1 == c2 && s2 == s1 + 1) {
            if (!collinear) return;  // consecutive segments meet only at their joint
            // Collinear consecutive segments overlap only if they fold back (checked).
            return;
        }
        if (c1 != c2 && !collinear) {
            std::vector<Point> touch;
            if (o1 == 0 && on_segment(a1, b1, a2)) touch.push_back(a2);
            if (o2 == 0 && on_segment(a1, b1, b2)) touch.push_back(b2);
            if (o3 == 0 && on_segment(a2, b2, a1)) touch.push_back(a1);
            if (o4 == 0 && on_segment(a2, b2, b1)) touch.push_back(b1);
            bool shared_end = !touch.empty();
            for (const auto& t : touch) {
                shared_end = shared_end && is_curve_end(c1, s1, t) && is_curve_end(c2, s2, t);
            }
            if (shared_end) return;
        }
        if (collinear) {
            // Collinear segments sharing exactly one endpoint vertex are tolerated only if
            // they leave that vertex in different directions.
            const Point d1 = b1 - a1;
            auto param = [&](const Point& p) { return (p - a1).x * d1.x + (p - a1).y * d1.y; };
            const mpq_class len = d1.x * d1.x + d1.y * d1.y;
            const mpq_class t0 = std::min(param(a2), param(b2));
            const mpq_class t1 = std::max(param(a2), param(b2));
            const bool point_contact = t1 == 0 || t0 == len;
            if (t1 < 0 || t0 > len) return;  // collinear but disjoint
            if (point_contact && c1 != c2) {
                const Point contact = t1 == 0 ? a1 : b1;
                if (is_curve_end(c1, s1, contact) && is_curve_end(c2, s2, contact)) return;
            }
        }
        throw GeneralPositionError("segments touch or overlap without crossing transversally", c1,
                                   s1, c2, s2);
    }

    std::span<const TaggedCurve> curves_;
    std::span<const Point> vertices_;
    std::vector<CrossingRecord> records_;
    std::vector<Located> points_;
};

}  // namespace

std::vector<CrossingRecord> find_crossings(std::span<const TaggedCurve> curves,
                                           std::span<const Point> vertex_points) {
    return CrossingFinder(curves, vertex_points).run();
}

}  // namespace z2embed
