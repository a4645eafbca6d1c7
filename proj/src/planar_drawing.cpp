#include "z2embed/planar_drawing.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace z2embed {

namespace {

std::vector<TaggedCurve> as_curves(const Graph& g, const std::vector<Point>& vertex_points,
                                   const std::vector<std::vector<Point>>& polylines) {
    std::vector<TaggedCurve> curves;
    curves.reserve(polylines.size());
    for (EdgeId e = 0; e < polylines.size(); ++e) {
        const Edge& ed = g.edge(e);
        const auto& pl = polylines[e];
        if (pl.size() < 2) throw InputError("edge " + std::to_string(e) + ": polyline too short");
        TaggedCurve c;
        c.points = pl;
        if (pl.front() == vertex_points[ed.u] && pl.back() == vertex_points[ed.v]) {
            c.start_vertex = ed.u;
            c.end_vertex = ed.v;
        } else if (pl.front() == vertex_points[ed.v] && pl.back() == vertex_points[ed.u]) {
            c.start_vertex = ed.v;
            c.end_vertex = ed.u;
        } else {
            throw InputError("edge " + std::to_string(e) +
                             ": polyline does not join its endpoint vertices");
        }
        curves.push_back(std::move(c));
    }
    return curves;
}

}  // namespace

PlanarDrawing::PlanarDrawing(Graph graph, std::vector<Point> vertex_points,
                             std::vector<std::vector<Point>> edge_polylines)
    : graph_(std::move(graph)),
      vertex_points_(std::move(vertex_points)),
      polylines_(std::move(edge_polylines)) {
    if (vertex_points_.size() != graph_.vertex_count()) {
        throw InputError("drawing: vertex point count does not match graph");
    }
    if (polylines_.size() != graph_.edge_count()) {
        throw InputError("drawing: polyline count does not match graph");
    }
    const auto curves = as_curves(graph_, vertex_points_, polylines_);
    auto all = find_crossings(curves, vertex_points_);
    for (auto& rec : all) {
        if (rec.curve_a != rec.curve_b) crossings_.push_back(rec);
    }
}

PlanarDrawing PlanarDrawing::with_reversed_edge(EdgeId e) const {
    auto polys = polylines_;
    std::reverse(polys.at(e).begin(), polys.at(e).end());
    return PlanarDrawing(graph_, vertex_points_, std::move(polys));
}

BitVector ParityMatrix::on_pairs(const PairIndex& pairs) const {
    BitVector v(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (values.get(pairs[k].i, pairs[k].j)) v.set(k);
    return v;
}

ParityMatrix ParityMatrix::from_pairs(const BitVector& v, const PairIndex& pairs,
                                      std::size_t edge_count) {
    ParityMatrix m{BitMatrix(edge_count, edge_count)};
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (v.get(k)) {
            m.values.set(pairs[k].i, pairs[k].j);
            m.values.set(pairs[k].j, pairs[k].i);
        }
    }
    return m;
}

ParityMatrix crossing_parity_matrix(const PlanarDrawing& d) {
    const Graph& g = d.graph();
    ParityMatrix m{BitMatrix(g.edge_count(), g.edge_count())};
    for (const auto& rec : d.crossings()) {
        if (!g.independent(rec.curve_a, rec.curve_b)) continue;
        m.values.flip(rec.curve_a, rec.curve_b);
        m.values.flip(rec.curve_b, rec.curve_a);
    }
    return m;
}

IntMatrix signed_crossing_matrix(const PlanarDrawing& d) {
    const Graph& g = d.graph();
    IntMatrix m(g.edge_count(), g.edge_count());
    for (const auto& rec : d.crossings()) {
        if (!g.independent(rec.curve_a, rec.curve_b)) continue;
        m(rec.curve_a, rec.curve_b) += rec.sign;
        m(rec.curve_b, rec.curve_a) -= rec.sign;
    }
    return m;
}

namespace {

// Exact rational point on the unit circle: ((1-t^2)/(1+t^2), 2t/(1+t^2)).
Point circle_point(const mpq_class& t) {
    const mpq_class t2 = t * t;
    const mpq_class den = 1 + t2;
    return {mpq_class((1 - t2) / den), mpq_class(2 * t / den)};
}

}  // namespace

PlanarDrawing convex_drawing(const Graph& g, const std::vector<Vertex>& order) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] != k || sorted.size() != n) {
            throw InputError("convex_drawing: order is not a permutation of the vertices");
        }
    }
    constexpr long denominator = 8192;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Point> pts(n);
        for (std::size_t k = 0; k < n; ++k) {
            // Angles strictly inside (-pi, pi) so the half-angle tangent stays finite.
            const double theta = -std::numbers::pi + 2 * std::numbers::pi * (k + 0.5) / n;
            mpq_class t = ratio(std::lround(std::tan(theta / 2) * denominator), denominator);
            if (attempt > 0) t += ratio(static_cast<long>((7 * k + 3) * attempt), 1000003L * denominator);
            pts[order[k]] = circle_point(t);
        }
        std::vector<std::vector<Point>> polys;
        for (const auto& e : g.edges()) polys.push_back({pts[e.u], pts[e.v]});
        try {
            return PlanarDrawing(g, std::move(pts), std::move(polys));
        } catch (const GeneralPositionError&) {
            // three chords concurrent: perturb and retry
        }
    }
    throw std::runtime_error("convex_drawing: could not reach general position");
}

PlanarDrawing canonical_drawing(const Graph& g) {
    std::vector<Vertex> order(g.vertex_count());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    return convex_drawing(g, order);
}

std::vector<FingerMove> finger_moves(const Graph& g) {
    std::vector<FingerMove> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (!g.edge(e).touches(v)) out.push_back({e, v});
    return out;
}

namespace {

BitVector move_vector(const Graph& g, const PairIndex& pairs, const FingerMove& m) {
    BitVector w(pairs.size());
    for (EdgeId other : g.incident(m.vertex)) {
        const std::size_t k = pairs.find(m.edge, other);
        if (k != PairIndex::npos) w.set(k);
    }
    return w;
}

}  // namespace

std::vector<BitVector> finger_move_generators(const Graph& g) {
    const PairIndex pairs(g);
    std::vector<BitVector> out;
    for (const auto& m : finger_moves(g)) out.push_back(move_vector(g, pairs, m));
    return out;
}

namespace {

struct KiteParams {
    mpq_class center;  // position along the edge segment, in (0, 1)
    mpq_class half_width;
    mpq_class reach;
};

// Polygon p1 -> a -> b -> c -> p2 around `v`; the edge runs p1 -> ... -> p2.
std::vector<Point> kite(const Point& from, const Point& to, const Point& v, const KiteParams& k) {
    const Point u = to - from;
    const Point p = from + k.center * u;
    const Point d = v - p;
    const Point perp{mpq_class(-d.y), d.x};
    const int side = -sgn(mpq_class(cross(d, u)));
    const mpq_class s = side;
    const Point p1 = from + mpq_class(k.center - k.half_width) * u;
    const Point p2 = from + mpq_class(k.center + k.half_width) * u;
    const Point a = v + mpq_class(s * k.reach) * perp;
    const Point b = v + k.reach * d;
    const Point c = v - mpq_class(s * k.reach) * perp;
    return {p1, a, b, c, p2};
}

bool kite_isolates(const std::vector<Point>& poly, const std::vector<Point>& vertices, Vertex v) {
    for (Vertex w = 0; w < vertices.size(); ++w) {
        for (std::size_t i = 0; i < poly.size(); ++i) {
            if (on_segment(poly[i], poly[(i + 1) % poly.size()], vertices[w])) return false;
        }
        const int wn = winding_number(poly, vertices[w]);
        if ((w == v) != (wn != 0)) return false;
    }
    return true;
}

}  // namespace

PlanarDrawing apply_finger_moves(const PlanarDrawing& d, const std::vector<FingerMove>& moves) {
    if (moves.empty()) return d;
    const Graph& g = d.graph();
    std::map<EdgeId, std::vector<Vertex>> by_edge;
    std::map<Vertex, std::size_t> per_vertex;
    for (const auto& m : moves) {
        if (m.edge >= g.edge_count() || m.vertex >= g.vertex_count() || g.edge(m.edge).touches(m.vertex)) {
            throw InputError("finger move must pair an edge with a vertex off that edge");
        }
        by_edge[m.edge].push_back(m.vertex);
        ++per_vertex[m.vertex];
    }
    for (const auto& [e, vs] : by_edge) {
        if (d.polyline(e).size() != 2) {
            throw InputError("finger moves need the moved edge drawn as one straight segment");
        }
    }

    for (int attempt = 0; attempt < 40; ++attempt) {
        std::map<Vertex, std::size_t> used_at;
        auto polys = d.polylines();
        bool placed = true;
        for (auto& [e, vs] : by_edge) {
            const Point from = d.polyline(e).front();
            const Point to = d.polyline(e).back();
            const std::size_t k = vs.size();
            std::vector<Point> pl{from};
            for (std::size_t j = 0; j < k && placed; ++j) {
                const Vertex v = vs[j];
                const std::size_t nested = used_at[v]++;
                const std::size_t total = per_vertex[v];
                KiteParams kp;
                kp.center = ratio(static_cast<long>(j + 1), static_cast<long>(k + 1)) +
                            ratio(attempt * static_cast<long>(j + 1), 1009L * static_cast<long>(k + 1) * 64);
                kp.half_width = ratio(1, 8 * static_cast<long>(k + 1));
                kp.reach = ratio(static_cast<long>(4 * total - 2 * nested + attempt), 40 * static_cast<long>(total) + 7);
                std::vector<Point> poly;
                int shrink = 0;
                for (; shrink < 40; ++shrink) {
                    poly = kite(from, to, d.vertex_point(v), kp);
                    if (kite_isolates(poly, d.vertex_points(), v)) break;
                    kp.half_width /= 2;
                    kp.reach /= 2;
                }
                if (shrink == 40) placed = false;
                pl.insert(pl.end(), poly.begin(), poly.end());
            }
            pl.push_back(to);
            polys[e] = std::move(pl);
        }
        if (!placed) continue;
        try {
            return PlanarDrawing(g, d.vertex_points(), std::move(polys));
        } catch (const GeneralPositionError&) {
            // degenerate placement: perturb and retry
        }
    }
    throw std::runtime_error("apply_finger_moves: no general-position placement found");
}

CompatibilityClass::CompatibilityClass(const Graph& g)
    : graph_(g),
      pairs_(g),
      base_(crossing_parity_matrix(canonical_drawing(g)).on_pairs(pairs_)),
      moves_(finger_moves(g)),
      generators_([&] {
          std::vector<BitVector> out;
          for (const auto& m : moves_) out.push_back(move_vector(g, pairs_, m));
          return out;
      }()),
      solver_(pairs_.size(), generators_) {}

std::optional<BitVector> CompatibilityClass::certificate(const BitVector& target) const {
    if (target.size() != pairs_.size()) {
        throw InputError("compatibility: target is not indexed by the independent pairs");
    }
    return solver_.solve(target ^ base_);
}

std::optional<BitVector> is_compatible_mod2(const Graph& g, const ParityMatrix& target) {
    if (target.values.rows() != g.edge_count() || target.values.cols() != g.edge_count()) {
        throw InputError("compatibility: matrix size does not match the edge count");
    }
    const CompatibilityClass cls(g);
    return cls.certificate(target.on_pairs(cls.pairs()));
}

PlanarDrawing realize_parity(const Graph& g, const ParityMatrix& target) {
    if (target.values.rows() != g.edge_count() || target.values.cols() != g.edge_count()) {
        throw InputError("realize: matrix size does not match the edge count");
    }
    const CompatibilityClass cls(g);
    const BitVector wanted = target.on_pairs(cls.pairs());
    const auto cert = cls.certificate(wanted);
    if (!cert) throw InputError("realize: graph is not compatible modulo 2 to the target");
    std::vector<FingerMove> chosen;
    for (std::size_t k = 0; k < cls.moves().size(); ++k)
        if (cert->get(k)) chosen.push_back(cls.moves()[k]);
    PlanarDrawing out = apply_finger_moves(canonical_drawing(g), chosen);
    if (crossing_parity_matrix(out).on_pairs(cls.pairs()) != wanted) {
        throw std::logic_error("realize: constructed drawing does not match the target parities");
    }
    return out;
}

PlanarDrawing random_drawing(const Graph& g, std::mt19937_64& rng, std::size_t max_bends) {
    std::uniform_int_distribution<long> coord(-1000, 1000);
    std::uniform_int_distribution<std::size_t> bends(0, max_bends);
    auto random_point = [&] { return Point{ratio(coord(rng), 1000), ratio(coord(rng), 1000)}; };
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Point> pts;
        for (std::size_t v = 0; v < g.vertex_count(); ++v) pts.push_back(random_point());
        std::vector<std::vector<Point>> polys;
        for (const auto& e : g.edges()) {
            std::vector<Point> pl{pts[e.u]};
            const std::size_t b = bends(rng);
            for (std::size_t k = 0; k < b; ++k) pl.push_back(random_point());
            pl.push_back(pts[e.v]);
            polys.push_back(std::move(pl));
        }
        try {
            return PlanarDrawing(g, std::move(pts), std::move(polys));
        } catch (const InputError&) {
            // resample
        }
    }
    throw std::runtime_error("random_drawing: no general-position sample found");
}

namespace {

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

std::size_t parse_id(const std::string& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw InputError("drawing: bad id '" + tok + "'");
    }
    return std::stoull(tok);
}

}  // namespace

PlanarDrawing parse_drawing(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line) || line.substr(line.find_first_not_of(" \t"), 7) != "drawing") {
        throw InputError("drawing: expected 'drawing' header");
    }
    std::map<std::size_t, Point> vertices;
    std::map<std::size_t, std::vector<Point>> edges;
    while (next_content_line(in, line)) {
        std::istringstream ls(line);
        std::string kw, id;
        ls >> kw >> id;
        if (kw == "vertex") {
            std::string x, y, extra;
            if (!(ls >> x >> y) || (ls >> extra)) throw InputError("drawing: bad vertex line '" + line + "'");
            if (!vertices.emplace(parse_id(id), Point{parse_rational(x), parse_rational(y)}).second) {
                throw InputError("drawing: duplicate vertex " + id);
            }
        } else if (kw == "edge") {
            std::string colon;
            ls >> colon;
            if (colon != ":") throw InputError("drawing: expected ':' in edge line '" + line + "'");
            std::vector<std::string> toks;
            for (std::string t; ls >> t;) toks.push_back(t);
            if (toks.size() < 4 || toks.size() % 2 != 0) {
                throw InputError("drawing: edge line needs an even number (>= 4) of coordinates");
            }
            std::vector<Point> pl;
            for (std::size_t k = 0; k < toks.size(); k += 2)
                pl.push_back({parse_rational(toks[k]), parse_rational(toks[k + 1])});
            if (!edges.emplace(parse_id(id), std::move(pl)).second) {
                throw InputError("drawing: duplicate edge " + id);
            }
        } else {
            throw InputError("drawing: unexpected line '" + line + "'");
        }
    }
    std::vector<Point> pts;
    for (const auto& [id, p] : vertices) {
        if (id != pts.size()) throw InputError("drawing: vertex ids must be 0..n-1");
        pts.push_back(p);
    }
    std::map<Point, Vertex> at;
    for (Vertex v = 0; v < pts.size(); ++v) {
        if (!at.emplace(pts[v], v).second) throw InputError("drawing: two vertices share a point");
    }
    std::vector<std::pair<Vertex, Vertex>> graph_edges;
    std::vector<std::vector<Point>> polys;
    for (auto& [id, pl] : edges) {
        if (id != polys.size()) throw InputError("drawing: edge ids must be 0..m-1");
        auto a = at.find(pl.front());
        auto b = at.find(pl.back());
        if (a == at.end() || b == at.end()) {
            throw InputError("drawing: edge " + std::to_string(id) + " does not end at vertices");
        }
        graph_edges.emplace_back(a->second, b->second);
        polys.push_back(std::move(pl));
    }
    Graph g(pts.size(), std::move(graph_edges));
    return PlanarDrawing(std::move(g), std::move(pts), std::move(polys));
}

PlanarDrawing parse_drawing(const std::string& text) {
    std::istringstream in(text);
    return parse_drawing(in);
}

std::string serialize_drawing(const PlanarDrawing& d) {
    std::ostringstream out;
    out << "drawing\n";
    for (Vertex v = 0; v < d.vertex_points().size(); ++v) {
        const auto& p = d.vertex_point(v);
        out << "vertex " << v << ' ' << format_rational(p.x) << ' ' << format_rational(p.y) << '\n';
    }
    for (EdgeId e = 0; e < d.polylines().size(); ++e) {
        out << "edge " << e << " :";
        for (const auto& p : d.polyline(e)) out << ' ' << format_rational(p.x) << ' ' << format_rational(p.y);
        out << '\n';
    }
    return out.str();
}

std::string drawing_to_svg(const PlanarDrawing& d) {
    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    bool first = true;
    auto grow = [&](const Point& p) {
        const double x = p.x.get_d(), y = p.y.get_d();
        if (first) {
            lo_x = hi_x = x;
            lo_y = hi_y = y;
            first = false;
        }
        lo_x = std::min(lo_x, x);
        hi_x = std::max(hi_x, x);
        lo_y = std::min(lo_y, y);
        hi_y = std::max(hi_y, y);
    };
    for (const auto& p : d.vertex_points()) grow(p);
    for (const auto& pl : d.polylines())
        for (const auto& p : pl) grow(p);
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double scale = 480.0 / span;
    auto sx = [&](const Point& p) { return 10 + (p.x.get_d() - lo_x) * scale; };
    auto sy = [&](const Point& p) { return 10 + (hi_y - p.y.get_d()) * scale; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\">\n";
    for (const auto& pl : d.polylines()) {
        out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
        for (std::size_t k = 0; k < pl.size(); ++k) out << (k ? " " : "") << sx(pl[k]) << ',' << sy(pl[k]);
        out << "\"/>\n";
    }
    for (const auto& p : d.vertex_points())
        out << "<circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"3\" fill=\"red\"/>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace z2embed
