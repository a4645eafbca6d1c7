#include "z2embed/surface.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

namespace z2embed {

SurfaceSpec SurfaceSpec::nonorientable(std::size_t m) {
    if (m == 0) throw InputError("nonorientable surface needs m >= 1 (use S:0 for the disk)");
    return {SurfaceKind::nonorientable, m};
}

SurfaceSpec parse_surface_spec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon != 1) {
        throw InputError("surface: expected S:<g> or M:<m>, got '" + text + "'");
    }
    const std::string num = text.substr(2);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
        throw InputError("surface: bad parameter in '" + text + "'");
    }
    const std::size_t p = std::stoull(num);
    if (text[0] == 'S') return SurfaceSpec::orientable(p);
    if (text[0] == 'M') return SurfaceSpec::nonorientable(p);
    throw InputError("surface: kind must be S or M in '" + text + "'");
}

std::string format_surface_spec(const SurfaceSpec& s) {
    return std::string(s.kind == SurfaceKind::orientable ? "S:" : "M:") + std::to_string(s.parameter);
}

SurfaceDrawing::SurfaceDrawing(SurfaceSpec surface, PlanarDrawing core,
                               std::vector<std::vector<long>> passes,
                               std::vector<EdgeId> tube_order, std::vector<std::size_t> attach)
    : surface_(surface),
      core_(std::move(core)),
      passes_(std::move(passes)),
      tube_order_(std::move(tube_order)),
      attach_(std::move(attach)) {
    if (surface_.kind == SurfaceKind::nonorientable && surface_.parameter == 0) {
        throw InputError("surface drawing: M:0 is not a surface in this model");
    }
    const std::size_t edges = core_.graph().edge_count();
    if (passes_.size() != edges) throw InputError("surface drawing: one pass vector per edge expected");
    for (const auto& p : passes_) {
        if (p.size() != surface_.ribbon_count()) {
            throw InputError("surface drawing: pass vector length must equal the ribbon count");
        }
    }
    std::vector<EdgeId> sorted = tube_order_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] != k) throw InputError("surface drawing: tube order is not a permutation");
    }
    if (sorted.size() != edges) throw InputError("surface drawing: tube order is not a permutation");
    if (attach_.size() != edges) throw InputError("surface drawing: one attach index per edge expected");
    for (EdgeId e = 0; e < edges; ++e) {
        if (attach_[e] + 1 >= core_.polyline(e).size()) {
            throw InputError("surface drawing: attach index out of range for edge " + std::to_string(e));
        }
    }
}

IntMatrix SurfaceDrawing::homology_int() const {
    IntMatrix y(surface_.ribbon_count(), passes_.size());
    for (EdgeId e = 0; e < passes_.size(); ++e)
        for (std::size_t k = 0; k < passes_[e].size(); ++k) y(k, e) = passes_[e][k];
    return y;
}

BitMatrix SurfaceDrawing::homology_gf2() const {
    BitMatrix y(surface_.ribbon_count(), passes_.size());
    for (EdgeId e = 0; e < passes_.size(); ++e)
        for (std::size_t k = 0; k < passes_[e].size(); ++k)
            if (passes_[e][k] % 2 != 0) y.set(k, e);
    return y;
}

std::vector<std::size_t> default_attach(const PlanarDrawing& d) {
    std::vector<std::size_t> out;
    for (const auto& pl : d.polylines()) out.push_back((pl.size() - 2) / 2);
    return out;
}

namespace {

std::vector<EdgeId> identity_order(std::size_t n) {
    std::vector<EdgeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

void check_same_graph(const Graph& g, const PlanarDrawing& f) {
    if (!(f.graph() == g)) throw InputError("construct: the drawing is not a drawing of the given graph");
}

}  // namespace

SurfaceDrawing construct_z2_embedding(const Graph& g, const PlanarDrawing& f, const BitMatrix& y,
                                      const SurfaceSpec& s) {
    check_same_graph(g, f);
    const std::size_t ribbons = s.ribbon_count();
    if (y.cols() != g.edge_count()) throw InputError("construct: factor needs one column per edge");
    const bool pad = s.kind == SurfaceKind::nonorientable;
    if (y.rows() > ribbons || (!pad && y.rows() != ribbons)) {
        throw InputError("construct: factor has " + std::to_string(y.rows()) + " rows, surface has " +
                         std::to_string(ribbons) + " ribbons");
    }
    std::vector<std::vector<long>> passes(g.edge_count(), std::vector<long>(ribbons, 0));
    for (std::size_t k = 0; k < y.rows(); ++k)
        for (EdgeId e = 0; e < g.edge_count(); ++e) passes[e][k] = y.get(k, e) ? 1 : 0;
    return SurfaceDrawing(s, f, std::move(passes), identity_order(g.edge_count()), default_attach(f));
}

SurfaceDrawing construct_z_embedding(const Graph& g, const PlanarDrawing& f, const IntMatrix& b,
                                     const SurfaceSpec& s) {
    check_same_graph(g, f);
    if (s.kind != SurfaceKind::orientable) {
        throw InputError("construct: integer embeddings are only defined on orientable surfaces");
    }
    const std::size_t ribbons = s.ribbon_count();
    if (b.cols() != g.edge_count()) throw InputError("construct: factor needs one column per edge");
    if (b.rows() > ribbons || b.rows() % 2 != 0) {
        throw InputError("construct: factor has " + std::to_string(b.rows()) + " rows, surface has " +
                         std::to_string(ribbons) + " ribbons");
    }
    std::vector<std::vector<long>> passes(g.edge_count(), std::vector<long>(ribbons, 0));
    for (std::size_t k = 0; k < b.rows(); ++k) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (!b(k, e).fits_slong_p()) throw InputError("construct: pass count too large");
            passes[e][k] = b(k, e).get_si();
        }
    }
    return SurfaceDrawing(s, f, std::move(passes), identity_order(g.edge_count()), default_attach(f));
}

namespace {

SurfaceReport report_from(const Graph& g, CountMode mode, const std::vector<long>& values) {
    SurfaceReport r;
    r.mode = mode;
    r.is_embedding = true;
    const auto pairs = independent_pairs(g);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        r.pairs.push_back({pairs[k].i, pairs[k].j, values[k]});
        if (values[k] != 0) r.is_embedding = false;
    }
    return r;
}

// Gram form of the ribbon basis modulo 2.
BitMatrix ribbon_form_gf2(const SurfaceSpec& s) {
    return s.kind == SurfaceKind::orientable ? hyperbolic_matrix_gf2(s.parameter)
                                             : BitMatrix::identity(s.parameter);
}

}  // namespace

SurfaceReport verify_z2(const SurfaceDrawing& sd) {
    const Graph& g = sd.graph();
    const auto core = crossing_parity_matrix(sd.core());
    const auto y = sd.homology_gf2();
    const auto gram = y.transposed() * ribbon_form_gf2(sd.surface()) * y;
    const PairIndex pairs(g);
    std::vector<long> values;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [i, j, kind] = pairs[k];
        values.push_back(core.values.get(i, j) != gram.get(i, j) ? 1 : 0);
    }
    return report_from(g, CountMode::z2, values);
}

SurfaceReport verify_z(const SurfaceDrawing& sd) {
    if (sd.surface().kind != SurfaceKind::orientable) {
        throw InputError("verify: integer counts are only defined on orientable surfaces");
    }
    const Graph& g = sd.graph();
    const auto core = signed_crossing_matrix(sd.core());
    const auto y = sd.homology_int();
    const auto gram = y.transposed() * symplectic_matrix_int(sd.surface().parameter) * y;
    const PairIndex pairs(g);
    std::vector<long> values;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [i, j, kind] = pairs[k];
        const mpz_class v = core(i, j) - gram(i, j);
        values.push_back(v.get_si());
    }
    return report_from(g, CountMode::z, values);
}

namespace {

// The standard picture: the disk is the square [-1, 1]^2 (only its top side carries
// ribbon feet), the core drawing is scaled into [-2/5, 2/5]^2, and ribbons are
// arches above the top side.
class PictureBuilder {
  public:
    PictureBuilder(const SurfaceDrawing& sd, int attempt) : sd_(sd), attempt_(attempt) {}

    SurfacePicture build() {
        scale_core();
        assign_lanes();
        SurfacePicture pic;
        pic.vertex_points = vertex_points_;
        for (EdgeId e = 0; e < sd_.graph().edge_count(); ++e) pic.curves.push_back(edge_curve(e));
        return pic;
    }

  private:
    struct Lane {
        std::size_t ribbon;
        long direction;
        Point entry;  // foot point where the curve enters the ribbon
        Point exit;
        std::vector<Point> inner;  // points strictly between entry and exit
        std::vector<int> regions;  // one per segment entry -> ... -> exit
    };

    void scale_core() {
        const auto& core = sd_.core();
        Point lo = core.vertex_points().empty() ? Point{} : core.vertex_point(0);
        Point hi = lo;
        auto grow = [&](const Point& p) {
            lo.x = std::min(lo.x, p.x);
            lo.y = std::min(lo.y, p.y);
            hi.x = std::max(hi.x, p.x);
            hi.y = std::max(hi.y, p.y);
        };
        for (const auto& p : core.vertex_points()) grow(p);
        for (const auto& pl : core.polylines())
            for (const auto& p : pl) grow(p);
        center_ = Point{mpq_class((lo.x + hi.x) / 2), mpq_class((lo.y + hi.y) / 2)};
        mpq_class span = std::max(mpq_class(hi.x - lo.x), mpq_class(hi.y - lo.y));
        if (span == 0) span = 1;
        scale_ = mpq_class(ratio(4, 5) / span);
        for (const auto& p : core.vertex_points()) vertex_points_.push_back(to_picture(p));
    }

    Point to_picture(const Point& p) const { return scale_ * (p - center_); }

    // Foot slot s occupies [lo, lo + width] on the top side y = 1.
    mpq_class slot_lo(std::size_t s) const {
        const std::size_t feet = 2 * sd_.surface().ribbon_count();
        const mpq_class pitch = ratio(9, 5) / mpq_class(static_cast<long>(feet));
        return ratio(-9, 10) + mpq_class(static_cast<long>(s)) * pitch + pitch / 4;
    }
    mpq_class slot_width() const {
        const std::size_t feet = 2 * sd_.surface().ribbon_count();
        return ratio(9, 10) / mpq_class(static_cast<long>(feet));
    }

    void assign_lanes() {
        const auto& s = sd_.surface();
        const std::size_t ribbons = s.ribbon_count();
        const bool twisted = s.kind == SurfaceKind::nonorientable;
        std::vector<long> total(ribbons, 0);
        for (const auto& p : sd_.passes())
            for (std::size_t k = 0; k < ribbons; ++k) total[k] += std::abs(p[k]);
        std::vector<long> used(ribbons, 0);
        lanes_.assign(sd_.graph().edge_count(), {});
        if (ribbons == 0) return;
        const mpq_class w = slot_width();
        for (EdgeId e : sd_.tube_order()) {
            for (std::size_t k = 0; k < ribbons; ++k) {
                const long count = sd_.passes()[e][k];
                for (long c = 0; c < std::abs(count); ++c) {
                    const long j = used[k]++;
                    const mpq_class frac = ratio(j + 1, total[k] + 1);
                    const mpq_class delta = frac * w;
                    std::size_t foot_a, foot_b;
                    mpq_class top;
                    if (twisted) {
                        foot_a = 2 * k;
                        foot_b = 2 * k + 1;
                        top = ratio(3, 2);
                    } else {
                        const std::size_t handle = k / 2;
                        foot_a = 4 * handle + k % 2;
                        foot_b = 4 * handle + 2 + k % 2;
                        top = k % 2 == 0 ? ratio(3, 2) : mpq_class(2);
                    }
                    const mpq_class level = top - frac * ratio(2, 5);
                    const mpq_class x_in = slot_lo(foot_a) + delta;
                    const mpq_class x_out = twisted ? mpq_class(slot_lo(foot_b) + delta)
                                                    : mpq_class(slot_lo(foot_b) + w - delta);
                    Lane lane;
                    lane.ribbon = k;
                    lane.direction = count > 0 ? 1 : -1;
                    std::vector<Point> pts{{x_in, 1}, {x_in, level}, {x_out, level}, {x_out, 1}};
                    const int region = static_cast<int>(1 + k);
                    const int folded = static_cast<int>(1 + ribbons + k);
                    std::vector<int> regions{region, region, twisted ? folded : region};
                    if (count < 0) {
                        std::reverse(pts.begin(), pts.end());
                        std::reverse(regions.begin(), regions.end());
                    }
                    lane.entry = pts.front();
                    lane.exit = pts.back();
                    lane.inner.assign(pts.begin() + 1, pts.end() - 1);
                    lane.regions = regions;
                    lanes_[e].push_back(std::move(lane));
                }
            }
        }
    }

    std::size_t tube_rank(EdgeId e) const {
        const auto& order = sd_.tube_order();
        return static_cast<std::size_t>(std::find(order.begin(), order.end(), e) - order.begin());
    }

    TaggedCurve edge_curve(EdgeId e) {
        const auto& core = sd_.core();
        const auto& poly = core.polyline(e);
        TaggedCurve c;
        c.start_vertex = poly.front() == core.vertex_point(core.graph().edge(e).u) ? core.graph().edge(e).u
                                                                                  : core.graph().edge(e).v;
        c.end_vertex = c.start_vertex == core.graph().edge(e).u ? core.graph().edge(e).v : core.graph().edge(e).u;
        if (lanes_[e].empty()) {
            for (const auto& p : poly) c.points.push_back(to_picture(p));
            c.region.assign(c.points.size() - 1, 0);
            return c;
        }

        const long edges = static_cast<long>(sd_.graph().edge_count());
        const long rank = static_cast<long>(tube_rank(e));
        const mpq_class height = ratio(1, 2) + ratio(2, 5) * ratio(rank + 1, edges + 1) +
                                 ratio(attempt_ * (rank + 3), 7919L * (edges + 1) * 64);
        const mpq_class gap = ratio(1, 50 * (edges + 1));
        const mpq_class px = ratio(19, 20);
        const std::size_t seg = sd_.attach()[e];
        const Point a = to_picture(poly[seg]);
        const Point b = to_picture(poly[seg + 1]);
        // Connector ends: q1, q2 on the attach segment, p1, p2 in the outer disk.
        Point q1, q2, p1, p2;
        bool found = false;
        for (long place = 0; place < 12 && !found; ++place) {
            const mpq_class mid = ratio(place + 1, 13) + ratio(attempt_, 211L * 16);
            mpq_class eta = ratio(1, 64);
            mpq_class width = gap;
            for (int shrink = 0; shrink < 12 && !found; ++shrink, eta /= 4, width /= 2) {
                for (int flip = 0; flip < 2 && !found; ++flip) {
                    q1 = a + mpq_class(mid - eta) * (b - a);
                    q2 = a + mpq_class(mid + eta) * (b - a);
                    p1 = Point{px, flip ? mpq_class(height + width) : height};
                    p2 = Point{px, flip ? height : mpq_class(height + width)};
                    found = sliver_is_empty({q1, p1, p2, q2});
                }
            }
        }
        if (!found) throw LayoutError("no vertex-free connector for edge " + std::to_string(e));

        for (std::size_t k = 0; k <= seg; ++k) c.points.push_back(to_picture(poly[k]));
        c.region.assign(c.points.size() - 1, 0);
        add_point(c, q1, 0);
        add_point(c, p1, 0);
        const auto& lanes = lanes_[e];
        for (std::size_t k = 0; k < lanes.size(); ++k) {
            const Lane& lane = lanes[k];
            if (k > 0) {
                const Point& prev = lanes[k - 1].exit;
                const mpq_class wx = (prev.x + lane.entry.x) / 2 + ratio(attempt_ + 1, 104729L);
                add_point(c, Point{wx, height - ratio(static_cast<long>(k), 997L * (edges + 1))}, 0);
            }
            add_point(c, lane.entry, 0);
            for (std::size_t s = 0; s < lane.inner.size(); ++s) add_point(c, lane.inner[s], lane.regions[s]);
            add_point(c, lane.exit, lane.regions.back());
        }
        add_point(c, p2, 0);
        add_point(c, q2, 0);
        for (std::size_t k = seg + 1; k < poly.size(); ++k) add_point(c, to_picture(poly[k]), 0);
        return c;
    }

    static void add_point(TaggedCurve& c, const Point& p, int region_of_segment) {
        c.points.push_back(p);
        c.region.push_back(region_of_segment);
    }

    bool sliver_is_empty(const std::vector<Point>& quad) const {
        for (const auto& v : vertex_points_) {
            for (std::size_t i = 0; i < quad.size(); ++i) {
                if (on_segment(quad[i], quad[(i + 1) % quad.size()], v)) return false;
            }
            if (winding_number(quad, v) != 0) return false;
        }
        // A bow-tie sliver would make the two connector copies cross each other.
        return orientation(quad[0], quad[1], quad[2]) == orientation(quad[2], quad[3], quad[0]);
    }

    const SurfaceDrawing& sd_;
    int attempt_;
    Point center_;
    mpq_class scale_;
    std::vector<Point> vertex_points_;
    std::vector<std::vector<Lane>> lanes_;
};

}  // namespace

SurfacePicture layout_picture(const SurfaceDrawing& sd) {
    std::string last;
    for (int attempt = 0; attempt < 24; ++attempt) {
        SurfacePicture pic = PictureBuilder(sd, attempt).build();
        try {
            pic.crossings = find_crossings(pic.curves, pic.vertex_points);
            return pic;
        } catch (const GeneralPositionError& err) {
            last = err.what();
        }
    }
    throw LayoutError("surface picture not in general position: " + last);
}

SurfaceReport verify_geometric(const SurfaceDrawing& sd, CountMode mode) {
    if (mode == CountMode::z && sd.surface().kind != SurfaceKind::orientable) {
        throw InputError("verify: integer counts are only defined on orientable surfaces");
    }
    const SurfacePicture pic = layout_picture(sd);
    const Graph& g = sd.graph();
    const PairIndex pairs(g);
    std::vector<long> values(pairs.size(), 0);
    for (const auto& rec : pic.crossings) {
        if (!rec.same_region) continue;
        const std::size_t k = pairs.find(rec.curve_a, rec.curve_b);
        if (k == PairIndex::npos) continue;
        values[k] += mode == CountMode::z ? rec.sign : 1;
    }
    if (mode == CountMode::z2)
        for (auto& v : values) v &= 1;
    return report_from(g, mode, values);
}

Extraction extract_matrix(const SurfaceDrawing& sd, CountMode mode) {
    const auto& s = sd.surface();
    Extraction out{mode, {}, {}, sd.homology_int(), [&] {
                       const SurfacePicture pic = layout_picture(sd);
                       std::vector<std::vector<Point>> polys;
                       for (const auto& c : pic.curves) polys.push_back(c.points);
                       return PlanarDrawing(sd.graph(), pic.vertex_points, std::move(polys));
                   }()};
    if (mode == CountMode::z) {
        if (s.kind != SurfaceKind::orientable) {
            throw InputError("extract: integer mode needs an orientable surface");
        }
        out.a_int = out.y.transposed() * symplectic_matrix_int(s.parameter) * out.y;
        return out;
    }
    const BitMatrix y = sd.homology_gf2();
    out.a_gf2 = y.transposed() * ribbon_form_gf2(s) * y;
    if (s.kind == SurfaceKind::nonorientable && out.a_gf2.rows() > 0 &&
        !out.a_gf2.symmetry_class().is_odd) {
        out.a_gf2.set(0, 0);
    }
    return out;
}

namespace {

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

long parse_long(const std::string& tok, const std::string& what) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size() || tok.empty() || tok[0] == '+') {
        throw InputError("surface drawing: bad " + what + " '" + tok + "'");
    }
    return v;
}

std::size_t parse_index(const std::string& tok, const std::string& what) {
    const long v = parse_long(tok, what);
    if (v < 0) throw InputError("surface drawing: negative " + what + " '" + tok + "'");
    return static_cast<std::size_t>(v);
}

}  // namespace

SurfaceDrawing parse_surface_drawing(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw InputError("surface drawing: empty input");
    std::istringstream header(line);
    std::string kw, kind, param, extra;
    header >> kw >> kind >> param;
    if (kw != "surface" || (kind != "S" && kind != "M") || (header >> extra)) {
        throw InputError("surface drawing: expected 'surface S <g>' or 'surface M <m>' header");
    }
    const SurfaceSpec spec = parse_surface_spec(kind + ":" + param);

    std::string drawing_text;
    std::vector<std::pair<std::size_t, std::vector<long>>> pass_lines;
    std::vector<std::pair<std::size_t, std::size_t>> attach_lines;
    std::optional<std::vector<EdgeId>> order;
    while (next_content_line(in, line)) {
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "passes" || word == "attach") {
            std::string id, colon;
            ls >> id >> colon;
            if (colon != ":") throw InputError("surface drawing: expected ':' in '" + line + "'");
            std::vector<long> vals;
            for (std::string t; ls >> t;) vals.push_back(parse_long(t, "count"));
            const std::size_t e = parse_index(id, "edge id");
            if (word == "passes") {
                pass_lines.emplace_back(e, std::move(vals));
            } else {
                if (vals.size() != 1 || vals[0] < 0) throw InputError("surface drawing: bad attach line");
                attach_lines.emplace_back(e, static_cast<std::size_t>(vals[0]));
            }
        } else if (word == "order") {
            std::string colon;
            ls >> colon;
            if (colon != ":") throw InputError("surface drawing: expected ':' in order line");
            order.emplace();
            for (std::string t; ls >> t;) order->push_back(parse_index(t, "edge id"));
        } else {
            drawing_text += line;
            drawing_text += '\n';
        }
    }
    PlanarDrawing core = parse_drawing(drawing_text);
    const std::size_t edges = core.graph().edge_count();
    std::vector<std::vector<long>> passes(edges, std::vector<long>(spec.ribbon_count(), 0));
    std::vector<bool> seen(edges, false);
    for (auto& [e, vals] : pass_lines) {
        if (e >= edges || seen[e]) throw InputError("surface drawing: bad or repeated passes line");
        seen[e] = true;
        passes[e] = std::move(vals);
    }
    std::vector<std::size_t> attach = default_attach(core);
    for (const auto& [e, s] : attach_lines) {
        if (e >= edges) throw InputError("surface drawing: attach line for unknown edge");
        attach[e] = s;
    }
    return SurfaceDrawing(spec, std::move(core), std::move(passes),
                          order ? *order : identity_order(edges), std::move(attach));
}

SurfaceDrawing parse_surface_drawing(const std::string& text) {
    std::istringstream in(text);
    return parse_surface_drawing(in);
}

std::string serialize_surface_drawing(const SurfaceDrawing& sd) {
    std::ostringstream out;
    out << "surface " << (sd.surface().kind == SurfaceKind::orientable ? "S " : "M ")
        << sd.surface().parameter << '\n';
    out << serialize_drawing(sd.core());
    for (EdgeId e = 0; e < sd.passes().size(); ++e) {
        out << "passes " << e << " :";
        for (long v : sd.passes()[e]) out << ' ' << v;
        out << '\n';
    }
    out << "order :";
    for (EdgeId e : sd.tube_order()) out << ' ' << e;
    out << '\n';
    for (EdgeId e = 0; e < sd.attach().size(); ++e) out << "attach " << e << " : " << sd.attach()[e] << '\n';
    return out.str();
}

std::string format_report(const SurfaceReport& r) {
    std::ostringstream out;
    out << "mode = " << (r.mode == CountMode::z ? "z" : "z2") << '\n';
    for (const auto& p : r.pairs) out << "pair " << p.i << ' ' << p.j << " = " << p.value << '\n';
    out << "embedding = " << (r.is_embedding ? "yes" : "no") << '\n';
    return out.str();
}

}  // namespace z2embed
