#include "z2embed/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "z2embed/gf2.hpp"
#include "z2embed/graph.hpp"
#include "z2embed/int_matrix.hpp"
#include "z2embed/planar_drawing.hpp"
#include "z2embed/solver.hpp"
#include "z2embed/surface.hpp"

namespace z2embed {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
    if (!out) throw InputError("write failed for '" + path + "'");
}

// Text sink that prints either the human form or `key = value` lines.
class Report {
  public:
    Report(std::ostream& out, bool structured) : out_(out), structured_(structured) {}

    bool structured() const { return structured_; }
    void human(const std::string& text) {
        if (!structured_) out_ << text;
    }
    void key(const std::string& k, const std::string& v) {
        if (structured_) out_ << k << " = " << v << '\n';
    }
    void both(const std::string& k, const std::string& v, const std::string& text) {
        structured_ ? key(k, v) : human(text);
    }

  private:
    std::ostream& out_;
    bool structured_;
};

BitMatrix parity_target(const Graph& g, const BitMatrix& m) {
    if (m.rows() != g.edge_count() || m.cols() != g.edge_count()) {
        throw InputError("matrix must be |E| x |E| = " + std::to_string(g.edge_count()) + " square");
    }
    if (!m.is_symmetric()) throw InputError("matrix must be symmetric");
    return m;
}

std::string pair_lines(const Graph& g, const std::vector<long>& values, bool structured) {
    std::ostringstream out;
    const auto pairs = independent_pairs(g);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        out << "pair " << pairs[k].i << ' ' << pairs[k].j << (structured ? " = " : " ") << values[k] << '\n';
    }
    return out.str();
}

void print_surface_report(Report& rep, std::ostream& out, const SurfaceReport& r) {
    if (rep.structured()) {
        out << "mode = " << (r.mode == CountMode::z ? "z" : "z2") << '\n';
        for (const auto& p : r.pairs) out << "pair " << p.i << ' ' << p.j << " = " << p.value << '\n';
        out << "result = " << (r.is_embedding ? "EMBEDDING" : "NOT_EMBEDDING") << '\n';
    } else {
        out << (r.mode == CountMode::z ? "signed crossing sums" : "crossing parities")
            << " on independent pairs:\n";
        for (const auto& p : r.pairs) out << "  " << p.i << ' ' << p.j << ": " << p.value << '\n';
        out << (r.is_embedding ? "EMBEDDING" : "NOT EMBEDDING") << '\n';
    }
}

int cmd_crossings(const std::string& drawing_path, bool signed_counts, Report& rep, std::ostream& out) {
    const PlanarDrawing d = parse_drawing(read_file(drawing_path));
    const Graph& g = d.graph();
    if (signed_counts) {
        const IntMatrix m = signed_crossing_matrix(d);
        if (rep.structured()) {
            std::vector<long> vals;
            for (const auto& p : independent_pairs(g)) vals.push_back(m(p.i, p.j).get_si());
            out << "kind = signed\n" << pair_lines(g, vals, true);
        } else {
            out << serialize_int_matrix(m);
        }
    } else {
        const ParityMatrix m = crossing_parity_matrix(d);
        if (rep.structured()) {
            std::vector<long> vals;
            for (const auto& p : independent_pairs(g)) vals.push_back(m.values.get(p.i, p.j));
            out << "kind = parity\n" << pair_lines(g, vals, true);
        } else {
            out << serialize_gf2_matrix(m.values);
        }
    }
    return exit_code::success;
}

int cmd_compat(const std::string& graph_path, const std::string& matrix_path, Report& rep) {
    const Graph g = parse_graph(read_file(graph_path));
    const ParityMatrix target{parity_target(g, parse_gf2_matrix(read_file(matrix_path)))};
    const CompatibilityClass cls(g);
    const auto cert = cls.certificate(target.on_pairs(cls.pairs()));
    if (!cert) {
        rep.both("result", "INCOMPATIBLE", "INCOMPATIBLE\n");
        return exit_code::negative;
    }
    std::ostringstream moves;
    std::size_t count = 0;
    for (std::size_t k = 0; k < cls.moves().size(); ++k) {
        if (!cert->get(k)) continue;
        moves << (count++ ? " " : "") << cls.moves()[k].edge << ':' << cls.moves()[k].vertex;
    }
    rep.key("result", "COMPATIBLE");
    rep.key("finger_moves", moves.str());
    rep.human("COMPATIBLE\ncertificate (edge:vertex finger moves on the canonical drawing): " +
              (count ? moves.str() : std::string("none")) + "\n");
    return exit_code::success;
}

int cmd_realize(const std::string& graph_path, const std::string& matrix_path, const std::string& out_path,
                Report& rep) {
    const Graph g = parse_graph(read_file(graph_path));
    const ParityMatrix target{parity_target(g, parse_gf2_matrix(read_file(matrix_path)))};
    if (!is_compatible_mod2(g, target)) {
        rep.both("result", "INCOMPATIBLE", "INCOMPATIBLE\n");
        return exit_code::negative;
    }
    const PlanarDrawing d = realize_parity(g, target);
    const std::string text = serialize_drawing(d);
    // Re-read what is written and check the parities once more.
    const PlanarDrawing back = parse_drawing(text);
    const PairIndex pairs(g);
    if (crossing_parity_matrix(back).on_pairs(pairs) != target.on_pairs(pairs)) {
        throw std::logic_error("realize: written drawing does not reproduce the target");
    }
    write_file(out_path, text);
    rep.key("result", "REALIZED");
    rep.key("out", out_path);
    rep.human("REALIZED: drawing written to " + out_path + "\n");
    return exit_code::success;
}

int cmd_factor(const std::string& mode, const std::string& matrix_path, Report& rep, std::ostream& out) {
    const std::string text = read_file(matrix_path);
    if (mode == "alternating") {
        const IntMatrix a = parse_int_matrix(text);
        const IntMatrix b = factor_alternating(a);
        if (b.transposed() * symplectic_matrix_int(b.rows() / 2) * b != a) {
            throw std::logic_error("factor: reconstruction failed");
        }
        rep.key("rank", std::to_string(b.rows()));
        out << serialize_int_matrix(b);
        return exit_code::success;
    }
    const BitMatrix a = parse_gf2_matrix(text);
    const BitMatrix y = mode == "even" ? factor_even(a) : factor_odd(a);
    const BitMatrix form = mode == "even" ? hyperbolic_matrix_gf2(y.rows() / 2) : BitMatrix::identity(y.rows());
    if (y.transposed() * form * y != a) throw std::logic_error("factor: reconstruction failed");
    rep.key("rank", std::to_string(y.rows()));
    out << serialize_gf2_matrix(y);
    return exit_code::success;
}

struct SolveOptions {
    std::string graph;
    std::optional<long> genus, crosscaps, euler;
    std::size_t nodes = SolverBudget{}.max_nodes;
    double seconds = SolverBudget{}.time_cap_seconds;
    unsigned threads = 1;
    std::string witness_out;
};

int cmd_solve(const SolveOptions& o, Report& rep) {
    const Graph g = parse_graph(read_file(o.graph));
    const int chosen = o.genus.has_value() + o.crosscaps.has_value() + o.euler.has_value();
    if (chosen != 1) throw InputError("solve: give exactly one of --genus, --crosscaps, --euler");
    SolverBudget budget;
    budget.max_nodes = o.nodes;
    budget.time_cap_seconds = o.seconds;
    budget.threads = std::max(1u, o.threads);
    SolveResult r;
    std::string target;
    if (o.genus) {
        if (*o.genus < 0) throw InputError("solve: genus must be >= 0");
        r = z2_embeddable_orientable(g, static_cast<std::size_t>(*o.genus), budget);
        target = "S:" + std::to_string(*o.genus);
    } else if (o.crosscaps) {
        if (*o.crosscaps < 1) throw InputError("solve: crosscap number must be >= 1");
        r = z2_embeddable_nonorientable(g, static_cast<std::size_t>(*o.crosscaps), budget);
        target = "M:" + std::to_string(*o.crosscaps);
    } else {
        if (*o.euler > 2) throw InputError("solve: Euler characteristic must be <= 2");
        r = z2_embeddable_euler(g, *o.euler, budget);
        target = "euler:" + std::to_string(*o.euler);
    }
    if (r.answer == Answer::yes) {
        // Round-trip the witness through its text form and verify the parsed copy.
        const std::string text = serialize_surface_drawing(r.witness->surface_drawing);
        const SurfaceDrawing back = parse_surface_drawing(text);
        if (!verify_z2(back).is_embedding) throw std::logic_error("solve: witness failed re-verification");
        if (!o.witness_out.empty()) write_file(o.witness_out, text);
    }
    rep.key("result", to_string(r.answer));
    rep.key("target", target);
    rep.key("nodes", std::to_string(r.nodes));
    if (r.answer == Answer::yes) {
        rep.key("surface", format_surface_spec(r.witness->surface));
        rep.key("rank", std::to_string(rank_gf2(r.witness->a)));
        rep.key("parallel", r.parallel ? "yes" : "no");
        if (!o.witness_out.empty()) rep.key("witness", o.witness_out);
    }
    std::ostringstream human;
    human << to_string(r.answer) << '\n';
    if (r.answer == Answer::yes) {
        human << "witness on " << format_surface_spec(r.witness->surface) << ", matrix rank "
              << rank_gf2(r.witness->a) << ", verified";
        if (r.witness->geometric_report) human << " (combinatorial and geometric)";
        human << '\n';
        if (!o.witness_out.empty()) human << "witness written to " << o.witness_out << '\n';
    }
    human << "search nodes: " << r.nodes << '\n';
    rep.human(human.str());
    switch (r.answer) {
        case Answer::yes: return exit_code::success;
        case Answer::no: return exit_code::negative;
        case Answer::unknown: return exit_code::unknown;
    }
    return exit_code::unknown;
}

int cmd_bound(const std::vector<long>& kmn, std::optional<long> k2n, Report& rep, std::ostream& out) {
    if (kmn.empty() == !k2n.has_value()) throw InputError("bound: give exactly one of --kmn M N or --k2n N");
    const long v = k2n ? k2n_lower_bound(*k2n) : kmn_lower_bound(kmn[0], kmn[1]);
    if (rep.structured()) {
        rep.key("bound", std::to_string(v));
    } else {
        out << v << '\n';
    }
    return exit_code::success;
}

int cmd_construct(const std::string& graph_path, const std::string& drawing_path, const std::string& factor_path,
                  const std::string& surface, bool z, const std::string& out_path, Report& rep,
                  std::ostream& out) {
    const Graph g = parse_graph(read_file(graph_path));
    const PlanarDrawing f = parse_drawing(read_file(drawing_path));
    const SurfaceSpec s = parse_surface_spec(surface);
    const std::string factor_text = read_file(factor_path);
    const SurfaceDrawing sd = z ? construct_z_embedding(g, f, parse_int_matrix(factor_text), s)
                                : construct_z2_embedding(g, f, parse_gf2_matrix(factor_text), s);
    const std::string text = serialize_surface_drawing(sd);
    if (out_path.empty()) {
        out << text;
        return exit_code::success;
    }
    write_file(out_path, text);
    rep.key("result", "CONSTRUCTED");
    rep.key("out", out_path);
    rep.human("surface drawing written to " + out_path + "\n");
    return exit_code::success;
}

int cmd_verify(const std::string& path, bool z, bool geometric, Report& rep, std::ostream& out) {
    const SurfaceDrawing sd = parse_surface_drawing(read_file(path));
    const CountMode mode = z ? CountMode::z : CountMode::z2;
    const SurfaceReport r = geometric ? verify_geometric(sd, mode) : (z ? verify_z(sd) : verify_z2(sd));
    print_surface_report(rep, out, r);
    return r.is_embedding ? exit_code::success : exit_code::negative;
}

int cmd_extract(const std::string& path, bool z, const std::string& drawing_out, Report& rep, std::ostream& out) {
    const SurfaceDrawing sd = parse_surface_drawing(read_file(path));
    const Extraction ex = extract_matrix(sd, z ? CountMode::z : CountMode::z2);
    const Graph& g = sd.graph();
    const PairIndex pairs(g);
    bool matches = true;
    bool compatible = true;
    std::string matrix_text, rank;
    if (z) {
        const IntMatrix f = signed_crossing_matrix(ex.projected);
        for (std::size_t k = 0; k < pairs.size(); ++k)
            matches = matches && f(pairs[k].i, pairs[k].j) == ex.a_int(pairs[k].i, pairs[k].j);
        compatible = matches;
        matrix_text = serialize_int_matrix(ex.a_int);
        rank = std::to_string(rank_q(ex.a_int));
    } else {
        const ParityMatrix target{ex.a_gf2};
        matches = crossing_parity_matrix(ex.projected).on_pairs(pairs) == target.on_pairs(pairs);
        compatible = is_compatible_mod2(g, target).has_value();
        matrix_text = serialize_gf2_matrix(ex.a_gf2);
        rank = std::to_string(rank_gf2(ex.a_gf2));
    }
    if (!drawing_out.empty()) write_file(drawing_out, serialize_drawing(ex.projected));
    if (rep.structured()) {
        rep.key("rank", rank);
        if (!z) rep.key("class", ex.a_gf2.symmetry_class().is_odd ? "odd" : "even");
        rep.key("projected_matches", matches ? "yes" : "no");
        rep.key("result", compatible ? "COMPATIBLE" : "INCOMPATIBLE");
    } else {
        out << matrix_text;
        out << "rank " << rank;
        if (!z) out << (ex.a_gf2.symmetry_class().is_odd ? ", odd" : ", even");
        out << '\n';
        out << "projected drawing realizes the matrix: " << (matches ? "yes" : "no") << '\n';
        out << (compatible ? "COMPATIBLE" : "INCOMPATIBLE") << '\n';
    }
    return compatible ? exit_code::success : exit_code::negative;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Z2- and Z-embeddings of graphs into surfaces"};
    app.name("z2embed");
    app.require_subcommand(1);
    bool structured = false;
    app.add_flag("--structured", structured, "print line-oriented key = value output");

    std::string drawing, graph, matrix, out_path, mode, factor, surface, surface_drawing, drawing_out;
    bool signed_counts = false, z = false, geometric = false;
    SolveOptions solve;
    std::vector<long> kmn;
    std::optional<long> k2n;

    auto* crossings = app.add_subcommand("crossings", "crossing parity (or signed) matrix of a drawing");
    crossings->add_option("--drawing", drawing, "drawing file")->required();
    crossings->add_flag("--signed", signed_counts, "algebraic crossing numbers");

    auto* compat = app.add_subcommand("compat", "is the graph compatible modulo 2 to a matrix");
    compat->add_option("--graph", graph)->required();
    compat->add_option("--matrix", matrix, "gf2 |E| x |E| matrix")->required();

    auto* realize = app.add_subcommand("realize", "draw the graph with prescribed crossing parities");
    realize->add_option("--graph", graph)->required();
    realize->add_option("--matrix", matrix)->required();
    realize->add_option("--out", out_path)->required();

    auto* factor_cmd = app.add_subcommand("factor", "factor an even, odd or alternating matrix");
    factor_cmd->add_option("--mode", mode)->required()->check(CLI::IsMember({"even", "odd", "alternating"}));
    factor_cmd->add_option("--matrix", matrix)->required();

    auto* solve_cmd = app.add_subcommand("solve", "decide Z2-embeddability into a surface");
    solve_cmd->add_option("--graph", solve.graph)->required();
    solve_cmd->add_option("--genus", solve.genus, "orientable genus g");
    solve_cmd->add_option("--crosscaps", solve.crosscaps, "nonorientable genus m");
    solve_cmd->add_option("--euler", solve.euler, "Euler characteristic e <= 2");
    solve_cmd->add_option("--budget-nodes", solve.nodes)->check(CLI::PositiveNumber);
    solve_cmd->add_option("--time-cap", solve.seconds, "seconds")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--threads", solve.threads)->check(CLI::PositiveNumber);
    solve_cmd->add_option("--witness-out", solve.witness_out, "write the witness surface drawing");

    auto* bound = app.add_subcommand("bound", "lower bounds on the Z2-genus of K_{m,n} and K_{2n}");
    bound->add_option("--kmn", kmn)->expected(2);
    bound->add_option("--k2n", k2n);

    auto* construct = app.add_subcommand("construct", "build a surface drawing from a planar drawing and a factor");
    construct->add_option("--graph", graph)->required();
    construct->add_option("--drawing", drawing)->required();
    construct->add_option("--factor", factor)->required();
    construct->add_option("--surface", surface, "S:g or M:m")->required();
    construct->add_flag("--z", z, "integer factor, signed passes");
    construct->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "check a surface drawing");
    verify->add_option("--surface-drawing", surface_drawing)->required();
    verify->add_flag("--z", z, "signed crossing sums");
    verify->add_flag("--geometric", geometric, "count crossings in the explicit picture");

    auto* extract = app.add_subcommand("extract", "matrix of the closed-up edge cycles");
    extract->add_option("--surface-drawing", surface_drawing)->required();
    extract->add_flag("--z", z, "integer form");
    extract->add_option("--drawing-out", drawing_out, "write the projected planar drawing");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code::input_error;
    }

    Report rep(out, structured);
    try {
        if (*crossings) return cmd_crossings(drawing, signed_counts, rep, out);
        if (*compat) return cmd_compat(graph, matrix, rep);
        if (*realize) return cmd_realize(graph, matrix, out_path, rep);
        if (*factor_cmd) return cmd_factor(mode, matrix, rep, out);
        if (*solve_cmd) return cmd_solve(solve, rep);
        if (*bound) return cmd_bound(kmn, k2n, rep, out);
        if (*construct) return cmd_construct(graph, drawing, factor, surface, z, out_path, rep, out);
        if (*verify) return cmd_verify(surface_drawing, z, geometric, rep, out);
        if (*extract) return cmd_extract(surface_drawing, z, drawing_out, rep, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input_error;
    } catch (const LayoutError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input_error;
    }
    return exit_code::input_error;
}

}  // namespace z2embed
