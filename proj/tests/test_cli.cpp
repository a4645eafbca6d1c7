#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "z2embed/cli.hpp"
#include "z2embed/graph.hpp"
#include "z2embed/planar_drawing.hpp"
#include "z2embed/surface.hpp"

using namespace z2embed;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class Workdir {
  public:
    Workdir() {
        dir_ = fs::temp_directory_path() / ("z2embed_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    ~Workdir() { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(dir_ / name) << text;
        return path(name);
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    std::string read(const std::string& name) const {
        std::ifstream in(dir_ / name);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

  private:
    fs::path dir_;
};

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("solve answers and exit codes") {
    Workdir w;
    const std::string k5 = w.write("k5.g", serialize_graph(complete_graph(5)));
    Run r = run({"solve", "--graph", k5, "--genus", "0"});
    CHECK(r.code == exit_code::negative);
    CHECK(contains(r.out, "NO"));

    r = run({"solve", "--graph", k5, "--genus", "1", "--witness-out", w.path("k5.sd")});
    CHECK(r.code == exit_code::success);
    CHECK(contains(r.out, "YES"));
    r = run({"verify", "--surface-drawing", w.path("k5.sd")});
    CHECK(r.code == exit_code::success);
    CHECK(contains(r.out, "EMBEDDING"));
    r = run({"verify", "--surface-drawing", w.path("k5.sd"), "--geometric"});
    CHECK(r.code == exit_code::success);

    r = run({"--structured", "solve", "--graph", k5, "--crosscaps", "1"});
    CHECK(r.code == exit_code::success);
    CHECK(contains(r.out, "result = YES"));
    CHECK(contains(r.out, "surface = M:1"));

    r = run({"solve", "--graph", k5, "--euler", "2"});
    CHECK(r.code == exit_code::negative);

    const std::string k8 = w.write("k8.g", serialize_graph(complete_graph(8)));
    r = run({"solve", "--graph", k8, "--genus", "2", "--budget-nodes", "1000"});
    CHECK(r.code == exit_code::unknown);
    CHECK(contains(r.out, "UNKNOWN"));
}

TEST_CASE("input errors exit with code 3") {
    Workdir w;
    CHECK(run({}).code == exit_code::input_error);
    CHECK(run({"bogus"}).code == exit_code::input_error);
    CHECK(run({"solve", "--graph", w.path("missing.g"), "--genus", "1"}).code == exit_code::input_error);
    const std::string k4 = w.write("k4.g", serialize_graph(complete_graph(4)));
    CHECK(run({"solve", "--graph", k4}).code == exit_code::input_error);
    CHECK(run({"solve", "--graph", k4, "--genus", "1", "--crosscaps", "1"}).code == exit_code::input_error);
    CHECK(run({"factor", "--mode", "weird", "--matrix", k4}).code == exit_code::input_error);
    const std::string bad = w.write("bad.m", "gf2 2 2\n0 1\n0 0\n");
    CHECK(run({"compat", "--graph", k4, "--matrix", bad}).code == exit_code::input_error);
    CHECK(run({"bound"}).code == exit_code::input_error);
    CHECK(run({"--help"}).code == exit_code::success);
}

TEST_CASE("bound command") {
    Run r = run({"bound", "--kmn", "5", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
    CHECK(run({"bound", "--k2n", "4"}).out == "1\n");
    CHECK(run({"--structured", "bound", "--kmn", "6", "6"}).out == "bound = 3\n");
}

TEST_CASE("compat, realize and crossings round trip") {
    Workdir w;
    const Graph k4 = complete_graph(4);
    const std::string g = w.write("k4.g", serialize_graph(k4));
    BitMatrix target(k4.edge_count(), k4.edge_count());
    // Edges {0,1} and {2,3} are independent.
    target.set(0, 5);
    target.set(5, 0);
    const std::string m = w.write("t.m", serialize_gf2_matrix(target));
    Run r = run({"compat", "--graph", g, "--matrix", m});
    CHECK(r.code == exit_code::success);
    CHECK(contains(r.out, "COMPATIBLE"));
    r = run({"realize", "--graph", g, "--matrix", m, "--out", w.path("k4.d")});
    CHECK(r.code == exit_code::success);
    r = run({"crossings", "--drawing", w.path("k4.d")});
    CHECK(r.code == exit_code::success);
    const PairIndex pairs(k4);
    CHECK(ParityMatrix{parse_gf2_matrix(r.out)}.on_pairs(pairs) == ParityMatrix{target}.on_pairs(pairs));
    r = run({"crossings", "--drawing", w.path("k4.d"), "--signed"});
    CHECK(r.code == exit_code::success);
    CHECK(parse_int_matrix(r.out).is_skew_symmetric());

    const Graph k5 = complete_graph(5);
    const std::string g5 = w.write("k5.g", serialize_graph(k5));
    const std::string zero = w.write("z.m", serialize_gf2_matrix(BitMatrix(10, 10)));
    CHECK(run({"compat", "--graph", g5, "--matrix", zero}).code == exit_code::negative);
    CHECK(run({"realize", "--graph", g5, "--matrix", zero, "--out", w.path("x.d")}).code == exit_code::negative);
}

TEST_CASE("factor command output reconstructs the input") {
    Workdir w;
    BitMatrix h = hyperbolic_matrix_gf2(1);
    const std::string even = w.write("e.m", serialize_gf2_matrix(h));
    Run r = run({"factor", "--mode", "even", "--matrix", even});
    CHECK(r.code == 0);
    const BitMatrix y = parse_gf2_matrix(r.out);
    CHECK(y.transposed() * hyperbolic_matrix_gf2(y.rows() / 2) * y == h);

    CHECK(run({"factor", "--mode", "odd", "--matrix", even}).code == exit_code::input_error);
    const std::string odd = w.write("o.m", serialize_gf2_matrix(BitMatrix::identity(3)));
    r = run({"factor", "--mode", "odd", "--matrix", odd});
    CHECK(r.code == 0);
    CHECK(parse_gf2_matrix(r.out).rows() == 3);

    IntMatrix a(3, 3);
    a(0, 1) = 4;
    a(1, 0) = -4;
    a(1, 2) = 6;
    a(2, 1) = -6;
    const std::string alt = w.write("a.m", serialize_int_matrix(a));
    r = run({"factor", "--mode", "alternating", "--matrix", alt});
    CHECK(r.code == 0);
    const IntMatrix b = parse_int_matrix(r.out);
    CHECK(b.transposed() * symplectic_matrix_int(b.rows() / 2) * b == a);
}

TEST_CASE("construct, verify and extract pipeline") {
    Workdir w;
    const Graph k5 = complete_graph(5);
    const PlanarDrawing f = canonical_drawing(k5);
    const std::string g = w.write("k5.g", serialize_graph(k5));
    const std::string d = w.write("k5.d", serialize_drawing(f));
    BitMatrix y(2, k5.edge_count());
    y.set(0, 0);
    y.set(1, 9);
    const std::string fy = w.write("y.m", serialize_gf2_matrix(y));
    Run r = run({"construct", "--graph", g, "--drawing", d, "--factor", fy, "--surface", "S:1", "--out",
                 w.path("s.sd")});
    CHECK(r.code == 0);
    const SurfaceDrawing sd = parse_surface_drawing(w.read("s.sd"));
    CHECK(sd.homology_gf2() == y);
    r = run({"verify", "--surface-drawing", w.path("s.sd")});
    CHECK((r.code == 0) == verify_z2(sd).is_embedding);
    r = run({"--structured", "extract", "--surface-drawing", w.path("s.sd"), "--drawing-out", w.path("p.d")});
    CHECK(contains(r.out, "rank = 2"));
    CHECK(contains(r.out, "class = even"));
    CHECK(contains(r.out, "projected_matches"));
    CHECK_NOTHROW(parse_drawing(w.read("p.d")));

    // Integer construction from the signed crossing matrix cancels every pair.
    const IntMatrix a = signed_crossing_matrix(f);
    const std::string am = w.write("a.m", serialize_int_matrix(a));
    r = run({"factor", "--mode", "alternating", "--matrix", am});
    REQUIRE(r.code == 0);
    const std::string bm = w.write("b.m", r.out);
    const std::string surface = "S:" + std::to_string(parse_int_matrix(r.out).rows() / 2);
    r = run({"construct", "--graph", g, "--drawing", d, "--factor", bm, "--surface", surface, "--z", "--out",
             w.path("z.sd")});
    CHECK(r.code == 0);
    CHECK(run({"verify", "--surface-drawing", w.path("z.sd"), "--z"}).code == 0);
    CHECK(run({"verify", "--surface-drawing", w.path("z.sd"), "--z", "--geometric"}).code == 0);
    r = run({"extract", "--surface-drawing", w.path("z.sd"), "--z"});
    CHECK(r.code == 0);
    CHECK(run({"construct", "--graph", g, "--drawing", d, "--factor", bm, "--surface", "M:2", "--z"}).code ==
          exit_code::input_error);
}
