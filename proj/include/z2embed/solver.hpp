#ifndef Z2EMBED_SOLVER_HPP
#define Z2EMBED_SOLVER_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "z2embed/gf2.hpp"
#include "z2embed/graph.hpp"
#include "z2embed/planar_drawing.hpp"
#include "z2embed/surface.hpp"

namespace z2embed {

struct SolverBudget {
    std::size_t max_nodes = 200'000'000;
    double time_cap_seconds = 600.0;
    unsigned threads = 1;
    /// Also run the geometric verifier on every witness before answering yes.
    bool geometric_check = true;
};

enum class Answer { yes, no, unknown };

std::string to_string(Answer a);

/// Full data behind a yes answer; both verifier reports say is_embedding.
struct Witness {
    SurfaceSpec surface;
    BitMatrix a;        // compatible matrix (even on S_g, odd on M_m)
    BitMatrix y;        // one column per edge, ribbon_count() rows
    PlanarDrawing drawing;  // planar drawing realizing the parities of a
    SurfaceDrawing surface_drawing;
    SurfaceReport report;
    std::optional<SurfaceReport> geometric_report;
};

struct SolveResult {
    Answer answer = Answer::unknown;
    std::optional<Witness> witness;
    std::size_t nodes = 0;
    bool parallel = false;  // witness found by a parallel search (not canonical order)
};

/// Searches per-edge vectors y in GF(2)^{2 genus} whose H-Gram matrix lies in the
/// compatibility class of g.
SolveResult z2_embeddable_orientable(const Graph& g, std::size_t genus, const SolverBudget& budget = {});

/// Same search with the identity form on GF(2)^m; oddness comes from a diagonal flip.
SolveResult z2_embeddable_nonorientable(const Graph& g, std::size_t m, const SolverBudget& budget = {});

/// Union of the even search at rank <= 2 - e and the odd search at rank <= 2 - e.
SolveResult z2_embeddable_euler(const Graph& g, long euler, const SolverBudget& budget = {});

struct GenusResult {
    Answer answer = Answer::unknown;  // no: not embeddable for any parameter <= max
    std::optional<std::size_t> value;
    std::optional<Witness> witness;
};

/// Smallest genus (or crosscap number, starting at 1) with a yes, scanning upward.
GenusResult z2_genus(const Graph& g, SurfaceKind kind, std::size_t max, const SolverBudget& budget = {});

/// ceil((m-2)(n-2)/4 - (m-3)/2), clamped at 0; 0 when m or n is at most 2.
long kmn_lower_bound(long m, long n);
/// ceil((n-3)^2 / 4) for K_{2n}.
long k2n_lower_bound(long n);

}  // namespace z2embed

#endif
