// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"
#include "z2embed/geometry.hpp"
#include "z2embed/solver.hpp"

using namespace z2embed;
using namespace z2embed::testing;

namespace {

// Pinned limits (seconds).
constexpr double even_limit = 10.0;
constexpr double odd_limit = 10.0;
constexpr double alternating_limit = 30.0;
constexpr double genus_limit = 300.0;
constexpr double integer_round_trip_limit = 60.0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// GF(2) rank on columns packed into 64-bit words (n <= 64), independent of the library.
std::size_t rank_packed(std::vector<std::uint64_t> rows) {
    std::size_t rank = 0;
    for (int bit = 63; bit >= 0; --bit) {
        const std::uint64_t mask = std::uint64_t{1} << bit;
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot] & mask)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

std::size_t rank_oracle(const BitMatrix& a) {
    std::vector<std::uint64_t> rows(a.rows(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.get(r, c)) rows[r] |= std::uint64_t{1} << c;
    return rank_packed(rows);
}

// Rank over Q by plain Gaussian elimination on exact rationals.
std::size_t rank_rational(const IntMatrix& a) {
    std::vector<std::vector<mpq_class>> m(a.rows(), std::vector<mpq_class>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t p = rank;
        while (p < a.rows() && m[p][c] == 0) ++p;
        if (p == a.rows()) continue;
        std::swap(m[rank], m[p]);
        for (std::size_t r = rank + 1; r < a.rows(); ++r) {
            if (m[r][c] == 0) continue;
            const mpq_class f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < a.cols(); ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

bool even_matrix(const BitMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (a.get(i, i)) return false;
    return true;
}

std::string fmt(double v) {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(2);
    s << v;
    return s.str();
}

Outcome even_factorization() {
    std::mt19937_64 rng(101);
    const auto start = Clock::now();
    std::size_t failures = 0;
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + rng() % 40;
        const std::size_t g = rng() % 13;
        const BitMatrix h = hyperbolic_matrix_gf2(g);
        const BitMatrix a = gram(random_bits(2 * g, n, rng), h);
        const BitMatrix y = factor_even(a);
        const bool ok = y.rows() == rank_oracle(a) && y.rows() % 2 == 0 &&
                        gram(y, hyperbolic_matrix_gf2(y.rows() / 2)) == a;
        failures += !ok;
    }
    const double secs = seconds_since(start);
    return {failures == 0 && secs < even_limit,
            "500 instances, " + std::to_string(failures) + " failures, " + fmt(secs) + " s (limit " +
                fmt(even_limit) + " s)"};
}

Outcome odd_factorization() {
    std::mt19937_64 rng(202);
    const auto start = Clock::now();
    std::size_t failures = 0, done = 0;
    while (done < 500) {
        const std::size_t n = 1 + rng() % 40;
        const std::size_t m = 1 + rng() % 40;
        const BitMatrix a = gram(random_bits(m, n, rng), BitMatrix::identity(m));
        if (even_matrix(a)) continue;
        ++done;
        const BitMatrix y = factor_odd(a);
        failures += !(y.rows() == rank_oracle(a) && gram(y, BitMatrix::identity(y.rows())) == a);
    }
    const double secs = seconds_since(start);
    return {failures == 0 && secs < odd_limit,
            "500 instances, " + std::to_string(failures) + " failures, " + fmt(secs) + " s (limit " +
                fmt(odd_limit) + " s)"};
}

Outcome alternating_factorization() {
    std::mt19937_64 rng(303);
    const auto start = Clock::now();
    std::size_t failures = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 12;
        const std::size_t g = 1 + rng() % 6;
        const IntMatrix b = random_ints(2 * g, n, -5, 5, rng);
        const IntMatrix a = b.transposed() * symplectic_matrix_int(g) * b;
        const IntMatrix f = factor_alternating(a);
        const std::size_t r = rank_q(a);
        const bool ok = f.transposed() * symplectic_matrix_int(f.rows() / 2) * f == a && r % 2 == 0 &&
                        r == rank_rational(a) && f.rows() == r;
        failures += !ok;
    }
    const double secs = seconds_since(start);
    return {failures == 0 && secs < alternating_limit,
            "200 instances, " + std::to_string(failures) + " failures, " + fmt(secs) + " s (limit " +
                fmt(alternating_limit) + " s)"};
}

Outcome gram_rank_bounds() {
    std::mt19937_64 rng(404);
    std::size_t gram_violations = 0, even_violations = 0, even_seen = 0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t m = 1 + rng() % 12;
        const std::size_t n = 1 + rng() % 30;
        // Random symmetric form on GF(2)^m.
        BitMatrix form(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j)
                if (rng() & 1) form.set(i, j), form.set(j, i);
        gram_violations += rank_oracle(gram(random_bits(m, n, rng), form)) > m;
    }
    for (int t = 0; t < 1000; ++t) {
        const std::size_t m = 1 + rng() % 12;
        const std::size_t n = 1 + rng() % 30;
        BitMatrix y = random_bits(m, n, rng);
        // Force even column weights so that Y^T Y is even.
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t w = 0;
            for (std::size_t r = 0; r < m; ++r) w += y.get(r, c);
            if (w % 2) y.flip(rng() % m, c);
        }
        const BitMatrix a = gram(y, BitMatrix::identity(m));
        if (!even_matrix(a)) {
            ++even_violations;
            continue;
        }
        ++even_seen;
        even_violations += rank_oracle(a) > m - 1;
    }
    return {gram_violations == 0 && even_violations == 0,
            "1000 Gram instances, " + std::to_string(gram_violations) + " violations; " +
                std::to_string(even_seen) + " even Y^T Y instances, " + std::to_string(even_violations) +
                " violations"};
}

Outcome planarity_negatives() {
    auto zero_ok = [](const Graph& g) {
        return is_compatible_mod2(g, ParityMatrix{BitMatrix(g.edge_count(), g.edge_count())}).has_value();
    };
    const bool k5 = !zero_ok(complete_graph(5));
    const bool k33 = !zero_ok(complete_bipartite(3, 3));
    std::size_t planar = 0, planar_rejected = 0, nonplanar = 0, nonplanar_accepted = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const Graph& g : graphs_up_to_isomorphism(n)) {
            const bool ok = zero_ok(g);
            if (planar_small(g)) {
                ++planar;
                planar_rejected += !ok;
            } else {
                ++nonplanar;
                nonplanar_accepted += ok;
            }
        }
    }
    return {k5 && k33 && planar_rejected == 0 && nonplanar_accepted == 0,
            std::string("K5 ") + (k5 ? "rejected" : "ACCEPTED") + ", K3,3 " + (k33 ? "rejected" : "ACCEPTED") +
                "; " + std::to_string(planar) + " planar classes on <= 6 vertices, " +
                std::to_string(planar_rejected) + " rejected; " + std::to_string(nonplanar) +
                " nonplanar, " + std::to_string(nonplanar_accepted) + " accepted"};
}

Outcome realizability_closure() {
    std::mt19937_64 rng(606);
    std::size_t outside = 0, flip_mismatch = 0, drawings = 0;
    for (const Graph& g : {complete_graph(5), complete_bipartite(3, 3), complete_graph(4)}) {
        const CompatibilityClass cls(g);
        const auto moves = cls.moves();
        for (int t = 0; t < 100; ++t) {
            std::vector<Vertex> order(g.vertex_count());
            std::iota(order.begin(), order.end(), Vertex{0});
            std::shuffle(order.begin(), order.end(), rng);
            const PlanarDrawing convex = convex_drawing(g, order);
            std::vector<FingerMove> chosen;
            BitVector expected = crossing_parity_matrix(convex).on_pairs(cls.pairs());
            for (std::size_t k = 0; k < moves.size(); ++k) {
                if (rng() % 4 != 0) continue;
                chosen.push_back(moves[k]);
                expected ^= cls.generators()[k];
            }
            const PlanarDrawing d = t % 5 == 4 ? random_drawing(g, rng, 2) : apply_finger_moves(convex, chosen);
            const BitVector parity = crossing_parity_matrix(d).on_pairs(cls.pairs());
            if (t % 5 != 4) flip_mismatch += parity != expected;
            outside += !cls.certificate(parity).has_value();
            ++drawings;
        }
    }
    std::size_t round_trip_failures = 0;
    const std::vector<Graph> graphs{complete_graph(5), complete_bipartite(3, 3), complete_graph(4),
                                    complete_bipartite(3, 4)};
    for (int t = 0; t < 50; ++t) {
        const Graph& g = graphs[t % graphs.size()];
        const CompatibilityClass cls(g);
        BitVector target = cls.base();
        for (const auto& gen : cls.generators())
            if (rng() & 1) target ^= gen;
        const ParityMatrix m = ParityMatrix::from_pairs(target, cls.pairs(), g.edge_count());
        const PlanarDrawing d = realize_parity(g, m);
        round_trip_failures += crossing_parity_matrix(d).on_pairs(cls.pairs()) != target;
    }
    return {outside == 0 && flip_mismatch == 0 && round_trip_failures == 0,
            std::to_string(drawings) + " drawings, " + std::to_string(outside) + " outside the class, " +
                std::to_string(flip_mismatch) + " finger-move flip mismatches; 50 realizations, " +
                std::to_string(round_trip_failures) + " mismatches"};
}

struct GenusCase {
    std::string name;
    Graph graph;
    SurfaceKind kind;
    std::size_t expected;
    long bound;  // -1 when no bound applies
};

std::vector<GenusCase> genus_cases() {
    return {
        {"K4 orientable", complete_graph(4), SurfaceKind::orientable, 0, -1},
        {"K5 orientable", complete_graph(5), SurfaceKind::orientable, 1, -1},
        {"K3,3 orientable", complete_bipartite(3, 3), SurfaceKind::orientable, 1, kmn_lower_bound(3, 3)},
        {"K3,4 orientable", complete_bipartite(3, 4), SurfaceKind::orientable, 1, kmn_lower_bound(3, 4)},
        {"K4,4 orientable", complete_bipartite(4, 4), SurfaceKind::orientable, 1, kmn_lower_bound(4, 4)},
        {"K5 nonorientable", complete_graph(5), SurfaceKind::nonorientable, 1, -1},
        {"K3,3 nonorientable", complete_bipartite(3, 3), SurfaceKind::nonorientable, 1, -1},
    };
}

std::vector<std::pair<GenusCase, GenusResult>> genus_results;

Outcome genus_table() {
    const auto start = Clock::now();
    SolverBudget budget;
    budget.threads = 1;
    std::string detail;
    bool pass = true;
    for (const auto& c : genus_cases()) {
        GenusResult r = z2_genus(c.graph, c.kind, 3, budget);
        bool ok = r.answer == Answer::yes && r.value && *r.value == c.expected && r.witness;
        if (ok && c.bound >= 0) ok = static_cast<long>(*r.value) >= c.bound;
        if (ok) {
            const SurfaceDrawing& sd = r.witness->surface_drawing;
            ok = verify_z2(sd).is_embedding && verify_geometric(sd, CountMode::z2).is_embedding;
        }
        pass = pass && ok;
        detail += (detail.empty() ? "" : ", ") + c.name + " = " +
                  (r.value ? std::to_string(*r.value) : to_string(r.answer)) + (ok ? "" : " (FAILED)");
        genus_results.emplace_back(c, std::move(r));
    }
    const double secs = seconds_since(start);
    return {pass && secs < genus_limit, detail + "; " + fmt(secs) + " s (limit " + fmt(genus_limit) + " s)"};
}

Outcome bounds_table() {
    const bool ok = kmn_lower_bound(3, 3) == 1 && kmn_lower_bound(4, 4) == 1 && kmn_lower_bound(5, 5) == 2 &&
                    kmn_lower_bound(6, 6) == 3 && k2n_lower_bound(3) == 0 && k2n_lower_bound(4) == 1;
    return {ok, "K(3,3)=" + std::to_string(kmn_lower_bound(3, 3)) + " K(4,4)=" +
                    std::to_string(kmn_lower_bound(4, 4)) + " K(5,5)=" + std::to_string(kmn_lower_bound(5, 5)) +
                    " K(6,6)=" + std::to_string(kmn_lower_bound(6, 6)) + " K6=" + std::to_string(k2n_lower_bound(3)) +
                    " K8=" + std::to_string(k2n_lower_bound(4))};
}

Outcome integer_round_trip() {
    std::mt19937_64 rng(909);
    const auto start = Clock::now();
    std::size_t failures = 0, max_rank = 0;
    for (int t = 0; t < 50; ++t) {
        const Graph g = t % 2 ? complete_graph(5) : complete_graph(4);
        const PlanarDrawing f = random_drawing(g, rng, 2);
        const IntMatrix a = signed_crossing_matrix(f);
        const IntMatrix b = factor_alternating(a);
        const std::size_t r = rank_q(a);
        max_rank = std::max(max_rank, r);
        const SurfaceDrawing sd = construct_z_embedding(g, f, b, SurfaceSpec::orientable(r / 2));
        const SurfaceReport z = verify_z(sd);
        const SurfaceReport geo = verify_geometric(sd, CountMode::z);
        bool ok = z.is_embedding && geo.is_embedding && z.pairs.size() == geo.pairs.size();
        for (std::size_t k = 0; ok && k < z.pairs.size(); ++k)
            ok = z.pairs[k].value == 0 && geo.pairs[k].value == 0;
        failures += !ok;
    }
    const double secs = seconds_since(start);
    return {failures == 0 && secs < integer_round_trip_limit,
            "50 instances (max rank " + std::to_string(max_rank) + "), " + std::to_string(failures) +
                " failures, " + fmt(secs) + " s (limit " + fmt(integer_round_trip_limit) + " s)"};
}

Outcome extraction_consistency() {
    if (genus_results.empty()) return {false, "no witnesses from the genus table"};
    std::size_t failures = 0;
    for (const auto& [c, r] : genus_results) {
        if (!r.witness) {
            ++failures;
            continue;
        }
        const SurfaceDrawing& sd = r.witness->surface_drawing;
        const Extraction ex = extract_matrix(sd, CountMode::z2);
        const Graph& g = sd.graph();
        const SurfaceSpec& s = sd.surface();
        const auto cls = ex.a_gf2.symmetry_class();
        bool ok = s.kind == SurfaceKind::orientable ? cls.is_even : cls.is_odd;
        ok = ok && rank_oracle(ex.a_gf2) <= s.ribbon_count();
        ok = ok && is_compatible_mod2(g, ParityMatrix{ex.a_gf2}).has_value();
        const PairIndex pairs(g);
        ok = ok && crossing_parity_matrix(ex.projected).on_pairs(pairs) == ParityMatrix{ex.a_gf2}.on_pairs(pairs);
        failures += !ok;
    }
    return {failures == 0, std::to_string(genus_results.size()) + " witnesses, " + std::to_string(failures) +
                               " failures"};
}

Graph random_core_graph(std::mt19937_64& rng) {
    switch (rng() % 4) {
        case 0: return complete_graph(5);
        case 1: return complete_bipartite(3, 3 + rng() % 3);
        default: {
            const std::size_t n = 5 + rng() % 3;
            std::vector<std::pair<Vertex, Vertex>> slots, edges;
            for (Vertex a = 0; a < n; ++a)
                for (Vertex b = a + 1; b < n; ++b) slots.emplace_back(a, b);
            std::shuffle(slots.begin(), slots.end(), rng);
            const std::size_t count = 4 + rng() % 12;
            edges.assign(slots.begin(), slots.begin() + std::min(count, slots.size()));
            return Graph(n, edges);
        }
    }
}

Outcome dual_verifier() {
    std::mt19937_64 rng(1111);
    std::size_t disagreements = 0, pairs = 0;
    for (int t = 0; t < 200; ++t) {
        const Graph g = random_core_graph(rng);
        const PlanarDrawing f = random_drawing(g, rng, 2);
        const bool orientable = rng() & 1;
        const SurfaceSpec s = orientable ? SurfaceSpec::orientable(rng() % 3) : SurfaceSpec::nonorientable(1 + rng() % 3);
        std::vector<std::vector<long>> passes(g.edge_count(), std::vector<long>(s.ribbon_count()));
        for (auto& row : passes)
            for (auto& x : row) x = static_cast<long>(rng() % 5) - 2;
        std::vector<EdgeId> order(g.edge_count());
        std::iota(order.begin(), order.end(), EdgeId{0});
        std::shuffle(order.begin(), order.end(), rng);
        const SurfaceDrawing sd(s, f, passes, order, default_attach(f));
        const SurfaceReport a = verify_z2(sd);
        const SurfaceReport b = verify_geometric(sd, CountMode::z2);
        if (a.pairs.size() != b.pairs.size()) {
            ++disagreements;
            continue;
        }
        for (std::size_t k = 0; k < a.pairs.size(); ++k) {
            ++pairs;
            disagreements += a.pairs[k].value != b.pairs[k].value;
        }
    }
    return {disagreements == 0, "200 surface drawings, " + std::to_string(pairs) + " independent pairs, " +
                                    std::to_string(disagreements) + " disagreements"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"even factorization", even_factorization},
        {"odd factorization", odd_factorization},
        {"alternating integer factorization", alternating_factorization},
        {"Gram and even-Gram rank bounds", gram_rank_bounds},
        {"K5 and K3,3 not compatible to zero, planar graphs are", planarity_negatives},
        {"realizability closure", realizability_closure},
        {"genus table", genus_table},
        {"lower-bound table", bounds_table},
        {"integer embedding round trip", integer_round_trip},
        {"extraction consistency of genus witnesses", extraction_consistency},
        {"dual-verifier equivalence", dual_verifier},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << k + 1 << ". " << criteria[k].first << ": " << o.detail
                  << std::endl;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed"))
              << std::endl;
    return failed ? 1 : 0;
}
