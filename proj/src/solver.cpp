#include "z2embed/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace z2embed {

std::string to_string(Answer a) {
    switch (a) {
        case Answer::yes: return "YES";
        case Answer::no: return "NO";
        case Answer::unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

namespace {

using Mask = std::uint32_t;
constexpr std::size_t max_dimension = 24;

enum class Form { hyperbolic, identity };

bool form_value(Form form, Mask a, Mask b) {
    if (form == Form::hyperbolic) {
        // Swap the two coordinates of every hyperbolic block.
        const Mask even = b & 0x55555555u, odd = b & 0xAAAAAAAAu;
        b = (even << 1) | (odd >> 1);
    }
    return std::popcount(a & b) & 1;
}

// Edges ordered so that each prefix is the edge set induced by a growing vertex set;
// independent pairs then get fixed as early as possible.
std::vector<EdgeId> search_order(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> position(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        std::size_t best_links = 0, best_degree = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v]) continue;
            std::size_t links = 0;
            for (EdgeId e : g.incident(v)) {
                const Edge& ed = g.edge(e);
                links += placed[ed.u == v ? ed.v : ed.u];
            }
            const std::size_t degree = g.incident(v).size();
            if (best == n || links > best_links || (links == best_links && degree > best_degree)) {
                best = v;
                best_links = links;
                best_degree = degree;
            }
        }
        placed[best] = true;
        position[best] = step;
    }
    std::vector<EdgeId> order(g.edge_count());
    for (EdgeId e = 0; e < order.size(); ++e) order[e] = e;
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        const Edge& x = g.edge(a);
        const Edge& y = g.edge(b);
        const auto kx = std::minmax(position[x.u], position[x.v]);
        const auto ky = std::minmax(position[y.u], position[y.v]);
        return std::make_pair(kx.second, kx.first) < std::make_pair(ky.second, ky.first);
    });
    return order;
}

class Search {
  public:
    Search(const Graph& g, std::size_t dim, Form form, const SolverBudget& budget)
        : g_(g), dim_(dim), form_(form), budget_(budget), order_(search_order(g)) {
        if (dim > max_dimension) throw InputError("solver: ribbon count above the supported maximum of 24");
        prepare_constraints();
        for (Mask y = 0; y < (Mask{1} << dim_); ++y) all_.push_back(y);
        if (form_ == Form::hyperbolic) {
            first_ = {0};
            if (dim_ > 0) first_.push_back(1);
        } else {
            for (std::size_t k = 0; k <= dim_; ++k) first_.push_back((Mask{1} << k) - 1);
        }
    }

    SolveResult run() {
        start_ = std::chrono::steady_clock::now();
        SolveResult result;
        if (order_.empty()) {
            found_ = std::vector<Mask>();
        } else if (budget_.threads <= 1) {
            State st(*this);
            dfs(st, 0);
            nodes_.fetch_add(st.local_nodes % 1024);
        } else {
            run_parallel();
            result.parallel = true;
        }
        result.nodes = nodes_.load();
        if (found_) {
            result.answer = Answer::yes;
        } else {
            result.answer = exhausted_.load() ? Answer::unknown : Answer::no;
            result.parallel = false;
        }
        return result;
    }

    /// Column e of the found Y, by original edge id.
    BitMatrix found_matrix() const {
        BitMatrix y(dim_, g_.edge_count());
        for (std::size_t s = 0; s < order_.size(); ++s)
            for (std::size_t k = 0; k < dim_; ++k)
                if (((*found_)[s] >> k) & 1u) y.set(k, order_[s]);
        return y;
    }

  private:
    struct NewPair {
        std::size_t step;   // step of the other edge
        std::size_t coord;  // coordinate in search order
    };

    struct State {
        explicit State(const Search& s) : values(s.coord_count_), ys(s.order_.size(), 0) {}
        BitVector values;
        std::vector<Mask> ys;
        std::size_t local_nodes = 0;
    };

    void prepare_constraints() {
        const PairIndex pairs(g_);
        std::vector<std::size_t> step_of(g_.edge_count());
        for (std::size_t s = 0; s < order_.size(); ++s) step_of[order_[s]] = s;
        // Coordinates sorted by the step at which both edges are known.
        std::vector<std::size_t> by_coord(pairs.size());
        for (std::size_t k = 0; k < pairs.size(); ++k) by_coord[k] = k;
        auto key = [&](std::size_t k) {
            const auto a = step_of[pairs[k].i], b = step_of[pairs[k].j];
            return std::make_pair(std::max(a, b), std::min(a, b));
        };
        std::sort(by_coord.begin(), by_coord.end(), [&](std::size_t x, std::size_t y) { return key(x) < key(y); });
        coord_count_ = pairs.size();
        std::vector<std::size_t> coord_of(pairs.size());
        std::vector<std::size_t> step_of_coord(pairs.size());
        new_pairs_.assign(order_.size(), {});
        for (std::size_t c = 0; c < by_coord.size(); ++c) {
            coord_of[by_coord[c]] = c;
            const auto [late, early] = key(by_coord[c]);
            step_of_coord[c] = late;
            new_pairs_[late].push_back({early, c});
        }
        const CompatibilityClass cls(g_);
        auto reindex = [&](const BitVector& v) {
            BitVector out(pairs.size());
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (v.get(k)) out.set(coord_of[k]);
            return out;
        };
        std::vector<BitVector> gens;
        for (const auto& gen : cls.generators()) gens.push_back(reindex(gen));
        const BitVector base = reindex(cls.base());
        rows_at_step_.assign(order_.size(), {});
        for (auto& row : SpanSolver(pairs.size(), gens).annihilator()) {
            const std::size_t step = step_of_coord[row.last_set()];
            const bool rhs = row.dot(base);
            rows_at_step_[step].push_back({std::move(row), rhs});
        }
    }

    bool out_of_budget(State& st) {
        if (++st.local_nodes % 1024 != 0) return exhausted_.load(std::memory_order_relaxed);
        const std::size_t total = nodes_.fetch_add(1024) + 1024;
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        if (total > budget_.max_nodes || elapsed > budget_.time_cap_seconds) exhausted_.store(true);
        return exhausted_.load(std::memory_order_relaxed);
    }

    // Assigns y to step s; returns false when a constraint closing at s fails.
    bool assign(State& st, std::size_t s, Mask y) const {
        st.ys[s] = y;
        for (const auto& np : new_pairs_[s]) st.values.set(np.coord, form_value(form_, y, st.ys[np.step]));
        for (const auto& [row, rhs] : rows_at_step_[s])
            if (row.dot(st.values) != rhs) return false;
        return true;
    }

    bool stop() const { return done_.load(std::memory_order_relaxed) || exhausted_.load(std::memory_order_relaxed); }

    void dfs(State& st, std::size_t s) {
        if (stop()) return;
        if (s == order_.size()) {
            record(st.ys);
            return;
        }
        const auto& candidates = s == 0 ? first_ : all_;
        for (Mask y : candidates) {
            if (out_of_budget(st) || stop()) return;
            if (assign(st, s, y)) dfs(st, s + 1);
        }
    }

    void record(const std::vector<Mask>& ys) {
        std::lock_guard<std::mutex> lock(mutex_);
        if (!found_) found_ = ys;
        done_.store(true);
    }

    void run_parallel() {
        // Frontier of consistent prefixes, expanded breadth-first until it is wide enough.
        std::vector<std::vector<Mask>> frontier{{}};
        std::size_t depth = 0;
        const std::size_t want = 8 * static_cast<std::size_t>(budget_.threads);
        while (depth < order_.size() && frontier.size() < want && !frontier.empty()) {
            std::vector<std::vector<Mask>> next;
            for (const auto& prefix : frontier) {
                State st(*this);
                bool ok = true;
                for (std::size_t s = 0; s < prefix.size() && ok; ++s) ok = assign(st, s, prefix[s]);
                const auto& candidates = depth == 0 ? first_ : all_;
                for (Mask y : candidates) {
                    nodes_.fetch_add(1);
                    if (assign(st, depth, y)) {
                        auto p = prefix;
                        p.push_back(y);
                        next.push_back(std::move(p));
                    }
                }
            }
            frontier = std::move(next);
            ++depth;
        }
        if (depth == order_.size()) {
            if (!frontier.empty()) record(frontier.front());
            return;
        }
        std::atomic<std::size_t> next_task{0};
        auto worker = [&] {
            State st(*this);
            for (std::size_t t; !stop() && (t = next_task.fetch_add(1)) < frontier.size();) {
                for (std::size_t s = 0; s < depth; ++s) assign(st, s, frontier[t][s]);
                dfs(st, depth);
            }
            nodes_.fetch_add(st.local_nodes % 1024);
        };
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < budget_.threads; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    const Graph& g_;
    std::size_t dim_;
    Form form_;
    SolverBudget budget_;
    std::vector<EdgeId> order_;
    std::size_t coord_count_ = 0;
    std::vector<std::vector<NewPair>> new_pairs_;
    std::vector<std::vector<std::pair<BitVector, bool>>> rows_at_step_;
    std::vector<Mask> all_;
    std::vector<Mask> first_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::size_t> nodes_{0};
    std::atomic<bool> exhausted_{false};
    std::atomic<bool> done_{false};
    std::mutex mutex_;
    std::optional<std::vector<Mask>> found_;
};

BitMatrix form_matrix(const SurfaceSpec& s) {
    return s.kind == SurfaceKind::orientable ? hyperbolic_matrix_gf2(s.parameter)
                                             : BitMatrix::identity(s.parameter);
}

Witness build_witness(const Graph& g, const SurfaceSpec& surface, const BitMatrix& y,
                      const SolverBudget& budget) {
    BitMatrix a = y.transposed() * form_matrix(surface) * y;
    if (surface.kind == SurfaceKind::nonorientable && a.rows() > 0 && !a.symmetry_class().is_odd) {
        a.set(0, 0);
    }
    if (rank_gf2(a) > surface.ribbon_count()) {
        throw std::logic_error("solver: witness matrix exceeds the rank bound");
    }
    PlanarDrawing f = realize_parity(g, ParityMatrix{a});
    SurfaceDrawing sd = construct_z2_embedding(g, f, y, surface);
    SurfaceReport report = verify_z2(sd);
    if (!report.is_embedding) throw std::logic_error("solver: witness fails the combinatorial verifier");
    std::optional<SurfaceReport> geometric;
    if (budget.geometric_check) {
        geometric = verify_geometric(sd, CountMode::z2);
        if (!geometric->is_embedding) throw std::logic_error("solver: witness fails the geometric verifier");
    }
    return Witness{surface, std::move(a), y, std::move(f), std::move(sd), std::move(report), std::move(geometric)};
}

SolveResult solve(const Graph& g, const SurfaceSpec& surface, const SolverBudget& budget) {
    const Form form = surface.kind == SurfaceKind::orientable ? Form::hyperbolic : Form::identity;
    Search search(g, surface.ribbon_count(), form, budget);
    SolveResult result = search.run();
    if (result.answer == Answer::yes) result.witness = build_witness(g, surface, search.found_matrix(), budget);
    return result;
}

}  // namespace

SolveResult z2_embeddable_orientable(const Graph& g, std::size_t genus, const SolverBudget& budget) {
    return solve(g, SurfaceSpec::orientable(genus), budget);
}

SolveResult z2_embeddable_nonorientable(const Graph& g, std::size_t m, const SolverBudget& budget) {
    return solve(g, SurfaceSpec::nonorientable(m), budget);
}

SolveResult z2_embeddable_euler(const Graph& g, long euler, const SolverBudget& budget) {
    if (euler > 2) throw InputError("solver: Euler characteristic must be at most 2");
    const std::size_t rank = static_cast<std::size_t>(2 - euler);
    SolveResult even = z2_embeddable_orientable(g, rank / 2, budget);
    if (even.answer == Answer::yes || rank == 0) return even;
    SolveResult odd = z2_embeddable_nonorientable(g, rank, budget);
    odd.nodes += even.nodes;
    if (odd.answer == Answer::no && even.answer == Answer::unknown) odd.answer = Answer::unknown;
    return odd;
}

GenusResult z2_genus(const Graph& g, SurfaceKind kind, std::size_t max, const SolverBudget& budget) {
    GenusResult out;
    const std::size_t first = kind == SurfaceKind::orientable ? 0 : 1;
    for (std::size_t p = first; p <= max; ++p) {
        SolveResult r = kind == SurfaceKind::orientable ? z2_embeddable_orientable(g, p, budget)
                                                        : z2_embeddable_nonorientable(g, p, budget);
        if (r.answer == Answer::yes) {
            out.answer = Answer::yes;
            out.value = p;
            out.witness = std::move(r.witness);
            return out;
        }
        if (r.answer == Answer::unknown) {
            out.answer = Answer::unknown;
            return out;
        }
    }
    out.answer = Answer::no;
    return out;
}

namespace {

long ceil_div(long num, long den) {
    long q = num / den;
    if (num % den != 0 && ((num < 0) == (den < 0))) ++q;
    return q;
}

}  // namespace

long kmn_lower_bound(long m, long n) {
    if (m < 1 || n < 1) throw InputError("bound: m and n must be positive");
    // K_{m,n} with a side of size at most 2 is planar; the formula is not a bound there.
    if (m <= 2 || n <= 2) return 0;
    // (m-2)(n-2)/4 - (m-3)/2 = ((m-2)(n-2) - 2(m-3)) / 4
    return std::max(0L, ceil_div((m - 2) * (n - 2) - 2 * (m - 3), 4));
}

long k2n_lower_bound(long n) {
    if (n < 1) throw InputError("bound: n must be positive");
    return ceil_div((n - 3) * (n - 3), 4);
}

}  // namespace z2embed
