#include "surfrig/rigidity.hpp"

#include <stdexcept>

namespace surfrig {

RigidityMatrix build_matrix(const Framework& f) {
    const SimpleGraph& g = f.graph;
    if (static_cast<int>(f.placement.size()) != g.n)
        throw std::invalid_argument("build_matrix: placement size mismatch");
    for (int v = 0; v < g.n; ++v)
        if (f.surface.poly.eval(f.placement[v]) != 0)
            throw std::invalid_argument("build_matrix: point off surface");
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (f.placement[u] == f.placement[v])
                throw std::invalid_argument("build_matrix: coincident points");

    RigidityMatrix out;
    out.edge_rows = g.edge_count();
    out.vertex_rows = g.n;
    out.m = QMatrix(out.edge_rows + out.vertex_rows, 3 * g.n);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edges[e];
        Vec3Q d = sub(f.placement[u], f.placement[v]);
        for (int axis = 0; axis < 3; ++axis) {
            out.m.at(e, 3 * u + axis) = d[axis];
            out.m.at(e, 3 * v + axis) = -d[axis];
        }
    }
    for (int v = 0; v < g.n; ++v) {
        Vec3Q nv = normal(f.surface, f.placement[v]);
        for (int axis = 0; axis < 3; ++axis) out.m.at(out.edge_rows + v, 3 * v + axis) = nv[axis];
    }
    return out;
}

namespace {

// Isostatic small complete graphs by the characterisation theorems:
// type 3 admits K1, K2; type 2 admits K1..K3; type 1 admits K1..K4. The
// (2,k)-tight members of each list are already covered by the rank test.
bool small_complete_isostatic(int n, int k) {
    switch (k) {
        case 3: return n <= 2;
        case 2: return n <= 3;
        case 1: return n <= 4;
        default: return false;
    }
}

RigidityReport finish_report(const SimpleGraph& g, int k, int rank, int rows,
                             std::vector<std::vector<Rat>> nullspace, bool exact) {
    RigidityReport rep;
    rep.rank = rank;
    rep.rows = rows;
    rep.nullity = 3 * g.n - rank;
    rep.k = k;
    rep.flex_dim_internal = rep.nullity - k;
    rep.independent = rank == rows;
    rep.strength = (rep.independent && exact) ? "certified" : "evidence";
    const bool full_rank_for_type = rank == 3 * g.n - k;
    const bool count_matches_type = 2 * g.n - g.edge_count() == k;
    if (full_rank_for_type && count_matches_type) {
        rep.isostatic = true;
        rep.basis = "rank_test";
    } else if (is_complete(g) && g.n <= 4 && small_complete_isostatic(g.n, k) && rep.independent) {
        rep.isostatic = true;
        rep.basis = "enumeration";
    } else {
        rep.isostatic = false;
        rep.basis = "rank_test";
    }
    rep.nullspace = std::move(nullspace);
    return rep;
}

void check_rank_bound(const SimpleGraph& g, int k, int rank) {
    // The k tangential isometries give k independent flexes at every
    // placement, except on a type-3 surface evaluated at a single point.
    if (g.n == 1 && k == 3) return;
    if (rank > 3 * g.n - k)
        throw std::logic_error("analyze: rank exceeds 3|V|-k; the declared surface type is wrong");
}

} // namespace

RigidityReport analyze(const SimpleGraph& g, const Surface& s, int trials, uint64_t seed) {
    if (g.n < 1) throw std::invalid_argument("analyze: graph must have at least one vertex");
    if (s.declared_type < 0)
        throw std::invalid_argument("analyze: surface type unknown; run compute_type first");
    if (!s.has_sampler)
        throw std::invalid_argument("analyze: surface has no sampler; supply a placement");
    if (trials < 1) throw std::invalid_argument("analyze: trials must be positive");

    const int k = s.declared_type;
    const int rows = g.edge_count() + g.n;
    int best_rank = -1;
    std::vector<std::vector<Rat>> best_nullspace;
    int used = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(t));
        Framework f{g, s, sample_placement(s, g.n, rng)};
        RigidityMatrix matrix = build_matrix(f);
        RankResult rr = rank_exact(matrix.m);
        ++used;
        check_rank_bound(g, k, rr.rank);
        if (rr.rank > best_rank) {
            best_rank = rr.rank;
            best_nullspace = std::move(rr.nullspace);
        }
        if (best_rank == rows) break;  // full row rank certifies independence
    }
    RigidityReport rep = finish_report(g, k, best_rank, rows, std::move(best_nullspace), true);
    rep.trials_used = used;
    rep.seed = seed;
    return rep;
}

RigidityReport analyze_placement(const SimpleGraph& g, const Surface& s,
                                 const std::vector<Vec3Q>& placement) {
    if (s.declared_type < 0)
        throw std::invalid_argument("analyze: surface type unknown; run compute_type first");
    const int k = s.declared_type;
    Framework f{g, s, placement};
    RigidityMatrix matrix = build_matrix(f);
    RankResult rr = rank_exact(matrix.m);
    check_rank_bound(g, k, rr.rank);
    RigidityReport rep = finish_report(g, k, rr.rank, matrix.m.rows, std::move(rr.nullspace), true);
    rep.trials_used = 1;
    return rep;
}

RigidityReport analyze_placement_float(const SimpleGraph& g, const Surface& s,
                                       const std::vector<std::array<double, 3>>& placement,
                                       double tol_factor) {
    if (s.declared_type < 0)
        throw std::invalid_argument("analyze: surface type unknown; run compute_type first");
    if (static_cast<int>(placement.size()) != g.n)
        throw std::invalid_argument("analyze: placement size mismatch");
    const int k = s.declared_type;
    const int rows = g.edge_count() + g.n;
    const int cols = 3 * g.n;

    Polynomial3 dx = s.poly.derivative(0), dy = s.poly.derivative(1), dz = s.poly.derivative(2);
    auto eval_at = [](const Polynomial3& poly, const std::array<double, 3>& p) {
        double total = 0;
        for (const auto& [mono, coeff] : poly.terms()) {
            double term = coeff.get_d();
            for (int axis = 0; axis < 3; ++axis)
                for (int e = 0; e < mono[axis]; ++e) term *= p[axis];
            total += term;
        }
        return total;
    };

    std::vector<double> data(static_cast<size_t>(rows) * cols, 0.0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edges[e];
        for (int axis = 0; axis < 3; ++axis) {
            double d = placement[u][axis] - placement[v][axis];
            data[static_cast<size_t>(e) * cols + 3 * u + axis] = d;
            data[static_cast<size_t>(e) * cols + 3 * v + axis] = -d;
        }
    }
    for (int v = 0; v < g.n; ++v) {
        double grad[3] = {eval_at(dx, placement[v]), eval_at(dy, placement[v]),
                          eval_at(dz, placement[v])};
        for (int axis = 0; axis < 3; ++axis)
            data[static_cast<size_t>(g.edge_count() + v) * cols + 3 * v + axis] = grad[axis];
    }
    int rank = rank_float(data, rows, cols, tol_factor);
    RigidityReport rep = finish_report(g, k, rank, rows, {}, false);
    rep.trials_used = 1;
    return rep;
}

int compute_type(const Surface& s, int trials, uint64_t seed) {
    if (!s.has_sampler) throw std::invalid_argument("compute_type: surface has no sampler");
    if (trials < 1) throw std::invalid_argument("compute_type: trials must be positive");
    int best = -1;
    for (int n = 4; n <= 6; ++n) {
        SimpleGraph kn = complete_graph(n);
        for (int t = 0; t < trials; ++t) {
            Rng rng(seed + 1000003ULL * static_cast<uint64_t>(n) +
                    0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(t));
            Framework f{kn, s, sample_placement(s, n, rng)};
            RankResult rr = rank_exact(build_matrix(f).m);
            int nullity = 3 * n - rr.rank;
            if (best < 0 || nullity < best) best = nullity;
            if (best == 0) return 0;
        }
    }
    return best;
}

MaxwellResult maxwell_check(const SimpleGraph& g, int k) {
    SparsityVerdict verdict = is_sparse(g, k);
    MaxwellResult out;
    out.tight = verdict.tight;
    out.witness = verdict.witness;
    return out;
}

bool verify_flex(const Framework& f, const std::vector<Rat>& flex) {
    const SimpleGraph& g = f.graph;
    if (static_cast<int>(flex.size()) != 3 * g.n)
        throw std::invalid_argument("verify_flex: vector size mismatch");
    auto velocity = [&](int v) -> Vec3Q { return {flex[3 * v], flex[3 * v + 1], flex[3 * v + 2]}; };
    for (const auto& [u, v] : g.edges) {
        Vec3Q d = sub(f.placement[u], f.placement[v]);
        if (dot(d, sub(velocity(u), velocity(v))) != 0) return false;
    }
    for (int v = 0; v < g.n; ++v)
        if (dot(velocity(v), normal(f.surface, f.placement[v])) != 0) return false;
    return true;
}

} // namespace surfrig
