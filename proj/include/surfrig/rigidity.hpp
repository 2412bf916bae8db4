#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "surfrig/graph.hpp"
#include "surfrig/linalg.hpp"
#include "surfrig/surface.hpp"

namespace surfrig {

// Graph placed on a surface with exact coordinates.
struct Framework {
    SimpleGraph graph;
    Surface surface;
    std::vector<Vec3Q> placement;
};

// (|E|+|V|) x 3|V| with edge rows (canonical edge order) first, then one
// normal row per vertex in label order.
struct RigidityMatrix {
    QMatrix m;
    int edge_rows = 0;
    int vertex_rows = 0;
};

RigidityMatrix build_matrix(const Framework& f);

struct RigidityReport {
    int rank = 0;
    int nullity = 0;
    int rows = 0;
    bool independent = false;
    bool isostatic = false;
    std::string strength;   // "certified" | "evidence"
    std::string basis;      // "rank_test" | "enumeration"
    int k = -1;
    int flex_dim_internal = 0;
    int trials_used = 0;
    uint64_t seed = 0;
    // Nullspace of the best (max-rank) trial, for flex inspection.
    std::vector<std::vector<Rat>> nullspace;
};

// Samples up to `trials` placements and reports the maximum rank observed;
// stops early at full row rank (which certifies generic independence).
RigidityReport analyze(const SimpleGraph& g, const Surface& s, int trials, uint64_t seed);

// Single placement supplied by the caller (exact path).
RigidityReport analyze_placement(const SimpleGraph& g, const Surface& s,
                                 const std::vector<Vec3Q>& placement);

// Float path for non-rational placements; verdicts are evidence only.
RigidityReport analyze_placement_float(const SimpleGraph& g, const Surface& s,
                                       const std::vector<std::array<double, 3>>& placement,
                                       double tol_factor = 1.0);

// Freedom number k: minimum nullity of complete-graph rigidity matrices over
// n in {4,5,6} with `trials` random placements each. Converges to the true
// type from above.
int compute_type(const Surface& s, int trials, uint64_t seed);

struct MaxwellResult {
    bool tight = false;
    std::optional<std::vector<int>> witness;
};

// Necessity gate of the counting condition: true iff g is (2,k)-tight.
MaxwellResult maxwell_check(const SimpleGraph& g, int k);

// Exact flex-equation check: edge rows (p_u - p_v).(u_u - u_v) = 0 and
// normal rows u_v.N(p_v) = 0 for one nullspace vector.
bool verify_flex(const Framework& f, const std::vector<Rat>& flex);

} // namespace surfrig
