#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfrig/graph.hpp"

namespace surfrig {

enum class MoveKind { Henneberg1, Henneberg2, VertexToK4, VertexTo4Cycle, VertexSplit, EdgeJoin };

std::string move_kind_name(MoveKind kind);
MoveKind move_kind_from_name(const std::string& name);

struct SubCertificate;

// One replayable construction move, recorded in forward orientation against
// the labels of its pre-graph. `relabel` (size = post-move vertex count) maps
// the canonical result labels onto the final labels; empty means identity.
struct ConstructionStep {
    MoveKind kind = MoveKind::Henneberg1;
    int a = -1;  // H1/H2: v1; VertexToK4: v; VertexTo4Cycle: v1; VertexSplit: v; EdgeJoin: g
    int b = -1;  // H1/H2: v2; VertexTo4Cycle: v2; VertexSplit: u; EdgeJoin: h
    int c = -1;  // H2: v3; VertexTo4Cycle: v3
    std::vector<std::pair<int, int>> assignment;   // VertexToK4: (neighbor, corner 0..3)
    std::vector<int> moved;                        // VertexTo4Cycle / VertexSplit: edges moved to the new vertex
    std::shared_ptr<SubCertificate> component;     // EdgeJoin: construction of the joined component
    std::vector<int> relabel;
};

// Construction of one graph from the base: permute the base by base_relabel,
// then apply the steps in order.
struct SubCertificate {
    std::vector<int> base_relabel;
    std::vector<ConstructionStep> steps;
};

struct MoveResult {
    SimpleGraph graph;
    ConstructionStep step;
};

// Forward moves. Each returns the canonical result (new vertices take the
// next free labels) plus the recorded step with identity relabel.

// Add a degree-2 vertex adjacent to v1, v2.
MoveResult henneberg1(const SimpleGraph& g, int v1, int v2);

// Remove edge v1v2, add a degree-3 vertex adjacent to v1, v2, v3.
MoveResult henneberg2(const SimpleGraph& g, int v1, int v2, int v3);

// Replace vertex v by a K4 copy; each incident edge reattaches to the corner
// named by `assignment` (corner 0 keeps label v, corners 1..3 are new).
// The assignment must cover every neighbor of v exactly once.
MoveResult vertex_to_k4(const SimpleGraph& g, int v,
                        const std::vector<std::pair<int, int>>& assignment);

// Split v1: new vertex v0 duplicates the edges v1v2 and v1v3; the other edges
// of v1 listed in `moved` reattach to v0. No v0v1 edge is created.
MoveResult vertex_to_4cycle(const SimpleGraph& g, int v1, int v2, int v3,
                            const std::vector<int>& moved);

// Vertex splitting along uv: v becomes the triangle {v, v2_new, u}; the other
// edges of v listed in `moved` reattach to the new vertex.
MoveResult vertex_split(const SimpleGraph& g, int v, int u, const std::vector<int>& moved);

// Disjoint union (h shifted by g.n) plus the bridge {gv, hv + g.n}.
MoveResult edge_join(const SimpleGraph& g, const SimpleGraph& h, int gv, int hv);

// Applies a recorded step's primitive move (not EdgeJoin) and its relabel.
SimpleGraph apply_local_step(const SimpleGraph& g, const ConstructionStep& step);

// Inverse moves. try_* operations verify that the result is simple and
// (2,k)-tight before returning it.

// All degree-2 vertices with the compacted graph after deletion; candidates
// whose result is not (2,k)-tight are filtered out (none are when g is tight).
std::vector<std::pair<int, SimpleGraph>> inverse_henneberg1_candidates(const SimpleGraph& g, int k);

struct InverseH2 {
    SimpleGraph graph;            // compacted result
    std::pair<int, int> added;    // chosen edge, in g's labels
};

// Deletes the degree-3 vertex v and tries the absent neighbor pairs in
// lexicographic order; first (2,k)-tight result wins.
std::optional<InverseH2> try_inverse_henneberg2(const SimpleGraph& g, int v, int k);

// Contracts an induced K4 to its smallest vertex, keeping outside edges
// (deduplicated); returns the compacted graph iff it is (2,k)-tight.
std::optional<SimpleGraph> try_k4_contraction(const SimpleGraph& g,
                                              const std::array<int, 4>& quad, int k);

// Inverse vertex-to-4-cycle: {v,a,b,c} induce K4 with deg(v)=3, w outside has
// edges wa, wb and no edge vw. Returns none when wc is present (the five
// vertices then carry a K5 minus e copy); otherwise identifies v with w and
// returns the compacted graph iff (2,k)-tight.
std::optional<SimpleGraph> try_4cycle_contraction(const SimpleGraph& g, int v, int w,
                                                  int a, int b, int c, int k);

// Inverse vertex split: contracts edge xy when x and y have exactly one
// common neighbor; returns none otherwise or when the result is not tight.
std::optional<SimpleGraph> try_edge_contraction(const SimpleGraph& g, int x, int y, int k);

struct InverseEdgeJoin {
    std::pair<int, int> bridge;
    std::vector<int> component1;  // vertices, contains bridge.first
    std::vector<int> component2;
};

// First edge (canonical order) whose removal leaves exactly two components,
// each (2,1)-tight. Only defined for k = 1.
std::optional<InverseEdgeJoin> find_inverse_edge_join(const SimpleGraph& g, int k);

// All vertex quadruples inducing K4, each sorted, in lexicographic order.
std::vector<std::array<int, 4>> k4_subgraphs(const SimpleGraph& g);

// Deletes the listed vertices and compacts labels; kept[i] is the old label
// of new vertex i.
std::pair<SimpleGraph, std::vector<int>> delete_vertices(const SimpleGraph& g,
                                                         const std::vector<int>& removed);

} // namespace surfrig
