#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace surfrig {

// Labeled simple undirected graph on vertices 0..n-1. Edges are stored
// normalized (u < v) and sorted, so operator== is labeled-graph equality.
struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int vertex_count() const { return n; }
    int edge_count() const { return static_cast<int>(edges.size()); }

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> neighbors(int v) const;

    bool operator==(const SimpleGraph& other) const = default;
};

// Validates endpoints, rejects loops and duplicates, normalizes and sorts.
SimpleGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Relabels vertices: vertex i becomes perm[i]. perm must be a bijection on 0..n-1.
SimpleGraph permute_graph(const SimpleGraph& g, const std::vector<int>& perm);

// Induced subgraph on the given vertices, compacted to labels 0..|S|-1
// (sorted order of S gives the new labels).
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& vertices);

std::vector<std::vector<int>> connected_components(const SimpleGraph& g);

bool is_complete(const SimpleGraph& g);

struct SparsityVerdict {
    bool sparse = false;
    bool tight = false;
    std::optional<std::vector<int>> witness;  // violating vertex set when not sparse
};

// (2,k)-sparsity decision by the pebble game, k in {0,1,2,3}.
// On rejection the witness is the reachable vertex set at the failed insertion.
SparsityVerdict is_sparse(const SimpleGraph& g, int k);

// Oracle form: enumerates all vertex subsets (requires |V| <= 14).
SparsityVerdict is_sparse_bruteforce(const SimpleGraph& g, int k);

// f(H) = 2|V(H)| - |E(H)| for the induced subgraph on vertex_set (nonempty).
int deficiency(const SimpleGraph& g, const std::vector<int>& vertex_set);

// Convenience builders used throughout the tests and the reducer.
SimpleGraph complete_graph(int n);
SimpleGraph k5_minus_e();    // K5 minus the edge {3,4}
SimpleGraph k4_join_k4();    // two copies of K4 sharing the edge {2,3}

std::string graph_key(const SimpleGraph& g);  // canonical string, for dedup

} // namespace surfrig
