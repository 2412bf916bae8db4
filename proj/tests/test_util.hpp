#pragma once

#include "surfrig/graph.hpp"
#include "surfrig/rng.hpp"

// Erdős–Rényi-style sample; edge probability percent/100.
inline surfrig::SimpleGraph random_graph(surfrig::Rng& rng, int n, int percent) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng.below(100)) < percent) edges.emplace_back(u, v);
    return surfrig::make_graph(n, edges);
}
