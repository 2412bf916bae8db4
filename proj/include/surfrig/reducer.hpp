#pragma once

#include <cstdint>

#include "surfrig/moves.hpp"
#include "surfrig/rng.hpp"

namespace surfrig {

// Replayable record of moves from the base graph of the given k to a target
// labeled graph. Bases: K5 minus e (k=1), K1 (k=2), K2 (k=3).
struct Certificate {
    int k = 1;
    std::vector<int> base_relabel;       // permutation of the base labels
    std::vector<ConstructionStep> steps;

    int step_count() const;  // total steps including nested edge-join components
};

SimpleGraph base_graph(int k);
std::string base_name(int k);

// Constructive reduction per the inductive characterisations; input must be
// simple and (2,k)-tight, k in {1,2,3}.
Certificate reduce(const SimpleGraph& g, int k);

// Replays a certificate from its base, verifying that every intermediate
// graph is simple and (2,k)-tight.
SimpleGraph replay(const Certificate& cert);

struct Generated {
    SimpleGraph graph;
    Certificate certificate;
};

// Random (2,k)-tight graph on exactly n_target vertices, built forward from
// the base by admissible moves. Deterministic given seed.
Generated generate(int n_target, int k, uint64_t seed);

} // namespace surfrig
