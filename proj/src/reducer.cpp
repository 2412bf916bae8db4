#include "surfrig/reducer.hpp"

#include <algorithm>
#include <stdexcept>

namespace surfrig {

SimpleGraph base_graph(int k) {
    switch (k) {
        case 1: return k5_minus_e();
        case 2: return make_graph(1, {});
        case 3: return make_graph(2, {{0, 1}});
        default: throw std::invalid_argument("base_graph: k must be 1, 2 or 3");
    }
}

std::string base_name(int k) {
    switch (k) {
        case 1: return "K5-e";
        case 2: return "K1";
        case 3: return "K2";
        default: throw std::invalid_argument("base_name: k must be 1, 2 or 3");
    }
}

int Certificate::step_count() const {
    int total = 0;
    std::vector<const std::vector<ConstructionStep>*> stack = {&steps};
    while (!stack.empty()) {
        const auto* list = stack.back();
        stack.pop_back();
        total += static_cast<int>(list->size());
        for (const auto& step : *list)
            if (step.component) stack.push_back(&step.component->steps);
    }
    return total;
}

namespace {

bool is_base(const SimpleGraph& g, int k) {
    switch (k) {
        case 1: return g.n == 5 && g.edge_count() == 9;  // tight 5-vertex graphs are K5 minus one edge
        case 2: return g.n == 1;
        case 3: return g.n == 2 && g.edge_count() == 1;
        default: return false;
    }
}

// Permutation taking the canonical base onto the bottom graph of a reduction.
std::vector<int> match_base(const SimpleGraph& g, int k) {
    if (k == 2) return {0};
    if (k == 3) return {0, 1};
    // k = 1: canonical base misses {3,4}; g misses exactly one pair {a,b}.
    int ma = -1, mb = -1;
    for (int u = 0; u < 5 && ma < 0; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (!g.has_edge(u, v)) {
                ma = u;
                mb = v;
                break;
            }
    if (ma < 0) throw std::logic_error("match_base: graph is complete, not K5 minus e");
    std::vector<int> relabel(5);
    relabel[3] = ma;
    relabel[4] = mb;
    std::vector<int> others;
    for (int v = 0; v < 5; ++v)
        if (v != ma && v != mb) others.push_back(v);
    for (int i = 0; i < 3; ++i) relabel[i] = others[i];
    return relabel;
}

// kept[i] = old label of compacted vertex i; returns the forward relabel that
// restores the old labels and sends the new canonical vertex to `new_vertex`.
std::vector<int> restore_relabel(const std::vector<int>& kept, int new_vertex) {
    std::vector<int> relabel(kept.begin(), kept.end());
    relabel.push_back(new_vertex);
    return relabel;
}

std::vector<int> rank_map(const std::vector<int>& kept, int n_old) {
    std::vector<int> rank(n_old, -1);
    for (size_t i = 0; i < kept.size(); ++i) rank[kept[i]] = static_cast<int>(i);
    return rank;
}

struct Reducer {
    int k;

    Certificate run(SimpleGraph g) {
        std::vector<ConstructionStep> backward;  // forward steps, discovery order
        while (true) {
            if (auto step = inverse_h1(g)) {
                backward.push_back(std::move(step->second));
                g = std::move(step->first);
                continue;
            }
            if (auto step = inverse_h2(g)) {
                backward.push_back(std::move(step->second));
                g = std::move(step->first);
                continue;
            }
            if (auto step = k4_contract(g)) {
                backward.push_back(std::move(step->second));
                g = std::move(step->first);
                continue;
            }
            if (auto step = cycle4_contract(g)) {
                backward.push_back(std::move(step->second));
                g = std::move(step->first);
                continue;
            }
            if (is_base(g, k)) {
                Certificate cert;
                cert.k = k;
                cert.base_relabel = match_base(g, k);
                cert.steps.assign(backward.rbegin(), backward.rend());
                return cert;
            }
            if (k == 1) {
                if (auto join = find_inverse_edge_join(g, 1)) {
                    Certificate cert = edge_join_split(g, *join);
                    cert.steps.insert(cert.steps.end(), backward.rbegin(), backward.rend());
                    return cert;
                }
            }
            throw std::logic_error(
                "reduce: no admissible inverse move found; this contradicts the inductive "
                "characterisation and indicates an implementation bug");
        }
    }

    std::optional<std::pair<SimpleGraph, ConstructionStep>> inverse_h1(const SimpleGraph& g) {
        for (int v = 0; v < g.n; ++v) {
            if (g.degree(v) != 2) continue;
            auto nbrs = g.neighbors(v);
            auto [reduced, kept] = delete_vertices(g, {v});
            if (!is_sparse(reduced, k).tight) continue;
            auto rank = rank_map(kept, g.n);
            ConstructionStep step;
            step.kind = MoveKind::Henneberg1;
            step.a = rank[nbrs[0]];
            step.b = rank[nbrs[1]];
            step.relabel = restore_relabel(kept, v);
            return std::make_pair(std::move(reduced), std::move(step));
        }
        return std::nullopt;
    }

    std::optional<std::pair<SimpleGraph, ConstructionStep>> inverse_h2(const SimpleGraph& g) {
        for (int v = 0; v < g.n; ++v) {
            if (g.degree(v) != 3) continue;
            auto nbrs = g.neighbors(v);
            if (g.has_edge(nbrs[0], nbrs[1]) && g.has_edge(nbrs[0], nbrs[2]) &&
                g.has_edge(nbrs[1], nbrs[2]))
                continue;  // v sits in a K4; handled by contractions
            auto inv = try_inverse_henneberg2(g, v, k);
            if (!inv) continue;
            auto [reduced, kept] = delete_vertices(g, {v});
            (void)reduced;
            auto rank = rank_map(kept, g.n);
            int third = -1;
            for (int x : nbrs)
                if (x != inv->added.first && x != inv->added.second) third = x;
            ConstructionStep step;
            step.kind = MoveKind::Henneberg2;
            step.a = rank[inv->added.first];
            step.b = rank[inv->added.second];
            step.c = rank[third];
            step.relabel = restore_relabel(kept, v);
            return std::make_pair(std::move(inv->graph), std::move(step));
        }
        return std::nullopt;
    }

    std::optional<std::pair<SimpleGraph, ConstructionStep>> k4_contract(const SimpleGraph& g) {
        for (const auto& quad : k4_subgraphs(g)) {
            auto result = try_k4_contraction(g, quad, k);
            if (!result) continue;
            std::vector<int> removed(quad.begin() + 1, quad.end());
            auto kept_pair = delete_vertices(g, removed);
            const auto& kept = kept_pair.second;
            auto rank = rank_map(kept, g.n);
            ConstructionStep step;
            step.kind = MoveKind::VertexToK4;
            step.a = rank[quad[0]];
            // Each result-edge at the merged vertex came from exactly one corner.
            for (const auto& [u, v] : g.edges) {
                int inside = -1, outside = -1;
                for (int i = 0; i < 4; ++i) {
                    if (quad[i] == u) inside = i, outside = v;
                    if (quad[i] == v) inside = i, outside = u;
                }
                if (inside < 0) continue;
                bool outside_in_quad = std::find(quad.begin(), quad.end(), outside) != quad.end();
                if (outside_in_quad) continue;
                step.assignment.emplace_back(rank[outside], inside);
            }
            std::sort(step.assignment.begin(), step.assignment.end());
            std::vector<int> relabel(kept.begin(), kept.end());
            relabel.push_back(quad[1]);
            relabel.push_back(quad[2]);
            relabel.push_back(quad[3]);
            step.relabel = std::move(relabel);
            return std::make_pair(std::move(*result), std::move(step));
        }
        return std::nullopt;
    }

    std::optional<std::pair<SimpleGraph, ConstructionStep>> cycle4_contract(const SimpleGraph& g) {
        for (const auto& quad : k4_subgraphs(g)) {
            for (int v : quad) {
                if (g.degree(v) != 3) continue;
                for (int w = 0; w < g.n; ++w) {
                    if (std::find(quad.begin(), quad.end(), w) != quad.end()) continue;
                    if (g.has_edge(v, w)) continue;
                    std::vector<int> rest;
                    for (int x : quad)
                        if (x != v) rest.push_back(x);
                    // Choose the pair {a,b} adjacent to w; c is the remaining vertex.
                    for (int i = 0; i < 3; ++i) {
                        for (int j = i + 1; j < 3; ++j) {
                            int a = rest[i], b = rest[j], c = rest[3 - i - j];
                            if (!g.has_edge(w, a) || !g.has_edge(w, b)) continue;
                            auto result = try_4cycle_contraction(g, v, w, a, b, c, k);
                            if (!result) continue;
                            const int merged = std::min(v, w);
                            const int removed = std::max(v, w);
                            std::vector<int> kept;
                            for (int x = 0; x < g.n; ++x)
                                if (x != removed) kept.push_back(x);
                            auto rank = rank_map(kept, g.n);
                            ConstructionStep step;
                            step.kind = MoveKind::VertexTo4Cycle;
                            step.a = rank[merged];
                            step.b = rank[a];
                            step.c = rank[b];
                            step.moved = {rank[c]};
                            std::vector<int> relabel;
                            for (int x : kept) relabel.push_back(x == merged ? w : x);
                            relabel.push_back(v);
                            step.relabel = std::move(relabel);
                            return std::make_pair(std::move(*result), std::move(step));
                        }
                    }
                }
            }
        }
        return std::nullopt;
    }

    Certificate edge_join_split(const SimpleGraph& g, const InverseEdgeJoin& join) {
        SimpleGraph c1 = [&] {
            std::vector<std::pair<int, int>> rest;
            for (const auto& e : g.edges)
                if (e != join.bridge) rest.push_back(e);
            return induced_subgraph(make_graph(g.n, rest), join.component1);
        }();
        SimpleGraph c2 = [&] {
            std::vector<std::pair<int, int>> rest;
            for (const auto& e : g.edges)
                if (e != join.bridge) rest.push_back(e);
            return induced_subgraph(make_graph(g.n, rest), join.component2);
        }();
        auto rank1 = rank_map(join.component1, g.n);
        auto rank2 = rank_map(join.component2, g.n);

        Reducer sub{k};
        Certificate cert1 = sub.run(std::move(c1));
        Certificate cert2 = sub.run(std::move(c2));

        ConstructionStep step;
        step.kind = MoveKind::EdgeJoin;
        step.a = rank1[join.bridge.first];
        step.b = rank2[join.bridge.second];
        step.component = std::make_shared<SubCertificate>();
        step.component->base_relabel = std::move(cert2.base_relabel);
        step.component->steps = std::move(cert2.steps);
        std::vector<int> relabel(join.component1.begin(), join.component1.end());
        relabel.insert(relabel.end(), join.component2.begin(), join.component2.end());
        step.relabel = std::move(relabel);

        Certificate cert;
        cert.k = k;
        cert.base_relabel = std::move(cert1.base_relabel);
        cert.steps = std::move(cert1.steps);
        cert.steps.push_back(std::move(step));
        return cert;
    }
};

SimpleGraph replay_steps(int k, const std::vector<int>& base_relabel,
                         const std::vector<ConstructionStep>& steps) {
    SimpleGraph g = base_graph(k);
    if (!base_relabel.empty()) g = permute_graph(g, base_relabel);  // empty means identity
    for (const auto& step : steps) {
        if (step.kind == MoveKind::EdgeJoin) {
            if (!step.component) throw std::invalid_argument("replay: edge_join step lacks its component");
            SimpleGraph h = replay_steps(k, step.component->base_relabel, step.component->steps);
            g = edge_join(g, h, step.a, step.b).graph;
            if (!step.relabel.empty()) g = permute_graph(g, step.relabel);
        } else {
            g = apply_local_step(g, step);
        }
        if (!is_sparse(g, k).tight)
            throw std::invalid_argument("replay: intermediate graph is not (2,k)-tight");
    }
    return g;
}

} // namespace

Certificate reduce(const SimpleGraph& g, int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("reduce: k must be 1, 2 or 3");
    if (!is_sparse(g, k).tight)
        throw std::invalid_argument("reduce: input graph is not (2,k)-tight");
    Reducer reducer{k};
    return reducer.run(g);
}

SimpleGraph replay(const Certificate& cert) {
    if (cert.k < 1 || cert.k > 3) throw std::invalid_argument("replay: k must be 1, 2 or 3");
    std::vector<int> base_relabel = cert.base_relabel;
    if (base_relabel.empty()) {
        base_relabel.resize(base_graph(cert.k).n);
        for (size_t i = 0; i < base_relabel.size(); ++i) base_relabel[i] = static_cast<int>(i);
    }
    return replay_steps(cert.k, base_relabel, cert.steps);
}

namespace {

bool reachable_count(int n, int k) {
    switch (k) {
        case 1: return n >= 5;
        case 2: return n == 1 || n >= 4;
        case 3: return n >= 2;
        default: return false;
    }
}

Generated generate_impl(int n_target, int k, Rng& rng);

// One uniformly-sampled move attempt; nullopt when the drawn move does not
// apply to the current graph (caller re-samples).
std::optional<std::pair<SimpleGraph, ConstructionStep>> attempt_move(const SimpleGraph& g,
                                                                     int n_target, int k,
                                                                     Rng& rng) {
    // Weights: H1 35, H2 35, vertex-to-K4 10, vertex-to-4-cycle 10,
    // vertex split 5, edge join 5 (split and join only where the
    // characterisation theorems admit them).
    const int roll = static_cast<int>(rng.below(100));
    MoveKind kind;
    if (roll < 35) kind = MoveKind::Henneberg1;
    else if (roll < 70) kind = MoveKind::Henneberg2;
    else if (roll < 80) kind = MoveKind::VertexToK4;
    else if (roll < 90) kind = MoveKind::VertexTo4Cycle;
    else if (roll < 95) kind = MoveKind::VertexSplit;
    else kind = MoveKind::EdgeJoin;

    if (k == 3 && kind != MoveKind::Henneberg1 && kind != MoveKind::Henneberg2) return std::nullopt;
    if (k == 2 && kind == MoveKind::EdgeJoin) return std::nullopt;

    switch (kind) {
        case MoveKind::Henneberg1: {
            if (g.n < 2 || g.n + 1 > n_target) return std::nullopt;
            int v1 = static_cast<int>(rng.below(g.n));
            int v2 = static_cast<int>(rng.below(g.n - 1));
            if (v2 >= v1) ++v2;
            auto r = henneberg1(g, v1, v2);
            return std::make_pair(std::move(r.graph), std::move(r.step));
        }
        case MoveKind::Henneberg2: {
            if (g.edge_count() == 0 || g.n < 3 || g.n + 1 > n_target) return std::nullopt;
            auto [v1, v2] = g.edges[rng.below(g.edge_count())];
            int v3 = static_cast<int>(rng.below(g.n));
            if (v3 == v1 || v3 == v2) return std::nullopt;
            auto r = henneberg2(g, v1, v2, v3);
            return std::make_pair(std::move(r.graph), std::move(r.step));
        }
        case MoveKind::VertexToK4: {
            if (g.n + 3 > n_target) return std::nullopt;
            int v = static_cast<int>(rng.below(g.n));
            std::vector<std::pair<int, int>> assignment;
            for (int x : g.neighbors(v)) assignment.emplace_back(x, static_cast<int>(rng.below(4)));
            auto r = vertex_to_k4(g, v, assignment);
            return std::make_pair(std::move(r.graph), std::move(r.step));
        }
        case MoveKind::VertexTo4Cycle: {
            if (g.n + 1 > n_target) return std::nullopt;
            int v1 = static_cast<int>(rng.below(g.n));
            auto nbrs = g.neighbors(v1);
            if (nbrs.size() < 2) return std::nullopt;
            int i = static_cast<int>(rng.below(nbrs.size()));
            int j = static_cast<int>(rng.below(nbrs.size() - 1));
            if (j >= i) ++j;
            std::vector<int> moved;
            for (int x : nbrs)
                if (x != nbrs[i] && x != nbrs[j] && rng.coin()) moved.push_back(x);
            auto r = vertex_to_4cycle(g, v1, nbrs[i], nbrs[j], moved);
            return std::make_pair(std::move(r.graph), std::move(r.step));
        }
        case MoveKind::VertexSplit: {
            if (g.edge_count() == 0 || g.n + 1 > n_target) return std::nullopt;
            auto [v, u] = g.edges[rng.below(g.edge_count())];
            if (rng.coin()) std::swap(v, u);
            std::vector<int> moved;
            for (int x : g.neighbors(v))
                if (x != u && rng.coin()) moved.push_back(x);
            auto r = vertex_split(g, v, u, moved);
            return std::make_pair(std::move(r.graph), std::move(r.step));
        }
        case MoveKind::EdgeJoin: {
            int base_n = base_graph(k).n;
            if (n_target - g.n < base_n) return std::nullopt;
            int n_h = base_n + static_cast<int>(rng.below(n_target - g.n - base_n + 1));
            Generated h = generate_impl(n_h, k, rng);
            int gv = static_cast<int>(rng.below(g.n));
            int hv = static_cast<int>(rng.below(h.graph.n));
            auto r = edge_join(g, h.graph, gv, hv);
            r.step.component = std::make_shared<SubCertificate>();
            r.step.component->base_relabel = std::move(h.certificate.base_relabel);
            r.step.component->steps = std::move(h.certificate.steps);
            return std::make_pair(std::move(r.graph), std::move(r.step));
        }
    }
    return std::nullopt;
}

Generated generate_impl(int n_target, int k, Rng& rng) {
    Generated out;
    out.graph = base_graph(k);
    out.certificate.k = k;
    out.certificate.base_relabel.resize(out.graph.n);
    for (int i = 0; i < out.graph.n; ++i) out.certificate.base_relabel[i] = i;

    int attempts = 0;
    while (out.graph.n < n_target) {
        if (++attempts > 100000)
            throw std::logic_error("generate: no admissible move found after many attempts");
        auto candidate = attempt_move(out.graph, n_target, k, rng);
        if (!candidate) continue;
        if (!is_sparse(candidate->first, k).tight) continue;
        out.graph = std::move(candidate->first);
        out.certificate.steps.push_back(std::move(candidate->second));
    }
    return out;
}

} // namespace

Generated generate(int n_target, int k, uint64_t seed) {
    if (k < 1 || k > 3) throw std::invalid_argument("generate: k must be 1, 2 or 3");
    if (!reachable_count(n_target, k))
        throw std::invalid_argument("generate: no (2,k)-tight graph exists on that many vertices");
    Rng rng(seed);
    return generate_impl(n_target, k, rng);
}

} // namespace surfrig
