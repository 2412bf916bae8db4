#include "surfrig/moves.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace surfrig {

std::string move_kind_name(MoveKind kind) {
    switch (kind) {
        case MoveKind::Henneberg1: return "henneberg1";
        case MoveKind::Henneberg2: return "henneberg2";
        case MoveKind::VertexToK4: return "vertex_to_k4";
        case MoveKind::VertexTo4Cycle: return "vertex_to_4cycle";
        case MoveKind::VertexSplit: return "vertex_split";
        case MoveKind::EdgeJoin: return "edge_join";
    }
    throw std::logic_error("move_kind_name: bad kind");
}

MoveKind move_kind_from_name(const std::string& name) {
    if (name == "henneberg1") return MoveKind::Henneberg1;
    if (name == "henneberg2") return MoveKind::Henneberg2;
    if (name == "vertex_to_k4") return MoveKind::VertexToK4;
    if (name == "vertex_to_4cycle") return MoveKind::VertexTo4Cycle;
    if (name == "vertex_split") return MoveKind::VertexSplit;
    if (name == "edge_join") return MoveKind::EdgeJoin;
    throw std::invalid_argument("unknown move kind: " + name);
}

namespace {

void check_vertex(const SimpleGraph& g, int v, const char* who) {
    if (v < 0 || v >= g.n) throw std::invalid_argument(std::string(who) + ": vertex out of range");
}

} // namespace

MoveResult henneberg1(const SimpleGraph& g, int v1, int v2) {
    check_vertex(g, v1, "henneberg1");
    check_vertex(g, v2, "henneberg1");
    if (v1 == v2) throw std::invalid_argument("henneberg1: identical neighbors");
    auto edges = g.edges;
    edges.emplace_back(g.n, v1);
    edges.emplace_back(g.n, v2);
    MoveResult r;
    r.graph = make_graph(g.n + 1, edges);
    r.step.kind = MoveKind::Henneberg1;
    r.step.a = v1;
    r.step.b = v2;
    return r;
}

MoveResult henneberg2(const SimpleGraph& g, int v1, int v2, int v3) {
    check_vertex(g, v1, "henneberg2");
    check_vertex(g, v2, "henneberg2");
    check_vertex(g, v3, "henneberg2");
    if (!g.has_edge(v1, v2)) throw std::invalid_argument("henneberg2: edge v1v2 missing");
    if (v3 == v1 || v3 == v2) throw std::invalid_argument("henneberg2: v3 coincides with removed edge");
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges)
        if (!(u == std::min(v1, v2) && v == std::max(v1, v2))) edges.emplace_back(u, v);
    edges.emplace_back(g.n, v1);
    edges.emplace_back(g.n, v2);
    edges.emplace_back(g.n, v3);
    MoveResult r;
    r.graph = make_graph(g.n + 1, edges);
    r.step.kind = MoveKind::Henneberg2;
    r.step.a = v1;
    r.step.b = v2;
    r.step.c = v3;
    return r;
}

MoveResult vertex_to_k4(const SimpleGraph& g, int v,
                        const std::vector<std::pair<int, int>>& assignment) {
    check_vertex(g, v, "vertex_to_k4");
    auto nbrs = g.neighbors(v);
    std::set<int> pending(nbrs.begin(), nbrs.end());
    for (const auto& [x, corner] : assignment) {
        if (!pending.count(x))
            throw std::invalid_argument("vertex_to_k4: assignment references a non-incident edge");
        if (corner < 0 || corner > 3)
            throw std::invalid_argument("vertex_to_k4: corner out of range");
        pending.erase(x);
    }
    if (!pending.empty())
        throw std::invalid_argument("vertex_to_k4: assignment incomplete");

    // Corner 0 keeps label v; corners 1..3 are g.n, g.n+1, g.n+2.
    auto corner_label = [&](int corner) { return corner == 0 ? v : g.n + corner - 1; };
    std::vector<std::pair<int, int>> edges;
    for (auto [u, w] : g.edges)
        if (u != v && w != v) edges.emplace_back(u, w);
    for (const auto& [x, corner] : assignment) edges.emplace_back(x, corner_label(corner));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) edges.emplace_back(corner_label(i), corner_label(j));
    MoveResult r;
    r.graph = make_graph(g.n + 3, edges);
    r.step.kind = MoveKind::VertexToK4;
    r.step.a = v;
    r.step.assignment = assignment;
    std::sort(r.step.assignment.begin(), r.step.assignment.end());
    return r;
}

MoveResult vertex_to_4cycle(const SimpleGraph& g, int v1, int v2, int v3,
                            const std::vector<int>& moved) {
    check_vertex(g, v1, "vertex_to_4cycle");
    check_vertex(g, v2, "vertex_to_4cycle");
    check_vertex(g, v3, "vertex_to_4cycle");
    if (v2 == v3) throw std::invalid_argument("vertex_to_4cycle: v2 and v3 coincide");
    if (!g.has_edge(v1, v2) || !g.has_edge(v1, v3))
        throw std::invalid_argument("vertex_to_4cycle: required edge missing");
    std::set<int> move_set(moved.begin(), moved.end());
    if (move_set.size() != moved.size())
        throw std::invalid_argument("vertex_to_4cycle: duplicate in partition");
    for (int x : move_set)
        if (x == v2 || x == v3 || !g.has_edge(v1, x))
            throw std::invalid_argument("vertex_to_4cycle: partition entry is not an eligible edge");

    const int v0 = g.n;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, w] : g.edges) {
        int other = (u == v1) ? w : (w == v1) ? u : -1;
        if (other >= 0 && move_set.count(other))
            edges.emplace_back(v0, other);
        else
            edges.emplace_back(u, w);
    }
    edges.emplace_back(v0, v2);
    edges.emplace_back(v0, v3);
    MoveResult r;
    r.graph = make_graph(g.n + 1, edges);
    r.step.kind = MoveKind::VertexTo4Cycle;
    r.step.a = v1;
    r.step.b = v2;
    r.step.c = v3;
    r.step.moved.assign(move_set.begin(), move_set.end());
    return r;
}

MoveResult vertex_split(const SimpleGraph& g, int v, int u, const std::vector<int>& moved) {
    check_vertex(g, v, "vertex_split");
    check_vertex(g, u, "vertex_split");
    if (!g.has_edge(v, u)) throw std::invalid_argument("vertex_split: edge uv missing");
    std::set<int> move_set(moved.begin(), moved.end());
    if (move_set.size() != moved.size())
        throw std::invalid_argument("vertex_split: duplicate in partition");
    for (int x : move_set)
        if (x == u || !g.has_edge(v, x))
            throw std::invalid_argument("vertex_split: partition entry is not an eligible edge");

    const int v2 = g.n;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges) {
        int other = (a == v) ? b : (b == v) ? a : -1;
        if (other == u) continue;  // uv is re-created below
        if (other >= 0 && move_set.count(other))
            edges.emplace_back(v2, other);
        else
            edges.emplace_back(a, b);
    }
    edges.emplace_back(u, v);
    edges.emplace_back(u, v2);
    edges.emplace_back(v, v2);
    MoveResult r;
    r.graph = make_graph(g.n + 1, edges);
    r.step.kind = MoveKind::VertexSplit;
    r.step.a = v;
    r.step.b = u;
    r.step.moved.assign(move_set.begin(), move_set.end());
    return r;
}

MoveResult edge_join(const SimpleGraph& g, const SimpleGraph& h, int gv, int hv) {
    if (gv < 0 || gv >= g.n || hv < 0 || hv >= h.n)
        throw std::invalid_argument("edge_join: labels out of range");
    std::vector<std::pair<int, int>> edges = g.edges;
    for (auto [u, v] : h.edges) edges.emplace_back(u + g.n, v + g.n);
    edges.emplace_back(gv, hv + g.n);
    MoveResult r;
    r.graph = make_graph(g.n + h.n, edges);
    r.step.kind = MoveKind::EdgeJoin;
    r.step.a = gv;
    r.step.b = hv;
    return r;
}

SimpleGraph apply_local_step(const SimpleGraph& g, const ConstructionStep& step) {
    SimpleGraph out;
    switch (step.kind) {
        case MoveKind::Henneberg1: out = henneberg1(g, step.a, step.b).graph; break;
        case MoveKind::Henneberg2: out = henneberg2(g, step.a, step.b, step.c).graph; break;
        case MoveKind::VertexToK4: out = vertex_to_k4(g, step.a, step.assignment).graph; break;
        case MoveKind::VertexTo4Cycle:
            out = vertex_to_4cycle(g, step.a, step.b, step.c, step.moved).graph;
            break;
        case MoveKind::VertexSplit: out = vertex_split(g, step.a, step.b, step.moved).graph; break;
        case MoveKind::EdgeJoin:
            throw std::invalid_argument("apply_local_step: edge_join needs its component replayed");
    }
    if (!step.relabel.empty()) out = permute_graph(out, step.relabel);
    return out;
}

std::pair<SimpleGraph, std::vector<int>> delete_vertices(const SimpleGraph& g,
                                                         const std::vector<int>& removed) {
    std::vector<bool> gone(g.n, false);
    for (int v : removed) {
        check_vertex(g, v, "delete_vertices");
        gone[v] = true;
    }
    std::vector<int> kept;
    for (int v = 0; v < g.n; ++v)
        if (!gone[v]) kept.push_back(v);
    return {induced_subgraph(g, kept), kept};
}

std::vector<std::pair<int, SimpleGraph>> inverse_henneberg1_candidates(const SimpleGraph& g, int k) {
    std::vector<std::pair<int, SimpleGraph>> out;
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) != 2) continue;
        auto [reduced, kept] = delete_vertices(g, {v});
        if (is_sparse(reduced, k).tight) out.emplace_back(v, std::move(reduced));
    }
    return out;
}

std::optional<InverseH2> try_inverse_henneberg2(const SimpleGraph& g, int v, int k) {
    check_vertex(g, v, "try_inverse_henneberg2");
    auto nbrs = g.neighbors(v);
    if (nbrs.size() != 3) throw std::invalid_argument("try_inverse_henneberg2: vertex degree is not 3");
    auto [reduced, kept] = delete_vertices(g, {v});
    std::vector<int> rank(g.n, -1);
    for (size_t i = 0; i < kept.size(); ++i) rank[kept[i]] = static_cast<int>(i);
    const std::pair<int, int> pairs[3] = {{nbrs[0], nbrs[1]}, {nbrs[0], nbrs[2]}, {nbrs[1], nbrs[2]}};
    for (const auto& [p, q] : pairs) {
        if (g.has_edge(p, q)) continue;
        auto edges = reduced.edges;
        edges.emplace_back(rank[p], rank[q]);
        SimpleGraph candidate = make_graph(reduced.n, edges);
        if (is_sparse(candidate, k).tight) return InverseH2{std::move(candidate), {p, q}};
    }
    return std::nullopt;
}

std::optional<SimpleGraph> try_k4_contraction(const SimpleGraph& g,
                                              const std::array<int, 4>& quad, int k) {
    for (int v : quad) check_vertex(g, v, "try_k4_contraction");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (quad[i] == quad[j] || !g.has_edge(quad[i], quad[j]))
                throw std::invalid_argument("try_k4_contraction: vertices do not induce K4");

    std::array<int, 4> sorted = quad;
    std::sort(sorted.begin(), sorted.end());
    const int merged = sorted[0];
    std::set<int> in_quad(sorted.begin(), sorted.end());
    std::set<std::pair<int, int>> edge_set;
    for (auto [u, v] : g.edges) {
        bool uq = in_quad.count(u) > 0, vq = in_quad.count(v) > 0;
        if (uq && vq) continue;
        int a = uq ? merged : u;
        int b = vq ? merged : v;
        if (a > b) std::swap(a, b);
        if (!edge_set.insert({a, b}).second)
            return std::nullopt;  // an outside vertex saw two K4 corners: count breaks
    }
    SimpleGraph merged_graph =
        make_graph(g.n, std::vector<std::pair<int, int>>(edge_set.begin(), edge_set.end()));
    auto [result, kept] = delete_vertices(merged_graph, {sorted[1], sorted[2], sorted[3]});
    if (!is_sparse(result, k).tight) return std::nullopt;
    return result;
}

std::optional<SimpleGraph> try_4cycle_contraction(const SimpleGraph& g, int v, int w,
                                                  int a, int b, int c, int k) {
    for (int x : {v, w, a, b, c}) check_vertex(g, x, "try_4cycle_contraction");
    std::set<int> distinct = {v, w, a, b, c};
    if (distinct.size() != 5) throw std::invalid_argument("try_4cycle_contraction: vertices not distinct");
    const int quad[4] = {v, a, b, c};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!g.has_edge(quad[i], quad[j]))
                throw std::invalid_argument("try_4cycle_contraction: {v,a,b,c} do not induce K4");
    if (g.degree(v) != 3) throw std::invalid_argument("try_4cycle_contraction: v is not degree 3");
    if (!g.has_edge(w, a) || !g.has_edge(w, b))
        throw std::invalid_argument("try_4cycle_contraction: w is missing an edge to a or b");
    if (g.has_edge(v, w)) throw std::invalid_argument("try_4cycle_contraction: edge vw present");

    if (g.has_edge(w, c)) return std::nullopt;  // {v,w,a,b,c} is a K5 minus e copy

    const int merged = std::min(v, w);
    const int removed = std::max(v, w);
    std::set<std::pair<int, int>> edge_set;
    for (auto [p, q] : g.edges) {
        int x = (p == v || p == w) ? merged : p;
        int y = (q == v || q == w) ? merged : q;
        if (x > y) std::swap(x, y);
        edge_set.insert({x, y});
    }
    SimpleGraph merged_graph =
        make_graph(g.n, std::vector<std::pair<int, int>>(edge_set.begin(), edge_set.end()));
    auto [result, kept] = delete_vertices(merged_graph, {removed});
    if (!is_sparse(result, k).tight) return std::nullopt;
    return result;
}

std::optional<SimpleGraph> try_edge_contraction(const SimpleGraph& g, int x, int y, int k) {
    check_vertex(g, x, "try_edge_contraction");
    check_vertex(g, y, "try_edge_contraction");
    if (!g.has_edge(x, y)) throw std::invalid_argument("try_edge_contraction: edge missing");
    auto nx = g.neighbors(x);
    auto ny = g.neighbors(y);
    std::vector<int> common;
    std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(), std::back_inserter(common));
    if (common.size() != 1) return std::nullopt;

    const int merged = std::min(x, y);
    const int removed = std::max(x, y);
    std::set<std::pair<int, int>> edge_set;
    for (auto [p, q] : g.edges) {
        if ((p == x && q == y) || (p == y && q == x)) continue;
        int u = (p == x || p == y) ? merged : p;
        int v = (q == x || q == y) ? merged : q;
        if (u > v) std::swap(u, v);
        edge_set.insert({u, v});
    }
    SimpleGraph merged_graph =
        make_graph(g.n, std::vector<std::pair<int, int>>(edge_set.begin(), edge_set.end()));
    auto [result, kept] = delete_vertices(merged_graph, {removed});
    if (!is_sparse(result, k).tight) return std::nullopt;
    return result;
}

std::optional<InverseEdgeJoin> find_inverse_edge_join(const SimpleGraph& g, int k) {
    if (k != 1) throw std::invalid_argument("find_inverse_edge_join: only defined for k = 1");
    for (size_t e = 0; e < g.edges.size(); ++e) {
        std::vector<std::pair<int, int>> rest;
        for (size_t i = 0; i < g.edges.size(); ++i)
            if (i != e) rest.push_back(g.edges[i]);
        SimpleGraph cut = make_graph(g.n, rest);
        auto comps = connected_components(cut);
        if (comps.size() != 2) continue;
        const auto& [u, v] = g.edges[e];
        int cu = -1;
        for (size_t i = 0; i < comps.size(); ++i)
            if (std::binary_search(comps[i].begin(), comps[i].end(), u)) cu = static_cast<int>(i);
        const auto& first = comps[cu];
        const auto& second = comps[1 - cu];
        if (!std::binary_search(second.begin(), second.end(), v)) continue;  // not a bridge
        if (!is_sparse(induced_subgraph(cut, first), 1).tight) continue;
        if (!is_sparse(induced_subgraph(cut, second), 1).tight) continue;
        return InverseEdgeJoin{g.edges[e], first, second};
    }
    return std::nullopt;
}

std::vector<std::array<int, 4>> k4_subgraphs(const SimpleGraph& g) {
    std::vector<std::array<int, 4>> out;
    auto adj = g.adjacency();
    for (int a = 0; a < g.n; ++a)
        for (int b : adj[a]) {
            if (b <= a) continue;
            for (int c : adj[a]) {
                if (c <= b || !g.has_edge(b, c)) continue;
                for (int d : adj[a]) {
                    if (d <= c || !g.has_edge(b, d) || !g.has_edge(c, d)) continue;
                    out.push_back({a, b, c, d});
                }
            }
        }
    return out;
}

} // namespace surfrig
