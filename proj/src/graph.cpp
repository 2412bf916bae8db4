#include "surfrig/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace surfrig {

bool SimpleGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

int SimpleGraph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges)
        if (a == v || b == v) ++d;
    return d;
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
        if (a == v) out.push_back(b);
        if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimpleGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("make_graph: negative vertex count");
    SimpleGraph g;
    g.n = n;
    g.edges.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("make_graph: endpoint out of range");
        if (u == v)
            throw std::invalid_argument("make_graph: loop edge");
        if (u > v) std::swap(u, v);
        g.edges.emplace_back(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end())
        throw std::invalid_argument("make_graph: duplicate edge");
    return g;
}

SimpleGraph permute_graph(const SimpleGraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n)
        throw std::invalid_argument("permute_graph: permutation size mismatch");
    std::vector<bool> seen(g.n, false);
    for (int p : perm) {
        if (p < 0 || p >= g.n || seen[p])
            throw std::invalid_argument("permute_graph: not a permutation");
        seen[p] = true;
    }
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(g.edges.size());
    for (const auto& [u, v] : g.edges) mapped.emplace_back(perm[u], perm[v]);
    return make_graph(g.n, mapped);
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& vertices) {
    std::vector<int> sorted(vertices);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> index(g.n, -1);
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= g.n)
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        index[sorted[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> kept;
    for (const auto& [u, v] : g.edges)
        if (index[u] >= 0 && index[v] >= 0) kept.emplace_back(index[u], index[v]);
    return make_graph(static_cast<int>(sorted.size()), kept);
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
    auto adj = g.adjacency();
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out[id].push_back(v);
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = id;
                    q.push(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_complete(const SimpleGraph& g) {
    return g.edge_count() == g.n * (g.n - 1) / 2;
}

namespace {

// (2,k) pebble game state. Inserted edges are oriented; a vertex's free
// pebbles plus its out-degree always sum to 2.
struct PebbleGame {
    int n;
    std::vector<int> pebbles;
    std::vector<std::vector<int>> out;

    explicit PebbleGame(int n_) : n(n_), pebbles(n_, 2), out(n_) {}

    // Search along oriented edges from root for a free pebble, with `avoid`
    // blocked. On success the path is reversed and root gains a pebble.
    bool pull_pebble(int root, int avoid) {
        std::vector<int> parent(n, -2);
        parent[root] = -1;
        parent[avoid] = -3;
        std::vector<int> stack = {root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : out[v]) {
                if (parent[w] != -2) continue;
                parent[w] = v;
                if (pebbles[w] > 0) {
                    --pebbles[w];
                    ++pebbles[root];
                    int cur = w;
                    while (parent[cur] >= 0) {
                        int prev = parent[cur];
                        auto& list = out[prev];
                        list.erase(std::find(list.begin(), list.end(), cur));
                        out[cur].push_back(prev);
                        cur = prev;
                    }
                    return true;
                }
                stack.push_back(w);
            }
        }
        return false;
    }

    std::vector<int> reachable(int u, int v) const {
        std::vector<bool> seen(n, false);
        std::vector<int> stack = {u, v};
        seen[u] = seen[v] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int w : out[x])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::vector<int> set;
        for (int i = 0; i < n; ++i)
            if (seen[i]) set.push_back(i);
        return set;
    }
};

} // namespace

SparsityVerdict is_sparse(const SimpleGraph& g, int k) {
    if (k < 0 || k > 3) throw std::invalid_argument("is_sparse: k must be in {0,1,2,3}");
    PebbleGame game(g.n);
    for (const auto& [u, v] : g.edges) {
        while (game.pebbles[u] + game.pebbles[v] < k + 1) {
            if (!game.pull_pebble(u, v) && !game.pull_pebble(v, u)) {
                SparsityVerdict verdict;
                verdict.sparse = false;
                verdict.tight = false;
                verdict.witness = game.reachable(u, v);
                return verdict;
            }
        }
        if (game.pebbles[u] > 0) {
            --game.pebbles[u];
            game.out[u].push_back(v);
        } else {
            --game.pebbles[v];
            game.out[v].push_back(u);
        }
    }
    SparsityVerdict verdict;
    verdict.sparse = true;
    verdict.tight = g.edge_count() == 2 * g.n - k;
    return verdict;
}

SparsityVerdict is_sparse_bruteforce(const SimpleGraph& g, int k) {
    if (k < 0 || k > 3) throw std::invalid_argument("is_sparse_bruteforce: k must be in {0,1,2,3}");
    if (g.n > 14) throw std::invalid_argument("is_sparse_bruteforce: graph too large for enumeration");
    for (uint32_t mask = 1; mask < (1u << g.n); ++mask) {
        int nv = __builtin_popcount(mask);
        int ne = 0;
        for (const auto& [u, v] : g.edges)
            if ((mask >> u & 1) && (mask >> v & 1)) ++ne;
        if (ne >= 1 && ne > 2 * nv - k) {
            SparsityVerdict verdict;
            verdict.sparse = false;
            verdict.tight = false;
            std::vector<int> set;
            for (int i = 0; i < g.n; ++i)
                if (mask >> i & 1) set.push_back(i);
            verdict.witness = set;
            return verdict;
        }
    }
    SparsityVerdict verdict;
    verdict.sparse = true;
    verdict.tight = g.edge_count() == 2 * g.n - k;
    return verdict;
}

int deficiency(const SimpleGraph& g, const std::vector<int>& vertex_set) {
    if (vertex_set.empty()) throw std::invalid_argument("deficiency: empty vertex set");
    std::set<int> set(vertex_set.begin(), vertex_set.end());
    for (int v : set)
        if (v < 0 || v >= g.n) throw std::invalid_argument("deficiency: vertex out of range");
    int ne = 0;
    for (const auto& [u, v] : g.edges)
        if (set.count(u) && set.count(v)) ++ne;
    return 2 * static_cast<int>(set.size()) - ne;
}

SimpleGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

SimpleGraph k5_minus_e() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            if (!(u == 3 && v == 4)) edges.emplace_back(u, v);
    return make_graph(5, edges);
}

SimpleGraph k4_join_k4() {
    // {0,1,2,3} and {2,3,4,5} complete, sharing the edge {2,3}.
    return make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                          {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

std::string graph_key(const SimpleGraph& g) {
    std::ostringstream os;
    os << g.n << ':';
    for (const auto& [u, v] : g.edges) os << u << '-' << v << ';';
    return os.str();
}

} // namespace surfrig
