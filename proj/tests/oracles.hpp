#pragma once

// Independent reference implementations used only by the tests. None of them
// shares code with the library beyond the Graph container.

#include "atcert/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using atcert::Arc;
using atcert::Edge;
using atcert::Graph;
using atcert::Signature;

using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, std::int64_t>;

/// Symbolic expansion of prod (x_u - s_uv x_v), one factor at a time.
inline Polynomial expand(const Graph& g, const Signature* sig = nullptr) {
    Polynomial p{{Monomial(static_cast<std::size_t>(g.vertex_count()), 0), 1}};
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        int s = sig ? sig->sign(i) : 1;
        Polynomial next;
        for (const auto& [mono, c] : p) {
            auto a = mono;
            ++a[e.u];
            next[a] += c;
            auto b = mono;
            ++b[e.v];
            next[b] -= s * c;
        }
        p.clear();
        for (auto& [mono, c] : next)
            if (c != 0) p.emplace(mono, c);
    }
    return p;
}

inline std::int64_t coefficient(const Graph& g, const Monomial& exps, const Signature* sig = nullptr) {
    auto p = expand(g, sig);
    auto it = p.find(exps);
    return it == p.end() ? 0 : it->second;
}

/// Least k with a nonzero monomial whose exponents are all below k.
inline int alon_tarsi(const Graph& g, const Signature* sig = nullptr) {
    if (g.edge_count() == 0) return 1;
    int best = 1 << 30;
    for (const auto& [mono, c] : expand(g, sig)) best = std::min(best, *std::max_element(mono.begin(), mono.end()) + 1);
    return best;
}

struct Parity {
    std::int64_t even = 0, odd = 0;
};

/// Flat scan over every subset of arcs; `positive` empty means unsigned parity.
inline Parity eulerian_scan(int n, const std::vector<Arc>& arcs, const std::vector<int>& positive = {}) {
    const int m = static_cast<int>(arcs.size());
    if (m > 24) throw std::runtime_error("scan too large");
    Parity out;
    std::vector<int> bal(static_cast<std::size_t>(n));
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        std::fill(bal.begin(), bal.end(), 0);
        int count = 0;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1U) {
                ++bal[arcs[i].tail];
                --bal[arcs[i].head];
                count += positive.empty() ? 1 : positive[i];
            }
        if (std::any_of(bal.begin(), bal.end(), [](int b) { return b != 0; })) continue;
        (count % 2 == 0 ? out.even : out.odd) += 1;
    }
    return out;
}

/// Out-degree sequence of arcs.
inline std::vector<int> out_degrees(int n, const std::vector<Arc>& arcs) {
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    for (const auto& a : arcs) ++d[a.tail];
    return d;
}

/// Minor test by partitioning each component into |V(h)| connected blocks and
/// trying every assignment of blocks to the vertices of h.
inline bool has_minor(const Graph& g, const Graph& h) {
    const int k = h.vertex_count();
    for (const auto& comp : atcert::connected_components(g)) {
        const int c = static_cast<int>(comp.size());
        if (c < k) continue;
        if (c > 12) throw std::runtime_error("minor oracle limited to 12 vertices");
        auto sub = atcert::induced_subgraph(g, comp);
        std::vector<std::uint32_t> adj(static_cast<std::size_t>(c), 0);
        for (const auto& e : sub.edges()) {
            adj[e.u] |= 1U << e.v;
            adj[e.v] |= 1U << e.u;
        }
        auto connected = [&](std::uint32_t block) {
            std::uint32_t reach = block & (~block + 1);
            for (;;) {
                std::uint32_t grow = reach;
                for (int v = 0; v < c; ++v)
                    if (reach >> v & 1U) grow |= adj[v] & block;
                if (grow == reach) return reach == block;
                reach = grow;
            }
        };
        std::vector<std::uint32_t> block(static_cast<std::size_t>(k), 0);
        std::vector<int> perm(static_cast<std::size_t>(k));
        bool found = false;
        std::function<void(int, int)> rec = [&](int v, int used) {
            if (found || c - v < k - used) return;
            if (v == c) {
                for (auto b : block)
                    if (!connected(b)) return;
                std::vector<std::vector<std::uint8_t>> touch(static_cast<std::size_t>(k), std::vector<std::uint8_t>(static_cast<std::size_t>(k), 0));
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        for (int x = 0; x < c; ++x)
                            if ((block[i] >> x & 1U) && (adj[x] & block[j])) touch[i][j] = 1;
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    bool ok = true;
                    for (const auto& e : h.edges())
                        if (!touch[perm[e.u]][perm[e.v]]) {
                            ok = false;
                            break;
                        }
                    if (ok) {
                        found = true;
                        return;
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));
                return;
            }
            for (int b = 0; b < std::min(used + 1, k); ++b) {
                block[b] |= 1U << v;
                rec(v + 1, std::max(used, b + 1));
                block[b] &= ~(1U << v);
            }
        };
        rec(0, 0);
        if (found) return true;
    }
    return false;
}

inline Graph k33() {
    std::vector<Edge> e;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) e.push_back({a, b});
    return Graph(6, e);
}

/// Planarity through the excluded minors K5 and K3,3.
inline bool planar_by_minors(const Graph& g) {
    return !has_minor(g, atcert::complete_graph(5)) && !has_minor(g, k33());
}

/// Degeneracy by peeling a minimum-degree vertex; independent of the library's bucket queue.
inline int peel_degeneracy(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    for (const auto& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<std::uint8_t> gone(static_cast<std::size_t>(n), 0);
    int worst = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (best < 0 || adj[v].size() < adj[best].size())) best = v;
        worst = std::max(worst, static_cast<int>(adj[best].size()));
        gone[best] = 1;
        for (int w : adj[best]) adj[w].erase(best);
        adj[best].clear();
    }
    return worst;
}

inline Graph from_mask(int n, std::uint32_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++bit)
            if (mask >> bit & 1U) edges.push_back({a, b});
    return Graph(n, edges);
}

/// One representative per isomorphism class of connected graphs on n <= 7 vertices.
inline std::vector<Graph> connected_graphs(int n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    int bit = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++bit) pair_index[a][b] = pair_index[b][a] = bit;
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
        std::uint32_t canon = mask;
        for (const auto& q : perms) {
            std::uint32_t img = 0;
            int i = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b, ++i)
                    if (mask >> i & 1U) img |= 1U << pair_index[q[a]][q[b]];
            canon = std::min(canon, img);
            if (canon < mask) break;
        }
        if (canon != mask || !seen.insert(mask).second) continue;
        auto g = from_mask(n, mask);
        if (atcert::is_connected(g)) out.push_back(g);
    }
    return out;
}

/// Uniform random graph with at most max_edges edges.
inline Graph random_graph(std::mt19937_64& rng, int n, int max_edges, bool connected = false) {
    for (;;) {
        std::vector<Edge> all;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) all.push_back({a, b});
        std::shuffle(all.begin(), all.end(), rng);
        int m = static_cast<int>(rng() % static_cast<std::uint64_t>(std::min<int>(max_edges, static_cast<int>(all.size())) + 1));
        all.resize(static_cast<std::size_t>(m));
        Graph g(n, all);
        if (!connected || atcert::is_connected(g)) return g;
    }
}

inline std::vector<Arc> random_arcs(std::mt19937_64& rng, const Graph& g) {
    std::vector<Arc> arcs;
    for (const auto& e : g.edges()) arcs.push_back(rng() & 1U ? Arc{e.u, e.v} : Arc{e.v, e.u});
    return arcs;
}

inline Signature random_signs(std::mt19937_64& rng, const Graph& g) {
    std::vector<std::int8_t> s;
    for (int i = 0; i < g.edge_count(); ++i) s.push_back(rng() & 1U ? 1 : -1);
    return Signature(g, s);
}

}  // namespace oracle
