#include "atcert/generate.hpp"

#include "atcert/errors.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace atcert {

namespace {

using Rng = std::mt19937_64;

int below(Rng& rng, int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); }

void shuffle(Rng& rng, std::vector<int>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[below(rng, i + 1)]);
}

Graph relabel(const Graph& g, Rng& rng) {
    std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(rng, perm);
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
    return Graph(g.vertex_count(), std::move(edges));
}

// Apollonian growth: each new vertex goes into a random face of the triangulation.
std::set<Edge> triangulation(int n, Rng& rng) {
    std::set<Edge> edges;
    if (n == 2) edges.insert({0, 1});
    if (n < 3) return edges;
    edges = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 2, 1}};
    for (int v = 3; v < n; ++v) {
        int f = below(rng, static_cast<int>(faces.size()));
        auto [a, b, c] = faces[f];
        faces[f] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({c, a, v});
        edges.insert(make_edge(a, v));
        edges.insert(make_edge(b, v));
        edges.insert(make_edge(c, v));
    }
    return edges;
}

// Drops each edge with probability 1/4 unless that disconnects the graph.
Graph thin(int n, std::set<Edge> edges, Rng& rng) {
    std::vector<Edge> order(edges.begin(), edges.end());
    for (int i = static_cast<int>(order.size()) - 1; i > 0; --i) std::swap(order[i], order[below(rng, i + 1)]);
    for (const auto& e : order) {
        if (below(rng, 4) != 0) continue;
        edges.erase(e);
        if (!is_connected(Graph(n, {edges.begin(), edges.end()}))) edges.insert(e);
    }
    return Graph(n, {edges.begin(), edges.end()});
}

Graph random_planar(int n, Rng& rng) { return thin(n, triangulation(n, rng), rng); }

// Random clique of size k in g, or empty if g has none.
std::vector<int> random_clique(const Graph& g, int k, Rng& rng) {
    std::vector<std::vector<int>> all;
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        if (k == 1) all.push_back({a});
        for (int b : g.neighbors(a)) {
            if (b <= a) continue;
            if (k == 2) all.push_back({a, b});
            for (int c : g.neighbors(b))
                if (c > b && k == 3 && g.has_edge(a, c)) all.push_back({a, b, c});
        }
    }
    if (all.empty()) return {};
    auto pick = all[below(rng, static_cast<int>(all.size()))];
    shuffle(rng, pick);
    return pick;
}

Graph random_cliquesum(int n, Rng& rng) {
    if (n < 4) return random_planar(n, rng);
    int first = n >= 9 && below(rng, 4) == 0 ? 8 : std::min(n - 1, 3 + below(rng, 4));
    Graph g = first == 8 ? wagner_graph() : random_planar(first, rng);
    while (g.vertex_count() < n) {
        int room = n - g.vertex_count();
        int k = 1 + below(rng, 3);
        auto host = random_clique(g, k, rng);
        while (host.empty()) host = random_clique(g, --k, rng);
        bool wagner = k <= 2 && 8 - k <= room && below(rng, 4) == 0;
        int size = wagner ? 8 : k + 1 + below(rng, std::min(room, 4));
        Graph piece = wagner ? wagner_graph() : random_planar(size, rng);
        // A thinned piece can lose its triangles; draw again.
        auto guest = random_clique(piece, k, rng);
        if (guest.empty()) continue;

        // Piece vertex -> glued vertex: clique vertices map to the host clique,
        // the rest get fresh labels.
        std::vector<int> place(static_cast<std::size_t>(piece.vertex_count()), -1);
        for (int i = 0; i < k; ++i) place[guest[i]] = host[i];
        int next = g.vertex_count();
        for (int v = 0; v < piece.vertex_count(); ++v)
            if (place[v] < 0) place[v] = next++;
        std::set<Edge> edges(g.edges().begin(), g.edges().end());
        for (const auto& e : piece.edges()) edges.insert(make_edge(place[e.u], place[e.v]));
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                auto e = make_edge(host[i], host[j]);
                if (below(rng, 3) != 0) continue;
                edges.erase(e);
                if (!is_connected(Graph(next, {edges.begin(), edges.end()}))) edges.insert(e);
            }
        g = Graph(next, {edges.begin(), edges.end()});
    }
    return g;
}

}  // namespace

std::string_view kind_name(CorpusKind kind) {
    switch (kind) {
        case CorpusKind::planar: return "planar";
        case CorpusKind::cliquesum: return "cliquesum";
        case CorpusKind::wagner: return "wagner";
        case CorpusKind::k5: return "k5";
    }
    return "?";
}

CorpusKind parse_kind(std::string_view name) {
    for (auto k : {CorpusKind::planar, CorpusKind::cliquesum, CorpusKind::wagner, CorpusKind::k5})
        if (name == kind_name(k)) return k;
    throw MalformedInput("unknown corpus kind '" + std::string(name) + "'");
}

Graph generate(CorpusKind kind, int n, std::uint64_t seed) {
    Rng rng(seed);
    switch (kind) {
        case CorpusKind::planar:
            if (n < 1) throw PreconditionError("planar corpus graphs need n >= 1");
            return relabel(random_planar(n, rng), rng);
        case CorpusKind::cliquesum:
            if (n < 1) throw PreconditionError("clique-sum corpus graphs need n >= 1");
            return relabel(random_cliquesum(n, rng), rng);
        case CorpusKind::wagner: return relabel(wagner_graph(), rng);
        case CorpusKind::k5: {
            if (n < 5) throw PreconditionError("the K5 control needs n >= 5");
            auto k5 = complete_graph(5);
            std::vector<Edge> edges(k5.edges().begin(), k5.edges().end());
            for (int v = 5; v < n; ++v) edges.push_back(make_edge(below(rng, v), v));
            return relabel(Graph(n, std::move(edges)), rng);
        }
    }
    throw PreconditionError("unknown corpus kind");
}

Signature random_signature(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::int8_t> signs;
    for (int i = 0; i < g.edge_count(); ++i) signs.push_back(below(rng, 2) == 0 ? 1 : -1);
    return Signature(g, std::move(signs));
}

}  // namespace atcert
