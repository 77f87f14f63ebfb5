#include "atcert/graph.hpp"

#include "atcert/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace atcert {

namespace {

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

Graph::Graph(int vertex_count) : Graph(vertex_count, {}) {}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw MalformedInput("negative vertex count");
    for (auto& e : edges_) {
        if (e.u == e.v) throw MalformedInput("loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
            throw MalformedInput("edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
        e = make_edge(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw MalformedInput("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));

    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    offset_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + static_cast<std::size_t>(deg[v]);
    adjacent_.resize(offset_.back());
    incident_.resize(offset_.back());
    std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
    for (int i = 0; i < edge_count(); ++i) {
        const auto& e = edges_[i];
        adjacent_[fill[e.u]] = e.v;
        incident_[fill[e.u]++] = i;
        adjacent_[fill[e.v]] = e.u;
        incident_[fill[e.v]++] = i;
    }
    for (int v = 0; v < n_; ++v) {
        auto b = static_cast<std::ptrdiff_t>(offset_[v]);
        auto e = static_cast<std::ptrdiff_t>(offset_[v + 1]);
        std::vector<std::pair<int, int>> tmp;
        for (auto k = b; k < e; ++k) tmp.emplace_back(adjacent_[k], incident_[k]);
        std::sort(tmp.begin(), tmp.end());
        for (auto k = b; k < e; ++k) {
            adjacent_[k] = tmp[k - b].first;
            incident_[k] = tmp[k - b].second;
        }
    }
}

std::span<const int> Graph::neighbors(int v) const {
    return {adjacent_.data() + offset_.at(v), adjacent_.data() + offset_.at(v + 1)};
}

std::span<const int> Graph::incident_edges(int v) const {
    return {incident_.data() + offset_.at(v), incident_.data() + offset_.at(v + 1)};
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::optional<int> Graph::edge_index(int a, int b) const {
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
    auto e = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> Graph::indices_of(std::span<const Edge> subset) const {
    std::vector<int> out;
    out.reserve(subset.size());
    for (const auto& e : subset) {
        auto idx = edge_index(e.u, e.v);
        if (!idx) throw MalformedInput("unknown edge " + std::to_string(e.u) + " " + std::to_string(e.v));
        out.push_back(*idx);
    }
    return out;
}

Orientation::Orientation(Graph base, std::vector<std::uint8_t> forward)
    : base_(std::move(base)), forward_(std::move(forward)), out_(static_cast<std::size_t>(base_.vertex_count()), 0) {
    if (forward_.size() != static_cast<std::size_t>(base_.edge_count()))
        throw MalformedInput("orientation does not cover every edge");
    for (int i = 0; i < base_.edge_count(); ++i) ++out_[arc(i).tail];
}

Orientation Orientation::from_arcs(Graph base, std::span<const Arc> arcs) {
    std::vector<std::uint8_t> forward(static_cast<std::size_t>(base.edge_count()), 0);
    std::vector<std::uint8_t> seen(forward.size(), 0);
    for (const auto& a : arcs) {
        auto idx = base.edge_index(a.tail, a.head);
        if (!idx) throw MalformedInput("arc " + std::to_string(a.tail) + "->" + std::to_string(a.head) + " is not an edge");
        if (seen[*idx]) throw MalformedInput("edge oriented twice");
        seen[*idx] = 1;
        forward[*idx] = a.tail < a.head ? 1 : 0;
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw MalformedInput("orientation is not total");
    return Orientation(std::move(base), std::move(forward));
}

Arc Orientation::arc(int edge_index) const {
    const auto& e = base_.edge(edge_index);
    return forward_.at(static_cast<std::size_t>(edge_index)) ? Arc{e.u, e.v} : Arc{e.v, e.u};
}

std::vector<Arc> Orientation::arcs() const {
    std::vector<Arc> out;
    out.reserve(static_cast<std::size_t>(base_.edge_count()));
    for (int i = 0; i < base_.edge_count(); ++i) out.push_back(arc(i));
    return out;
}

int Orientation::max_out_degree() const {
    return out_.empty() ? 0 : *std::max_element(out_.begin(), out_.end());
}

Signature::Signature(Graph base) : base_(std::move(base)), signs_(static_cast<std::size_t>(base_.edge_count()), 1) {}

Signature::Signature(Graph base, std::vector<std::int8_t> signs) : base_(std::move(base)), signs_(std::move(signs)) {
    if (signs_.size() != static_cast<std::size_t>(base_.edge_count()))
        throw MalformedInput("signature does not cover every edge");
    for (auto s : signs_)
        if (s != 1 && s != -1) throw MalformedInput("signs must be +1 or -1");
}

int Signature::sign(int a, int b) const {
    auto idx = base_.edge_index(a, b);
    if (!idx) throw MalformedInput("unknown edge " + std::to_string(a) + " " + std::to_string(b));
    return signs_[*idx];
}

Signature Signature::restrict_to(const Graph& sub) const {
    std::vector<std::int8_t> s;
    s.reserve(static_cast<std::size_t>(sub.edge_count()));
    for (const auto& e : sub.edges()) s.push_back(static_cast<std::int8_t>(sign(e.u, e.v)));
    return Signature(sub, std::move(s));
}

bool is_matching(const Graph& g, std::span<const Edge> subset) {
    g.indices_of(subset);
    std::vector<std::uint8_t> covered(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& e : subset) {
        if (covered[e.u] || covered[e.v]) return false;
        covered[e.u] = covered[e.v] = 1;
    }
    return true;
}

bool is_forest(const Graph& g, std::span<const Edge> subset) {
    auto idx = g.indices_of(subset);
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) return false;
    DisjointSets ds(g.vertex_count());
    for (const auto& e : subset)
        if (!ds.unite(e.u, e.v)) return false;
    return true;
}

std::optional<std::vector<int>> topological_order(const Orientation& d) {
    const auto& g = d.base();
    int n = g.vertex_count();
    std::vector<int> indeg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) indeg[v] = d.in_degree(v);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (int i = 0; i < g.edge_count(); ++i) {
        auto a = d.arc(i);
        out[a.tail].push_back(a.head);
    }
    std::queue<int> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        order.push_back(v);
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

bool is_acyclic_orientation(const Orientation& d) { return topological_order(d).has_value(); }

DegeneracyResult degeneracy_order(const Graph& g) {
    int n = g.vertex_count();
    DegeneracyResult r;
    if (n == 0) return r;
    std::vector<int> deg(static_cast<std::size_t>(n));
    int maxdeg = 0;
    for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, deg[v] = g.degree(v));
    std::vector<std::vector<int>> bucket(static_cast<std::size_t>(maxdeg) + 1);
    for (int v = n - 1; v >= 0; --v) bucket[deg[v]].push_back(v);
    std::vector<std::uint8_t> removed(static_cast<std::size_t>(n), 0);
    int lo = 0;
    for (int step = 0; step < n; ++step) {
        lo = std::max(0, lo - 1);
        int v = -1;
        while (v < 0) {
            while (bucket[lo].empty()) ++lo;
            int cand = bucket[lo].back();
            bucket[lo].pop_back();
            if (!removed[cand] && deg[cand] == lo) v = cand;
        }
        removed[v] = 1;
        r.order.push_back(v);
        r.degeneracy = std::max(r.degeneracy, deg[v]);
        for (int w : g.neighbors(v)) {
            if (removed[w]) continue;
            bucket[--deg[w]].push_back(w);
        }
    }
    return r;
}

Graph delete_edges(const Graph& g, std::span<const Edge> subset) {
    auto idx = g.indices_of(subset);
    std::vector<std::uint8_t> drop(static_cast<std::size_t>(g.edge_count()), 0);
    for (int i : idx) drop[i] = 1;
    std::vector<Edge> keep;
    for (int i = 0; i < g.edge_count(); ++i)
        if (!drop[i]) keep.push_back(g.edge(i));
    return Graph(g.vertex_count(), std::move(keep));
}

Graph add_edges(const Graph& g, std::span<const Edge> extra) {
    std::vector<Edge> all(g.edges().begin(), g.edges().end());
    all.insert(all.end(), extra.begin(), extra.end());
    return Graph(g.vertex_count(), std::move(all));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local.at(vertices[i]) = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (local[e.u] >= 0 && local[e.v] >= 0) edges.push_back(make_edge(local[e.u], local[e.v]));
    return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = static_cast<int>(out.size()) - 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) e.push_back({a, b});
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a) e.push_back(make_edge(a, (a + 1) % n));
    return Graph(n, std::move(e));
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int a = 0; a + 1 < n; ++a) e.push_back({a, a + 1});
    return Graph(n, std::move(e));
}

Graph wagner_graph() {
    std::vector<Edge> e;
    for (int i = 0; i < 8; ++i) e.push_back(make_edge(i, (i + 1) % 8));
    for (int i = 0; i < 4; ++i) e.push_back({i, i + 4});
    return Graph(8, std::move(e));
}

}  // namespace atcert
