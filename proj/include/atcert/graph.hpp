#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace atcert {

/// Undirected edge stored canonically with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Directed edge tail -> head.
struct Arc {
    int tail = 0;
    int head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// The vertex order is the numeric order. Edges are kept sorted, and an edge's
/// index is its position in that sorted list, so two graphs with the same edge
/// set agree on every index.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    /// Throws MalformedInput on loops, duplicates or out-of-range endpoints.
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }

    /// Neighbours of v in increasing order.
    std::span<const int> neighbors(int v) const;
    /// Edge indices incident to v, aligned with neighbors(v).
    std::span<const int> incident_edges(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;

    std::optional<int> edge_index(int a, int b) const;
    bool has_edge(int a, int b) const { return edge_index(a, b).has_value(); }

    /// Index of each edge of `subset`; throws MalformedInput for an unknown edge.
    std::vector<int> indices_of(std::span<const Edge> subset) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offset_;
    std::vector<int> adjacent_;
    std::vector<int> incident_;
};

/// A direction for every edge of a base graph.
class Orientation {
public:
    Orientation() = default;
    /// `forward[e]` true means edge e = {u<v} is directed u -> v.
    Orientation(Graph base, std::vector<std::uint8_t> forward);
    /// Throws MalformedInput unless the arcs cover every edge exactly once.
    static Orientation from_arcs(Graph base, std::span<const Arc> arcs);

    const Graph& base() const noexcept { return base_; }
    Arc arc(int edge_index) const;
    std::vector<Arc> arcs() const;
    int out_degree(int v) const { return out_.at(static_cast<std::size_t>(v)); }
    int in_degree(int v) const { return base_.degree(v) - out_degree(v); }
    std::span<const int> out_degrees() const noexcept { return out_; }
    int max_out_degree() const;

private:
    Graph base_;
    std::vector<std::uint8_t> forward_;
    std::vector<int> out_;
};

/// Per-edge sign in {+1, -1}.
class Signature {
public:
    Signature() = default;
    /// All-positive signature.
    explicit Signature(Graph base);
    Signature(Graph base, std::vector<std::int8_t> signs);

    const Graph& base() const noexcept { return base_; }
    int sign(int edge_index) const { return signs_.at(static_cast<std::size_t>(edge_index)); }
    int sign(int a, int b) const;
    std::span<const std::int8_t> signs() const noexcept { return signs_; }

    /// Signature carried over to a graph whose edges all belong to base().
    Signature restrict_to(const Graph& sub) const;

private:
    Graph base_;
    std::vector<std::int8_t> signs_;
};

enum class EdgeRole { plain, matching, forest };

/// A subset of a graph's edges tagged with the structure it must have.
struct EdgeSet {
    std::vector<Edge> members;
    EdgeRole role = EdgeRole::plain;
};

bool is_matching(const Graph& g, std::span<const Edge> subset);
bool is_forest(const Graph& g, std::span<const Edge> subset);
bool is_acyclic_orientation(const Orientation& d);
/// Topological order (sources first) or nullopt if d has a directed cycle.
std::optional<std::vector<int>> topological_order(const Orientation& d);

struct DegeneracyResult {
    std::vector<int> order;  ///< elimination order
    int degeneracy = 0;
};

/// Repeated minimum-degree removal.
DegeneracyResult degeneracy_order(const Graph& g);

Graph delete_edges(const Graph& g, std::span<const Edge> subset);
Graph add_edges(const Graph& g, std::span<const Edge> extra);

/// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// 8-cycle 0..7 plus the four diagonals i, i+4.
Graph wagner_graph();

}  // namespace atcert
