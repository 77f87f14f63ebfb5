#pragma once

// Structural analysis of K5-minor-free graphs: Wagner graph recognition, clique
// separators of size <= 3, decomposition into planar and Wagner pieces glued by
// clique-sums, and K5-minor detection.

#include "atcert/graph.hpp"
#include "atcert/planarity.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace atcert {

bool is_wagner(const Graph& g);

/// Isomorphism from the standard Wagner graph (cycle 0..7 plus diagonals i,i+4)
/// onto g: result[i] is the vertex of g playing standard vertex i. When `fixed`
/// is given, each pair (standard vertex, vertex of g) is forced.
std::optional<std::vector<int>> wagner_labeling(const Graph& g,
                                                const std::vector<std::pair<int, int>>& fixed = {});

/// A vertex set whose removal disconnects the graph, with at least two
/// components of the remainder attached to every separator vertex.
struct CliqueSeparator {
    std::vector<int> vertices;  ///< sorted
    std::vector<int> side_a;    ///< the first full component, sorted
    std::vector<int> side_b;    ///< every other component, sorted
    bool is_clique = false;     ///< separator already complete in g
};

/// Every minimal separator of size <= max_size, cliques first, each group in
/// lexicographic order of the vertex set. Throws PreconditionError if g is disconnected.
std::vector<CliqueSeparator> clique_separators(const Graph& g, int max_size = 3);

/// First entry of clique_separators(g, max_size), if any.
std::optional<CliqueSeparator> find_clique_separator(const Graph& g, int max_size = 3);

/// True when completing `sep` to a clique on the side opposite `other_side`
/// is realisable as a minor of g through `other_side`.
bool completion_is_minor(const Graph& g, const std::vector<int>& sep, const std::vector<int>& other_side);

enum class LeafKind { planar, wagner };

struct SumTreeNode {
    bool is_leaf = true;
    // leaf
    LeafKind kind = LeafKind::planar;
    Graph piece;                               ///< local labels 0..k-1
    std::vector<int> vertex_map;               ///< local -> input vertex
    std::vector<Edge> virtual_edges;           ///< input labels; in the piece but not in the input
    std::optional<PlaneEmbedding> embedding;   ///< planar leaves only
    // internal
    std::vector<int> clique;                   ///< input labels
    int left = -1;
    int right = -1;
};

struct SumTree {
    std::vector<SumTreeNode> nodes;
    int root = -1;

    std::vector<int> leaves() const;
    /// Union of leaf edges (input labels) minus virtual edges.
    std::vector<Edge> reassemble() const;
};

struct K5MinorVerdict {
    std::vector<int> piece;  ///< input vertices of the piece that admits no further split
    std::string reason;
};

using DecomposeResult = std::variant<SumTree, K5MinorVerdict>;

/// Splits a connected graph along <= 3-clique separators until every piece is
/// planar or the Wagner graph; reports a K5 minor when that is impossible.
DecomposeResult decompose(const Graph& g);

/// Decision through decompose, component by component.
bool has_k5_minor(const Graph& g);

/// Independent brute force: partitions each component into five connected,
/// pairwise adjacent parts. Throws ResourceLimit above `vertex_limit` vertices.
bool has_k5_minor_bruteforce(const Graph& g, int vertex_limit = 12);

}  // namespace atcert
