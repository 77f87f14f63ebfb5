#pragma once

#include "atcert/graph.hpp"

#include <optional>
#include <vector>

namespace atcert {

/// Combinatorial embedding given as a rotation system.
///
/// rotation[v] lists the neighbours of v in cyclic order. A face is traced by
/// following dart (u, v) to (v, w) where w follows u in rotation[v]. The outer
/// face is just a designated face index.
struct PlaneEmbedding {
    Graph base;
    std::vector<std::vector<int>> rotation;
    int outer_face = 0;

    /// Each face as the vertex sequence of its boundary walk.
    std::vector<std::vector<int>> faces() const;
    /// Index of the face whose boundary walk uses dart tail -> head.
    int face_of_dart(int tail, int head) const;
    std::vector<int> outer_boundary() const;

    /// Rotation covers each vertex's incident edges exactly, and
    /// |V| - |E| + |F| = 1 + (number of components).
    bool is_valid() const;
};

/// Embedding of g, or nullopt when g is not planar.
std::optional<PlaneEmbedding> planar_embedding(const Graph& g);

inline bool is_planar(const Graph& g) { return planar_embedding(g).has_value(); }

}  // namespace atcert
