#pragma once

// Constrained search for (removed set, orientation) pairs. Phase A builds
// acyclic orientations by peeling sources; Phase B, used only when acyclicity
// is not required, backtracks over every edge and keeps an orientation once its
// Eulerian difference is nonzero.

#include "atcert/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace atcert::detail {

struct SearchSpec {
    Graph g;
    EdgeRole removal = EdgeRole::plain;   ///< plain: nothing may be removed
    std::vector<int> lo, hi;              ///< out-degree window per vertex
    std::vector<std::uint8_t> penalty;    ///< out-degree plus matching degree must stay <= hi
    std::vector<std::uint8_t> may_cover;  ///< removed edges may touch the vertex
    std::vector<std::uint8_t> removable;  ///< per edge
    bool acyclic = false;
    std::vector<std::uint8_t> positive;   ///< per edge sign flags for the signed count; empty if unsigned
    std::int64_t node_budget = 4'000'000;

    /// Unconstrained spec: window [0, bound], everything removable per `role`.
    static SearchSpec open(const Graph& g, EdgeRole role, int bound);
};

struct SearchResult {
    std::vector<Edge> removed;
    std::vector<Arc> arcs;
    bool acyclic = false;
    std::int64_t diff = 1;
};

/// nullopt when the space is exhausted; ResourceLimit when the budget runs out.
std::optional<SearchResult> search(const SearchSpec& spec);

}  // namespace atcert::detail
