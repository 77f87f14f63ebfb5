#pragma once

// Exact algebraic oracles: Eulerian sub-digraph parity counts, graph polynomial
// coefficients, Alon-Tarsi numbers and list colourings, for unsigned and signed
// graphs. Every count is exact; anything that would overflow or exceed its size
// limit throws ResourceLimit instead of returning an approximation.

#include "atcert/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace atcert {

inline constexpr int default_exact_limit = 30;
inline constexpr int default_at_limit = 20;

/// Spanning Eulerian sub-digraphs split by parity. For an unsigned count the
/// parity is that of the edge count; for a signed count it is the parity of the
/// number of positive edges. The empty sub-digraph is always even.
struct ParityCount {
    std::int64_t even_count = 0;
    std::int64_t odd_count = 0;
    std::int64_t diff = 0;  ///< even_count - odd_count
};

ParityCount eulerian_diff(const Orientation& d, const Signature* signature = nullptr,
                          int edge_limit = default_exact_limit);

/// Same count over an explicit arc list on vertices 0..n-1. `positive` (optional)
/// flags which arcs count toward the signed parity; empty means every arc counts.
ParityCount eulerian_diff(int n, std::span<const Arc> arcs, std::span<const std::uint8_t> positive = {},
                          int edge_limit = default_exact_limit);

/// Coefficient of prod x_v^{e(v)} in prod_{uv in E, u<v} (x_u - sigma_uv x_v).
std::int64_t coeff_of_monomial(const Graph& g, std::span<const int> exponents, const Signature* signature = nullptr);

bool is_at_orientation(const Orientation& d, const Signature* signature = nullptr,
                       int edge_limit = default_exact_limit);

/// Least k such that some orientation with maximum out-degree < k has a nonzero
/// Eulerian difference. 1 for edgeless graphs.
int alon_tarsi_number(const Graph& g, const Signature* signature = nullptr, int edge_limit = default_at_limit);

using ListAssignment = std::vector<std::vector<int>>;

/// Proper (signed) colouring with c(v) in lists[v], or nullopt if none exists.
/// Throws ResourceLimit once `node_limit` search nodes have been visited.
std::optional<std::vector<int>> find_list_coloring(const Graph& g, const ListAssignment& lists,
                                                   const Signature* signature = nullptr,
                                                   std::int64_t node_limit = 10'000'000);

bool is_proper_coloring(const Graph& g, std::span<const int> coloring, const Signature* signature = nullptr);

/// The symmetric colour set N_k: {0, +-1, ..., +-q} for k = 2q+1 and {+-1, ..., +-q} for k = 2q.
std::vector<int> signed_color_set(int k);

}  // namespace atcert
