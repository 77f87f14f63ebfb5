#pragma once

// Construction of certificates: boundary-constrained planar pieces, the vertex
// lift for anchor triangles, the Wagner leaf, gluing along clique-sums and the
// recursive solver that ties them together. Every certificate leaving this
// module has been re-verified; a failed verification raises InternalError.

#include "atcert/certificate.hpp"
#include "atcert/decompose.hpp"
#include "atcert/errors.hpp"
#include "atcert/graph.hpp"
#include "atcert/planarity.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace atcert {

/// Raised by solve when the input has a K5 minor; carries the decomposer's verdict.
class K5MinorDetected : public Error {
public:
    explicit K5MinorDetected(K5MinorVerdict verdict)
        : Error("K5 minor: " + verdict.reason), verdict_(std::move(verdict)) {}
    const K5MinorVerdict& verdict() const noexcept { return verdict_; }

private:
    K5MinorVerdict verdict_;
};

struct SolveOptions {
    int exact_limit = default_exact_limit;
    std::int64_t node_budget = 4'000'000;  ///< per leaf search
};

/// Certificate for a plane graph whose face `boundary` (v1, ..., vm, either
/// direction) is taken as the outer cycle:
///   at5           d+(v1)=0, d+(v2)=1, d+(vi)<=2, interior <= 4
///   at4-matching  d+(v1)=d+(v2)=0, d+(vi) <= 2 - d_M(vi), interior <= 3
///   at3-forest    d+(v1)=d+(v2)=0, d+(vi)=1, interior <= 2, acyclic
/// The anchor of the result is (v1, v2).
Certificate planar_boundary_cert(const PlaneEmbedding& emb, std::span<const int> boundary, Mode mode,
                                 const Signature* signature = nullptr, const SolveOptions& options = {});

/// Certificate anchored on the facial triangle (v1, v2, v3) for at4-matching or
/// at3-forest, built by solving G - v3 and adding v3 back with arcs u -> v3 from
/// its other neighbours and v3 -> v1 (and v3 -> v2 for the matching mode; for the
/// forest mode v2v3 joins the forest).
Certificate triangle_lift(const PlaneEmbedding& emb, std::array<int, 3> triangle, Mode mode,
                          const Signature* signature = nullptr, const SolveOptions& options = {});

/// Certificate for a graph isomorphic to the Wagner graph anchored on the edge
/// (u, v): acyclic with maximum out-degree 3 for at5; otherwise the anchor edge
/// and two far rim edges are removed and the rest is acyclic with maximum out-degree 2.
Certificate wagner_leaf_cert(const Graph& w, int u, int v, Mode mode, const Signature* signature = nullptr,
                             const SolveOptions& options = {});

/// Combines cert1 (over piece 1) and cert2 (over piece 2) into a certificate over
/// g. map1 and map2 send piece vertices to g vertices; `clique` lists the shared
/// vertices in the order of cert2's anchor. Arcs and removed edges of cert2 inside
/// the clique are dropped. Throws PreconditionError when cert2 breaks the clique
/// pattern (d+(x1)=0, d+(x2)<=1, d+(x3)<=2, arcs only into the clique), when the
/// removed sets clash, or when the pieces do not cover g exactly.
Certificate glue(const Graph& g, const Certificate& cert1, std::span<const int> map1, const Certificate& cert2,
                 std::span<const int> map2, std::span<const int> clique);

/// Certificate for g in the given mode. `anchor` is an ordered edge or triangle;
/// absent, the smallest edge is used. Throws K5MinorDetected, PreconditionError
/// for a bad anchor and ResourceLimit when a piece search runs out of budget.
Certificate solve(const Graph& g, Mode mode, const std::optional<std::vector<int>>& anchor = std::nullopt,
                  const Signature* signature = nullptr, const SolveOptions& options = {});

}  // namespace atcert
