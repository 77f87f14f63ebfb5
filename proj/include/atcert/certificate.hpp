#pragma once

// Certificates for Alon-Tarsi bounds: a removed edge set (empty, a matching or
// a forest), an orientation of what remains, and the out-degree promises made
// at an anchor clique. verify_certificate rechecks all of it from scratch.

#include "atcert/certifier.hpp"
#include "atcert/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace atcert {

/// at5: AT(G) <= 5. at4_matching: AT(G - M) <= 4. at3_forest: AT(G - E(F)) <= 3.
enum class Mode { at5, at4_matching, at3_forest };

std::string_view mode_name(Mode mode);
/// Accepts "at5", "at4-matching", "at3-forest"; throws MalformedInput otherwise.
Mode parse_mode(std::string_view name);
/// Largest out-degree allowed anywhere: 4, 3 or 2.
int mode_bound(Mode mode);
EdgeRole removed_role(Mode mode);

/// Ordered anchor clique with the exact out-degree promised at each vertex.
/// Patterns by mode for (u, v[, w]):
///   at5           0, 1[, 2]
///   at4-matching  0, 0[, 2]   and the matching avoids w
///   at3-forest    0, 0[, 1]   and uw is not in the forest
/// A one-vertex anchor promises out-degree 0.
struct Anchor {
    std::vector<int> vertices;
    std::vector<int> out_degrees;

    friend bool operator==(const Anchor&, const Anchor&) = default;
};

/// The out-degree pattern an anchor of `size` vertices must carry in `mode`.
std::vector<int> anchor_pattern(Mode mode, int size);

struct SignedEdge {
    int u = 0;
    int v = 0;
    int sign = 1;

    friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

struct Certificate {
    Mode mode = Mode::at5;
    std::vector<Edge> removed;           ///< sorted
    std::vector<Arc> arcs;               ///< sorted; orientation of G - removed
    std::vector<int> bounds;             ///< claimed maximum out-degree per vertex
    std::optional<Anchor> anchor;
    std::optional<std::int64_t> diff;    ///< Eulerian difference, when it was computed
    bool acyclic = false;
    std::optional<std::vector<SignedEdge>> signs;

    /// Sorts removed, arcs and signs so that equal certificates serialise equally.
    void normalize();
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Verdict {
    bool accepted = false;
    std::string reason;                 ///< first failed check, empty on accept
    std::vector<std::string> checks;    ///< checks that ran, in order
    std::optional<std::int64_t> diff;   ///< exact difference if it was computed
};

/// Checks, in order: removed-set role, orientation totality over G minus the
/// removed edges, per-vertex bounds, anchor pattern, acyclicity, and when the
/// remainder has at most `exact_limit` edges a nonzero Eulerian difference
/// (signed when a signature is given or carried by the certificate). Never throws
/// on a malformed certificate; it rejects with a reason instead. Throws
/// ResourceLimit when the requested exact count cannot be carried out in 64 bits.
Verdict verify_certificate(const Graph& g, const Certificate& cert, int exact_limit = default_exact_limit,
                           const Signature* signature = nullptr);

/// Canonical JSON text: sorted keys, sorted arrays, trailing newline.
std::string certificate_to_json(const Certificate& cert);
/// Throws MalformedInput on syntax or schema errors.
Certificate certificate_from_json(const std::string& text);

}  // namespace atcert
