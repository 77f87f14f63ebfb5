#pragma once

// Reproducible corpus graphs. Every generator is a pure function of its
// arguments; the random stream is std::mt19937_64 reduced by modulo, so output
// does not depend on the standard library's distribution implementations.

#include "atcert/graph.hpp"

#include <cstdint>
#include <string_view>

namespace atcert {

enum class CorpusKind { planar, cliquesum, wagner, k5 };

std::string_view kind_name(CorpusKind kind);
/// Throws MalformedInput for an unknown name.
CorpusKind parse_kind(std::string_view name);

/// planar: a plane triangulation grown by face splitting, then random edge
///         deletions that keep it connected.
/// cliquesum: planar pieces and Wagner graphs glued on random 1-, 2- and
///         3-cliques, with random deletion of clique edges.
/// wagner: the Wagner graph under a random relabelling (n is ignored).
/// k5: K5 with a random tree hanging off it, n >= 5.
/// Vertices are relabelled by a random permutation. Throws PreconditionError for n < 1.
Graph generate(CorpusKind kind, int n, std::uint64_t seed);

/// Independent fair signs per edge.
Signature random_signature(const Graph& g, std::uint64_t seed);

}  // namespace atcert
