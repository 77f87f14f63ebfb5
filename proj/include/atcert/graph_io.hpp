#pragma once

#include "atcert/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace atcert {

struct ParsedGraph {
    Graph graph;
    std::optional<Signature> signature;  ///< present iff edge lines carry a sign column
};

/// Reads the text format: a header `n m`, then m lines `u v` (0 <= u < v < n),
/// optionally `u v s` with s in {+,-}. All lines must agree on the column count.
/// Throws MalformedInput with the offending line and column.
ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_string(const std::string& text);
ParsedGraph read_graph_file(const std::string& path);

std::string format_graph(const Graph& g, const Signature* signature = nullptr);

}  // namespace atcert
