#include "atcert/graph_io.hpp"

#include "atcert/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace atcert {

namespace {

struct Token {
    std::string text;
    int column;
};

std::vector<Token> split(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

long long to_int(const Token& t, int line) {
    long long value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || t.text.front() == '+' || t.text.front() == '-')
        throw MalformedInput("expected a nonnegative decimal integer, got '" + t.text + "'", line, t.column);
    return value;
}

}  // namespace

ParsedGraph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::vector<Token> header;
    while (header.empty()) {
        if (!std::getline(in, line)) throw MalformedInput("missing header 'n m'", lineno + 1, 1);
        ++lineno;
        header = split(line);
    }
    if (header.size() != 2) throw MalformedInput("header must be 'n m'", lineno, header.front().column);
    auto n = to_int(header[0], lineno);
    auto m = to_int(header[1], lineno);
    if (n > 1'000'000) throw MalformedInput("vertex count too large", lineno, header[0].column);

    std::vector<Edge> edges;
    std::vector<std::int8_t> signs;
    std::set<Edge> distinct;
    int columns = 0;
    long long seen = 0;
    while (seen < m) {
        if (!std::getline(in, line))
            throw MalformedInput("expected " + std::to_string(m) + " edge lines, found " + std::to_string(seen),
                                 lineno + 1, 1);
        ++lineno;
        auto tok = split(line);
        if (tok.empty()) continue;
        if (tok.size() != 2 && tok.size() != 3) throw MalformedInput("edge line must be 'u v' or 'u v s'", lineno, 1);
        if (columns == 0) columns = static_cast<int>(tok.size());
        if (static_cast<int>(tok.size()) != columns)
            throw MalformedInput("mixed signed and unsigned edge lines", lineno, tok.back().column);
        auto u = to_int(tok[0], lineno);
        auto v = to_int(tok[1], lineno);
        if (u >= n) throw MalformedInput("vertex out of range", lineno, tok[0].column);
        if (v >= n) throw MalformedInput("vertex out of range", lineno, tok[1].column);
        if (u == v) throw MalformedInput("loop edge", lineno, tok[1].column);
        if (u > v) throw MalformedInput("edge endpoints must satisfy u < v", lineno, tok[1].column);
        if (columns == 3) {
            if (tok[2].text == "+")
                signs.push_back(1);
            else if (tok[2].text == "-")
                signs.push_back(-1);
            else
                throw MalformedInput("sign must be '+' or '-'", lineno, tok[2].column);
        }
        Edge e{static_cast<int>(u), static_cast<int>(v)};
        if (!distinct.insert(e).second) throw MalformedInput("duplicate edge", lineno, tok[0].column);
        edges.push_back(e);
        ++seen;
    }
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = split(line);
        if (!tok.empty()) throw MalformedInput("unexpected content after the last edge", lineno, tok.front().column);
    }

    ParsedGraph out;
    std::vector<Edge> order = edges;
    out.graph = Graph(static_cast<int>(n), std::move(order));
    if (columns == 3) {
        std::vector<std::int8_t> aligned(static_cast<std::size_t>(out.graph.edge_count()));
        for (std::size_t k = 0; k < edges.size(); ++k) aligned[*out.graph.edge_index(edges[k].u, edges[k].v)] = signs[k];
        out.signature = Signature(out.graph, std::move(aligned));
    }
    return out;
}

ParsedGraph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

ParsedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot open " + path);
    return parse_graph(in);
}

std::string format_graph(const Graph& g, const Signature* signature) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        out << e.u << ' ' << e.v;
        if (signature) out << ' ' << (signature->sign(i) > 0 ? '+' : '-');
        out << '\n';
    }
    return out.str();
}

}  // namespace atcert
