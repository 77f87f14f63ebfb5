#include "atcert/decompose.hpp"

#include "atcert/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

namespace atcert {

namespace {

// Components of g - removed, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> components_without(const Graph& g, const std::vector<std::uint8_t>& removed) {
    int n = g.vertex_count();
    std::vector<std::uint8_t> seen(removed);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        out.emplace_back();
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool attached_to_all(const Graph& g, const std::vector<int>& comp, const std::vector<int>& sep) {
    for (int s : sep) {
        bool hit = false;
        for (int v : comp)
            if (g.has_edge(s, v)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

std::optional<CliqueSeparator> try_separator(const Graph& g, const std::vector<int>& sep) {
    std::vector<std::uint8_t> removed(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int s : sep) removed[s] = 1;
    auto comps = components_without(g, removed);
    if (comps.size() < 2) return std::nullopt;
    int full = 0, first_full = -1;
    for (int i = 0; i < static_cast<int>(comps.size()); ++i)
        if (attached_to_all(g, comps[i], sep)) {
            ++full;
            if (first_full < 0) first_full = i;
        }
    if (full < 2) return std::nullopt;
    CliqueSeparator out;
    out.vertices = sep;
    out.side_a = comps[first_full];
    for (int i = 0; i < static_cast<int>(comps.size()); ++i)
        if (i != first_full) out.side_b.insert(out.side_b.end(), comps[i].begin(), comps[i].end());
    std::sort(out.side_b.begin(), out.side_b.end());
    out.is_clique = true;
    for (std::size_t i = 0; i < sep.size(); ++i)
        for (std::size_t j = i + 1; j < sep.size(); ++j)
            if (!g.has_edge(sep[i], sep[j])) out.is_clique = false;
    return out;
}

// Some vertex splits the terminals so that no component of the rest holds two of them.
bool has_terminal_splitter(const Graph& h, const std::vector<int>& terminals) {
    int n = h.vertex_count();
    for (int v = 0; v < n; ++v) {
        std::vector<std::uint8_t> removed(static_cast<std::size_t>(n), 0);
        removed[v] = 1;
        auto comps = components_without(h, removed);
        bool splits = true;
        for (const auto& c : comps) {
            int count = 0;
            for (int t : terminals)
                if (t != v && std::binary_search(c.begin(), c.end(), t)) ++count;
            if (count > 1) {
                splits = false;
                break;
            }
        }
        if (splits) return true;
    }
    return false;
}

Graph piece_graph(const Graph& g, const std::vector<int>& verts, const std::vector<int>& sep) {
    auto local = induced_subgraph(g, verts);
    std::vector<Edge> extra;
    for (std::size_t i = 0; i < sep.size(); ++i)
        for (std::size_t j = i + 1; j < sep.size(); ++j) {
            auto a = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), sep[i]) - verts.begin());
            auto b = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), sep[j]) - verts.begin());
            if (!local.has_edge(a, b)) extra.push_back(make_edge(a, b));
        }
    return extra.empty() ? local : add_edges(local, extra);
}

std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

bool is_wagner(const Graph& g) { return wagner_labeling(g).has_value(); }

std::optional<std::vector<int>> wagner_labeling(const Graph& g, const std::vector<std::pair<int, int>>& fixed) {
    if (g.vertex_count() != 8 || g.edge_count() != 12) return std::nullopt;
    for (int v = 0; v < 8; ++v)
        if (g.degree(v) != 3) return std::nullopt;
    static const Graph w = wagner_graph();
    std::vector<int> map(8, -1), forced(8, -1);
    std::vector<std::uint8_t> used(8, 0);
    for (auto [s, t] : fixed) {
        if (s < 0 || s >= 8 || t < 0 || t >= 8) return std::nullopt;
        forced[s] = t;
    }
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == 8) return true;
        for (int t = 0; t < 8; ++t) {
            if (used[t] || (forced[i] >= 0 && forced[i] != t)) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (w.has_edge(i, j) != g.has_edge(t, map[j])) ok = false;
            if (!ok) continue;
            map[i] = t;
            used[t] = 1;
            if (rec(i + 1)) return true;
            used[t] = 0;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return map;
}

std::vector<CliqueSeparator> clique_separators(const Graph& g, int max_size) {
    if (!is_connected(g)) throw PreconditionError("clique separator search needs a connected graph");
    int n = g.vertex_count();
    std::vector<CliqueSeparator> cliques, others;
    auto consider = [&](std::vector<int> sep) {
        if (auto s = try_separator(g, sep)) (s->is_clique ? cliques : others).push_back(std::move(*s));
    };
    for (int a = 0; a < n; ++a) {
        if (max_size >= 1) consider({a});
        for (int b = a + 1; b < n && max_size >= 2; ++b) {
            consider({a, b});
            for (int c = b + 1; c < n && max_size >= 3; ++c) consider({a, b, c});
        }
    }
    cliques.insert(cliques.end(), std::make_move_iterator(others.begin()), std::make_move_iterator(others.end()));
    return cliques;
}

std::optional<CliqueSeparator> find_clique_separator(const Graph& g, int max_size) {
    auto all = clique_separators(g, max_size);
    if (all.empty()) return std::nullopt;
    return all.front();
}

bool completion_is_minor(const Graph& g, const std::vector<int>& sep, const std::vector<int>& other_side) {
    int missing = 0;
    for (std::size_t i = 0; i < sep.size(); ++i)
        for (std::size_t j = i + 1; j < sep.size(); ++j)
            if (!g.has_edge(sep[i], sep[j])) ++missing;
    if (missing == 0) return true;

    auto verts = merged(other_side, sep);
    auto h = induced_subgraph(g, verts);
    std::vector<int> terminals;
    for (int s : sep) terminals.push_back(static_cast<int>(std::lower_bound(verts.begin(), verts.end(), s) - verts.begin()));

    // One component of the other side attached to every separator vertex,
    // contracted onto the vertex shared by the missing edges, supplies up to two
    // missing edges of a triangle.
    std::vector<std::uint8_t> removed(static_cast<std::size_t>(h.vertex_count()), 0);
    for (int t : terminals) removed[t] = 1;
    bool has_full = false;
    for (const auto& c : components_without(h, removed))
        if (attached_to_all(h, c, terminals)) has_full = true;
    if (!has_full) return false;
    if (missing <= 2) return true;
    // All three edges missing: a rooted triangle minor exists exactly when no
    // single vertex separates the terminals from each other.
    return !has_terminal_splitter(h, terminals);
}

std::vector<int> SumTree::leaves() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
        if (nodes[i].is_leaf) out.push_back(i);
    return out;
}

std::vector<Edge> SumTree::reassemble() const {
    std::set<Edge> all, virt;
    for (const auto& node : nodes) {
        if (!node.is_leaf) continue;
        for (const auto& e : node.piece.edges()) all.insert(make_edge(node.vertex_map[e.u], node.vertex_map[e.v]));
        virt.insert(node.virtual_edges.begin(), node.virtual_edges.end());
    }
    std::vector<Edge> out;
    for (const auto& e : all)
        if (!virt.count(e)) out.push_back(e);
    return out;
}

namespace {

struct Decomposer {
    const Graph& input;
    SumTree tree;
    std::optional<K5MinorVerdict> verdict;
    long calls = 0;

    int run(const Graph& piece, const std::vector<int>& map) {
        if (++calls > 200000) throw ResourceLimit("decomposition backtracking budget exhausted");
        if (auto emb = planar_embedding(piece)) return leaf(piece, map, LeafKind::planar, std::move(emb));
        if (is_wagner(piece)) return leaf(piece, map, LeafKind::wagner, std::nullopt);

        for (const auto& sep : clique_separators(piece, 3)) {
            // When both completions are minors of the piece, the pieces are
            // K5-minor-free iff the piece is, so a failure below is final.
            bool exact = completion_is_minor(piece, sep.vertices, sep.side_b) &&
                         completion_is_minor(piece, sep.vertices, sep.side_a);
            auto mark = tree.nodes.size();
            tree.nodes.emplace_back();
            tree.nodes[mark].is_leaf = false;
            for (int s : sep.vertices) tree.nodes[mark].clique.push_back(map[s]);

            auto va = merged(sep.side_a, sep.vertices), vb = merged(sep.side_b, sep.vertices);
            int left = run(piece_graph(piece, va, sep.vertices), compose(map, va));
            int right = left < 0 ? -1 : run(piece_graph(piece, vb, sep.vertices), compose(map, vb));
            if (left >= 0 && right >= 0) {
                tree.nodes[mark].left = left;
                tree.nodes[mark].right = right;
                return static_cast<int>(mark);
            }
            if (exact) return -1;
            tree.nodes.resize(mark);
            verdict.reset();
        }
        verdict = K5MinorVerdict{map, "piece is neither planar nor the Wagner graph and has no admissible clique separator of size <= 3"};
        std::sort(verdict->piece.begin(), verdict->piece.end());
        return -1;
    }

    static std::vector<int> compose(const std::vector<int>& map, const std::vector<int>& local) {
        std::vector<int> out;
        out.reserve(local.size());
        for (int v : local) out.push_back(map[v]);
        return out;
    }

    int leaf(const Graph& piece, const std::vector<int>& map, LeafKind kind, std::optional<PlaneEmbedding> emb) {
        SumTreeNode node;
        node.is_leaf = true;
        node.kind = kind;
        node.piece = piece;
        node.vertex_map = map;
        node.embedding = std::move(emb);
        for (const auto& e : piece.edges()) {
            auto ge = make_edge(map[e.u], map[e.v]);
            if (!input.has_edge(ge.u, ge.v)) node.virtual_edges.push_back(ge);
        }
        tree.nodes.push_back(std::move(node));
        return static_cast<int>(tree.nodes.size()) - 1;
    }
};

}  // namespace

DecomposeResult decompose(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("decompose needs a connected graph");
    Decomposer d{g, {}, std::nullopt};
    std::vector<int> identity(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) identity[v] = v;
    int root = d.run(g, identity);
    if (root < 0) return *d.verdict;
    d.tree.root = root;
    return std::move(d.tree);
}

bool has_k5_minor(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 5) continue;
        auto sub = induced_subgraph(g, comp);
        if (sub.edge_count() < 10) continue;
        if (std::holds_alternative<K5MinorVerdict>(decompose(sub))) return true;
    }
    return false;
}

bool has_k5_minor_bruteforce(const Graph& g, int vertex_limit) {
    for (const auto& comp : connected_components(g)) {
        int k = static_cast<int>(comp.size());
        if (k < 5) continue;
        if (k > vertex_limit)
            throw ResourceLimit("brute-force minor search limited to " + std::to_string(vertex_limit) + " vertices");
        auto sub = induced_subgraph(g, comp);
        if (sub.edge_count() < 10) continue;
        std::vector<std::uint32_t> adj(static_cast<std::size_t>(k), 0);
        for (const auto& e : sub.edges()) {
            adj[e.u] |= 1U << e.v;
            adj[e.v] |= 1U << e.u;
        }
        auto connected = [&](std::uint32_t block) {
            std::uint32_t reach = block & (~block + 1);
            for (;;) {
                std::uint32_t grow = reach;
                for (int v = 0; v < k; ++v)
                    if (reach >> v & 1U) grow |= adj[v] & block;
                if (grow == reach) break;
                reach = grow;
            }
            return reach == block;
        };
        auto touches = [&](std::uint32_t a, std::uint32_t b) {
            for (int v = 0; v < k; ++v)
                if ((a >> v & 1U) && (adj[v] & b)) return true;
            return false;
        };
        // In a connected graph any K5 model extends to a partition of all vertices
        // into five connected, pairwise adjacent parts.
        std::uint32_t block[5] = {};
        bool found = false;
        std::function<void(int, int)> rec = [&](int v, int used) {
            if (found) return;
            if (k - v < 5 - used) return;
            if (v == k) {
                for (int i = 0; i < 5; ++i)
                    if (!connected(block[i])) return;
                for (int i = 0; i < 5; ++i)
                    for (int j = i + 1; j < 5; ++j)
                        if (!touches(block[i], block[j])) return;
                found = true;
                return;
            }
            for (int b = 0; b < std::min(used + 1, 5); ++b) {
                block[b] |= 1U << v;
                rec(v + 1, std::max(used, b + 1));
                block[b] &= ~(1U << v);
            }
        };
        rec(0, 0);
        if (found) return true;
    }
    return false;
}

}  // namespace atcert
