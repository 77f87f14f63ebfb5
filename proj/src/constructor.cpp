#include "atcert/constructor.hpp"

#include "frontier.hpp"
#include "search.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace atcert {

namespace {

using detail::SearchResult;
using detail::SearchSpec;

std::vector<std::uint8_t> positive_flags(const Graph& g, const Signature* sig) {
    std::vector<std::uint8_t> out;
    if (!sig) return out;
    if (!(sig->base() == g)) throw PreconditionError("signature is over a different graph");
    for (int i = 0; i < g.edge_count(); ++i) out.push_back(sig->sign(i) > 0 ? 1 : 0);
    return out;
}

std::vector<SignedEdge> sign_list(const Signature& sig) {
    std::vector<SignedEdge> out;
    for (int i = 0; i < sig.base().edge_count(); ++i) {
        const auto& e = sig.base().edge(i);
        out.push_back({e.u, e.v, sig.sign(i)});
    }
    return out;
}

// Signs of a piece whose vertex i is map[i] in the parent; edges the parent
// lacks (completed clique edges) get +1, which never matters because no
// Eulerian sub-digraph of an anchored piece uses them.
std::optional<Signature> piece_signature(const Graph& parent, const Signature* sig, const Graph& piece,
                                         std::span<const int> map) {
    if (!sig) return std::nullopt;
    std::vector<std::int8_t> s;
    for (const auto& e : piece.edges()) {
        auto idx = parent.edge_index(map[e.u], map[e.v]);
        s.push_back(static_cast<std::int8_t>(idx ? sig->sign(*idx) : 1));
    }
    return Signature(piece, std::move(s));
}

const Signature* ptr(const std::optional<Signature>& s) { return s ? &*s : nullptr; }

Anchor make_anchor(Mode mode, std::vector<int> vertices) {
    auto pattern = anchor_pattern(mode, static_cast<int>(vertices.size()));
    return Anchor{std::move(vertices), std::move(pattern)};
}

Certificate from_result(Mode mode, const SearchResult& r, std::vector<int> bounds, std::optional<Anchor> anchor,
                        const Signature* sig) {
    Certificate c;
    c.mode = mode;
    c.removed = r.removed;
    c.arcs = r.arcs;
    c.bounds = std::move(bounds);
    c.anchor = std::move(anchor);
    c.acyclic = r.acyclic;
    c.diff = r.diff;
    if (sig) c.signs = sign_list(*sig);
    c.normalize();
    return c;
}

void require_valid(const Graph& g, const Certificate& c, const Signature* sig, const char* what) {
    auto v = verify_certificate(g, c, default_exact_limit, sig);
    if (!v.accepted) throw InternalError(std::string(what) + " produced a certificate that fails verification: " + v.reason);
}

bool is_face(const PlaneEmbedding& emb, std::span<const int> b) {
    const auto k = b.size();
    for (const auto& f : emb.faces()) {
        if (f.size() != k) continue;
        for (std::size_t s = 0; s < k; ++s) {
            bool fwd = true, bwd = true;
            for (std::size_t i = 0; i < k; ++i) {
                if (f[(s + i) % k] != b[i]) fwd = false;
                if (f[(s + k - i) % k] != b[i]) bwd = false;
            }
            if (fwd || bwd) return true;
        }
    }
    return false;
}

SearchSpec anchored_spec(const Graph& g, Mode mode, const std::vector<int>& anchor, const Signature* sig,
                         const SolveOptions& opt) {
    auto s = SearchSpec::open(g, removed_role(mode), mode_bound(mode));
    if (!anchor.empty()) {
        auto pattern = anchor_pattern(mode, static_cast<int>(anchor.size()));
        for (std::size_t i = 0; i < anchor.size(); ++i) s.lo[anchor[i]] = s.hi[anchor[i]] = pattern[i];
        if (anchor.size() == 3 && mode == Mode::at4_matching) s.may_cover[anchor[2]] = 0;
        if (anchor.size() == 3 && mode == Mode::at3_forest) s.removable[*g.edge_index(anchor[0], anchor[2])] = 0;
    }
    s.positive = positive_flags(g, sig);
    s.node_budget = opt.node_budget;
    return s;
}

// Direct search against the anchored contract; the fallback for every piece.
Certificate direct_cert(const Graph& g, Mode mode, const std::vector<int>& anchor, const Signature* sig,
                        const SolveOptions& opt) {
    auto spec = anchored_spec(g, mode, anchor, sig, opt);
    auto r = detail::search(spec);
    if (!r) throw InternalError("no certificate satisfies the anchored contract on a piece with " +
                                std::to_string(g.vertex_count()) + " vertices");
    std::optional<Anchor> a;
    if (!anchor.empty()) a = make_anchor(mode, anchor);
    auto c = from_result(mode, *r, spec.hi, std::move(a), sig);
    require_valid(g, c, sig, "direct search");
    return c;
}

// Certificate over n vertices that places piece vertex i at map[i].
Certificate relabel(const Certificate& c, std::span<const int> map, int n) {
    Certificate out;
    out.mode = c.mode;
    for (const auto& e : c.removed) out.removed.push_back(make_edge(map[e.u], map[e.v]));
    for (const auto& a : c.arcs) out.arcs.push_back(Arc{map[a.tail], map[a.head]});
    out.bounds.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < c.bounds.size(); ++i) out.bounds[map[i]] = c.bounds[i];
    if (c.anchor) {
        Anchor a = *c.anchor;
        for (auto& v : a.vertices) v = map[v];
        out.anchor = std::move(a);
    }
    out.acyclic = c.acyclic;
    out.diff = c.diff;
    return out;
}

std::optional<std::int64_t> diff_product(const std::optional<std::int64_t>& a, const std::optional<std::int64_t>& b) {
    if (!a || !b) return std::nullopt;
    return detail::checked_mul(*a, *b);
}

std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

int local_index(const std::vector<int>& sorted, int v) {
    return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

// The face walk through dart u -> v, starting at u.
std::vector<int> face_from_dart(const PlaneEmbedding& emb, int u, int v) {
    auto walk = emb.faces().at(static_cast<std::size_t>(emb.face_of_dart(u, v)));
    for (std::size_t i = 0; i < walk.size(); ++i)
        if (walk[i] == u && walk[(i + 1) % walk.size()] == v) {
            std::rotate(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(i), walk.end());
            return walk;
        }
    throw InternalError("face walk does not contain its own dart");
}

bool is_simple_cycle(const std::vector<int>& walk) {
    if (walk.size() < 3) return false;
    std::set<int> seen(walk.begin(), walk.end());
    return seen.size() == walk.size();
}

class Solver {
public:
    Solver(Mode mode, const SolveOptions& opt) : mode_(mode), opt_(opt) {}

    Certificate run(const Graph& g, std::vector<int> anchor, const Signature* sig) {
        const int n = g.vertex_count();
        if (g.edge_count() == 0) return trivial(n);
        if (!is_connected(g)) return by_components(g, anchor, sig);
        if (is_wagner(g)) {
            if (anchor.empty()) anchor = {g.edge(0).u, g.edge(0).v};
            return wagner_leaf_cert(g, anchor[0], anchor[1], mode_, sig, opt_);
        }
        if (auto c = split(g, anchor, sig)) return *c;
        return leaf(g, anchor, sig);
    }

private:
    Mode mode_;
    SolveOptions opt_;

    Certificate trivial(int n) const {
        Certificate c;
        c.mode = mode_;
        c.bounds.assign(static_cast<std::size_t>(n), 0);
        c.acyclic = true;
        c.diff = 1;
        return c;
    }

    Certificate by_components(const Graph& g, const std::vector<int>& anchor, const Signature* sig) {
        Certificate out = trivial(g.vertex_count());
        for (const auto& comp : connected_components(g)) {
            auto sub = induced_subgraph(g, comp);
            std::vector<int> local;
            for (int a : anchor)
                if (std::binary_search(comp.begin(), comp.end(), a)) local.push_back(local_index(comp, a));
            if (local.size() != anchor.size()) local.clear();
            auto ssig = piece_signature(g, sig, sub, comp);
            auto c = relabel(run(sub, local, ptr(ssig)), comp, g.vertex_count());
            out.removed.insert(out.removed.end(), c.removed.begin(), c.removed.end());
            out.arcs.insert(out.arcs.end(), c.arcs.begin(), c.arcs.end());
            for (int v : comp) out.bounds[v] = c.bounds[v];
            if (!local.empty()) out.anchor = c.anchor;
            out.acyclic = out.acyclic && c.acyclic;
            out.diff = diff_product(out.diff, c.diff);
        }
        out.normalize();
        return out;
    }

    std::optional<Certificate> split(const Graph& g, const std::vector<int>& anchor, const Signature* sig) {
        for (const auto& sep : clique_separators(g, 3)) {
            const auto& s = sep.vertices;
            bool in_b = std::any_of(anchor.begin(), anchor.end(), [&](int a) {
                return std::binary_search(sep.side_b.begin(), sep.side_b.end(), a);
            });
            const auto& x = in_b ? sep.side_b : sep.side_a;
            const auto& y = in_b ? sep.side_a : sep.side_b;
            auto xv = merged(x, s), yv = merged(y, s);

            // The far piece gets its separator completed to a clique. Unless the
            // near side realises that completion as a minor, make sure the
            // completed piece has not gained a K5 minor.
            auto g2 = induced_subgraph(g, yv);
            std::vector<Edge> extra;
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j) {
                    int a = local_index(yv, s[i]), b = local_index(yv, s[j]);
                    if (!g2.has_edge(a, b)) extra.push_back(make_edge(a, b));
                }
            if (!extra.empty()) {
                g2 = add_edges(g2, extra);
                if (!completion_is_minor(g, s, x) && has_k5_minor(g2)) continue;
            }
            auto g1 = induced_subgraph(g, xv);

            std::vector<int> a1;
            for (int a : anchor) a1.push_back(local_index(xv, a));
            auto sig1 = piece_signature(g, sig, g1, xv);
            auto c1 = run(g1, a1, ptr(sig1));

            std::vector<int> a2;
            int y_vertex = -1;
            if (s.size() == 1) {
                // A cut vertex x: anchor the far piece on x and its smallest neighbour there.
                for (int w : g.neighbors(s[0]))
                    if (std::binary_search(y.begin(), y.end(), w)) {
                        y_vertex = w;
                        break;
                    }
                a2 = {local_index(yv, s[0]), local_index(yv, y_vertex)};
            } else {
                for (int v : s) a2.push_back(local_index(yv, v));
            }
            auto sig2 = piece_signature(g, sig, g2, yv);
            auto c2 = run(g2, a2, ptr(sig2));
            if (s.size() == 1) {
                int lx = a2[0], ly = a2[1];
                if (mode_ == Mode::at4_matching) {
                    // x may be matched on the near side, so xy leaves the matching
                    // and becomes y -> x; x stays a sink.
                    auto it = std::find(c2.removed.begin(), c2.removed.end(), make_edge(lx, ly));
                    if (it == c2.removed.end()) throw InternalError("cut-vertex anchor edge is not matched");
                    c2.removed.erase(it);
                    c2.arcs.push_back(Arc{ly, lx});
                    c2.bounds[ly] = std::max(c2.bounds[ly], 1);
                }
                c2.anchor = Anchor{{lx}, {0}};
            }
            auto out = glue(g, c1, xv, c2, yv, s);
            if (anchor.empty()) out.anchor.reset();
            return out;
        }
        return std::nullopt;
    }

    Certificate leaf(const Graph& g, std::vector<int> anchor, const Signature* sig) {
        if (anchor.empty()) anchor = {g.edge(0).u, g.edge(0).v};
        if (auto emb = planar_embedding(g)) {
            if (anchor.size() == 2) {
                auto walk = face_from_dart(*emb, anchor[0], anchor[1]);
                if (is_simple_cycle(walk)) return planar_boundary_cert(*emb, walk, mode_, sig, opt_);
            } else if (is_face(*emb, anchor)) {
                if (mode_ != Mode::at5) return triangle_lift(*emb, {anchor[0], anchor[1], anchor[2]}, mode_, sig, opt_);
                // With v1 -> nothing and v2 -> v1 forced, the apex already has
                // out-degree 2 and the boundary bound caps it there.
                auto c = planar_boundary_cert(*emb, anchor, mode_, sig, opt_);
                c.anchor = make_anchor(mode_, anchor);
                require_valid(g, c, sig, "boundary certificate on a triangle");
                return c;
            }
        }
        return direct_cert(g, mode_, anchor, sig, opt_);
    }
};

}  // namespace

Certificate planar_boundary_cert(const PlaneEmbedding& emb, std::span<const int> boundary, Mode mode,
                                 const Signature* signature, const SolveOptions& options) {
    const Graph& g = emb.base;
    const int n = g.vertex_count();
    std::vector<int> b(boundary.begin(), boundary.end());
    if (!is_simple_cycle(b)) throw PreconditionError("boundary must be a simple cycle of length >= 3");
    for (int v : b)
        if (v < 0 || v >= n) throw PreconditionError("boundary vertex out of range");
    if (!is_face(emb, b)) throw PreconditionError("boundary is not a face of the embedding");

    auto spec = SearchSpec::open(g, removed_role(mode), mode_bound(mode));
    std::vector<std::uint8_t> on_boundary(static_cast<std::size_t>(n), 0);
    for (int v : b) on_boundary[v] = 1;
    for (int v = 0; v < n; ++v) {
        if (!on_boundary[v]) continue;
        switch (mode) {
            case Mode::at5: spec.hi[v] = 2; break;
            case Mode::at4_matching:
                spec.hi[v] = 2;
                spec.penalty[v] = 1;
                break;
            case Mode::at3_forest: spec.lo[v] = spec.hi[v] = 1; break;
        }
    }
    auto pattern = anchor_pattern(mode, 2);
    for (int i = 0; i < 2; ++i) {
        spec.lo[b[i]] = spec.hi[b[i]] = pattern[i];
        spec.penalty[b[i]] = 0;
    }
    spec.positive = positive_flags(g, signature);
    spec.node_budget = options.node_budget;

    auto r = detail::search(spec);
    if (!r) throw InternalError("no orientation meets the boundary contract of a plane graph");
    auto c = from_result(mode, *r, spec.hi, make_anchor(mode, {b[0], b[1]}), signature);
    require_valid(g, c, signature, "planar boundary search");
    return c;
}

Certificate triangle_lift(const PlaneEmbedding& emb, std::array<int, 3> triangle, Mode mode,
                          const Signature* signature, const SolveOptions& options) {
    if (mode == Mode::at5) throw PreconditionError("the triangle lift applies to the matching and forest modes");
    const Graph& g = emb.base;
    const int n = g.vertex_count();
    for (int v : triangle)
        if (v < 0 || v >= n) throw PreconditionError("triangle vertex out of range");
    if (!is_face(emb, triangle)) throw PreconditionError("triangle is not a face of the embedding");
    auto [v1, v2, v3] = triangle;
    std::vector<int> anchor{v1, v2, v3};
    positive_flags(g, signature);

    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (v != v3) keep.push_back(v);
    auto sub = induced_subgraph(g, keep);
    auto at = [&](int v) { return v < v3 ? v : v - 1; };
    auto sub_sig = piece_signature(g, signature, sub, keep);

    // Neighbours of v3 other than v1, v2 gain the arc into v3, so they need room for it.
    auto spec = SearchSpec::open(sub, removed_role(mode), mode_bound(mode));
    spec.lo[at(v1)] = spec.hi[at(v1)] = 0;
    spec.lo[at(v2)] = spec.hi[at(v2)] = 0;
    for (int u : g.neighbors(v3))
        if (u != v1 && u != v2) spec.hi[at(u)] = mode_bound(mode) - 1;
    spec.positive = positive_flags(sub, ptr(sub_sig));
    spec.node_budget = options.node_budget;

    auto r = detail::search(spec);
    if (!r) return direct_cert(g, mode, anchor, signature, options);

    SearchResult lifted;
    for (const auto& e : r->removed) lifted.removed.push_back(make_edge(keep[e.u], keep[e.v]));
    for (const auto& a : r->arcs) lifted.arcs.push_back(Arc{keep[a.tail], keep[a.head]});
    for (int u : g.neighbors(v3))
        if (u != v1 && u != v2) lifted.arcs.push_back(Arc{u, v3});
    lifted.arcs.push_back(Arc{v3, v1});
    if (mode == Mode::at4_matching)
        lifted.arcs.push_back(Arc{v3, v2});
    else
        lifted.removed.push_back(make_edge(v2, v3));
    // v3 points only at the sinks v1, v2, so no cycle passes through it.
    lifted.acyclic = r->acyclic;
    lifted.diff = r->diff;

    std::vector<int> bounds(static_cast<std::size_t>(n), mode_bound(mode));
    bounds[v1] = bounds[v2] = 0;
    bounds[v3] = mode == Mode::at4_matching ? 2 : 1;
    auto c = from_result(mode, lifted, bounds, make_anchor(mode, anchor), signature);
    require_valid(g, c, signature, "triangle lift");
    return c;
}

Certificate wagner_leaf_cert(const Graph& w, int u, int v, Mode mode, const Signature* signature,
                             const SolveOptions& options) {
    if (!is_wagner(w)) throw PreconditionError("graph is not the Wagner graph");
    if (!w.has_edge(u, v)) throw PreconditionError("anchor is not an edge");
    // Standard labels: a diagonal anchor becomes (0, 4), a rim anchor (4, 5).
    auto lab = wagner_labeling(w, {{0, u}, {4, v}});
    if (!lab) lab = wagner_labeling(w, {{4, u}, {5, v}});
    if (!lab) throw InternalError("Wagner automorphisms failed to reach the anchor");
    const auto& L = *lab;

    Graph rest = w;
    std::vector<Edge> removed;
    int bound = 3;
    if (mode != Mode::at5) {
        removed = {make_edge(u, v), make_edge(L[1], L[2]), make_edge(L[6], L[7])};
        rest = delete_edges(w, removed);
        bound = 2;
    }
    auto spec = SearchSpec::open(rest, EdgeRole::plain, bound);
    spec.acyclic = true;
    auto pattern = anchor_pattern(mode, 2);
    spec.lo[u] = spec.hi[u] = pattern[0];
    spec.lo[v] = spec.hi[v] = pattern[1];
    spec.node_budget = options.node_budget;
    auto r = detail::search(spec);
    if (!r) throw InternalError("no acyclic orientation of the Wagner leaf meets its contract");
    r->removed = removed;
    auto c = from_result(mode, *r, spec.hi, make_anchor(mode, {u, v}), signature);
    require_valid(w, c, signature, "Wagner leaf");
    return c;
}

Certificate glue(const Graph& g, const Certificate& c1, std::span<const int> map1, const Certificate& c2,
                 std::span<const int> map2, std::span<const int> clique) {
    if (c1.mode != c2.mode) throw PreconditionError("glued certificates disagree on the mode");
    const int n = g.vertex_count();
    const int k = static_cast<int>(clique.size());
    if (k < 1 || k > 3) throw PreconditionError("clique must have 1 to 3 vertices");
    if (c1.bounds.size() != map1.size() || c2.bounds.size() != map2.size())
        throw PreconditionError("vertex maps do not match the certificates");
    for (int v : map1)
        if (v < 0 || v >= n) throw PreconditionError("vertex map leaves the graph");
    for (int v : map2)
        if (v < 0 || v >= n) throw PreconditionError("vertex map leaves the graph");

    auto in_t = [&](int gv) { return std::find(clique.begin(), clique.end(), gv) != clique.end(); };
    if (!c2.anchor || static_cast<int>(c2.anchor->vertices.size()) != k)
        throw PreconditionError("second certificate must be anchored on the clique");
    for (int i = 0; i < k; ++i)
        if (map2[c2.anchor->vertices[i]] != clique[i])
            throw PreconditionError("second certificate's anchor is not the clique in order");

    std::vector<int> out2(map2.size(), 0);
    for (const auto& a : c2.arcs) {
        ++out2[a.tail];
        if (in_t(map2[a.tail]) && !in_t(map2[a.head]))
            throw PreconditionError("a clique vertex points out of the clique in the second certificate");
    }
    for (int i = 0; i < k; ++i)
        if (out2[c2.anchor->vertices[i]] > i)
            throw PreconditionError("clique out-degrees exceed 0, 1, 2 in the second certificate");

    Certificate out = relabel(c1, map1, n);
    for (const auto& e : c2.removed) {
        int a = map2[e.u], b = map2[e.v];
        if (in_t(a) && in_t(b)) continue;
        out.removed.push_back(make_edge(a, b));
    }
    for (const auto& a : c2.arcs) {
        int t = map2[a.tail], h = map2[a.head];
        if (in_t(t) && in_t(h)) continue;
        out.arcs.push_back(Arc{t, h});
    }
    std::vector<std::uint8_t> from1(static_cast<std::size_t>(n), 0);
    for (int v : map1) from1[v] = 1;
    for (std::size_t i = 0; i < map2.size(); ++i)
        if (!from1[map2[i]]) out.bounds[map2[i]] = c2.bounds[i];
    out.acyclic = c1.acyclic && c2.acyclic;
    out.diff = diff_product(c1.diff, c2.diff);
    out.signs.reset();
    out.normalize();

    std::set<Edge> used;
    for (const auto& e : out.removed)
        if (!g.has_edge(e.u, e.v) || !used.insert(e).second) throw PreconditionError("removed edge is missing from g or repeated");
    for (const auto& a : out.arcs) {
        auto e = make_edge(a.tail, a.head);
        if (!g.has_edge(e.u, e.v) || !used.insert(e).second) throw PreconditionError("arc is missing from g or repeated");
    }
    if (static_cast<int>(used.size()) != g.edge_count()) throw PreconditionError("the pieces do not cover every edge of g");
    if (out.mode == Mode::at4_matching && !is_matching(g, out.removed))
        throw PreconditionError("removed edges of the two pieces clash as a matching");
    if (out.mode == Mode::at3_forest && !is_forest(g, out.removed))
        throw PreconditionError("removed edges of the two pieces close a cycle");
    return out;
}

Certificate solve(const Graph& g, Mode mode, const std::optional<std::vector<int>>& anchor, const Signature* signature,
                  const SolveOptions& options) {
    const int n = g.vertex_count();
    positive_flags(g, signature);
    std::vector<int> a;
    if (anchor) {
        a = *anchor;
        if (a.size() < 2 || a.size() > 3) throw PreconditionError("anchor must be an edge or a triangle");
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < 0 || a[i] >= n) throw PreconditionError("anchor vertex out of range");
            for (std::size_t j = 0; j < i; ++j)
                if (a[i] == a[j] || !g.has_edge(a[i], a[j])) throw PreconditionError("anchor is not an edge or triangle of g");
        }
    } else if (g.edge_count() > 0) {
        a = {g.edge(0).u, g.edge(0).v};
    }

    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 5) continue;
        auto sub = induced_subgraph(g, comp);
        if (sub.edge_count() < 10) continue;
        auto d = decompose(sub);
        if (auto* verdict = std::get_if<K5MinorVerdict>(&d)) {
            K5MinorVerdict mapped = *verdict;
            for (auto& v : mapped.piece) v = comp[v];
            throw K5MinorDetected(std::move(mapped));
        }
    }

    Solver solver(mode, options);
    auto cert = solver.run(g, a, signature);
    if (signature) cert.signs = sign_list(*signature);
    cert.diff.reset();
    auto v = verify_certificate(g, cert, options.exact_limit, signature);
    if (!v.accepted) throw InternalError("assembled certificate fails verification: " + v.reason);
    cert.diff = v.diff;
    cert.normalize();
    return cert;
}

}  // namespace atcert
