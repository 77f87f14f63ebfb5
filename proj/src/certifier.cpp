#include "atcert/certifier.hpp"

#include "atcert/errors.hpp"
#include "frontier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace atcert {

using detail::checked_add;
using detail::Key;
using detail::KeyHash;

namespace {

struct Counts {
    std::int64_t even = 0;
    std::int64_t odd = 0;
};

void check_limit(int edges, int limit) {
    if (limit > 62) throw ResourceLimit("exact limit above 62 edges cannot be counted in 64 bits");
    if (edges > limit)
        throw ResourceLimit("exact count over " + std::to_string(edges) + " edges exceeds the limit of " +
                            std::to_string(limit));
}

}  // namespace

ParityCount eulerian_diff(int n, std::span<const Arc> arcs, std::span<const std::uint8_t> positive, int edge_limit) {
    check_limit(static_cast<int>(arcs.size()), edge_limit);
    if (!positive.empty() && positive.size() != arcs.size()) throw PreconditionError("sign flags do not match arcs");

    std::vector<Edge> edges;
    edges.reserve(arcs.size());
    int maxdeg = 0;
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const auto& a : arcs) {
        edges.push_back(make_edge(a.tail, a.head));
        maxdeg = std::max({maxdeg, ++deg[a.tail], ++deg[a.head]});
    }
    auto plan = detail::make_frontier_plan(n, edges, detail::zigzag(maxdeg));

    // State: zigzag-encoded (in - out) balance of each active vertex inside H.
    std::unordered_map<Key, Counts, KeyHash> cur{{Key{0}, Counts{1, 0}}}, next;
    for (const auto& st : plan.steps) {
        const auto& arc = arcs[static_cast<std::size_t>(st.edge)];
        bool flips = positive.empty() || positive[static_cast<std::size_t>(st.edge)];
        next.clear();
        next.reserve(cur.size() * 2);
        for (const auto& [key, c] : cur) {
            int ba = detail::unzigzag(plan.get(key, st.slot_a));
            int bb = detail::unzigzag(plan.get(key, st.slot_b));
            // Leave the arc out of H.
            if (std::abs(ba) <= st.remaining_a && std::abs(bb) <= st.remaining_b) {
                auto& t = next[key];
                t.even = checked_add(t.even, c.even);
                t.odd = checked_add(t.odd, c.odd);
            }
            // Put it into H: the tail gains an out-arc, the head an in-arc.
            int na = ba + (arc.tail == st.a ? -1 : 1);
            int nb = bb + (arc.tail == st.b ? -1 : 1);
            if (std::abs(na) <= st.remaining_a && std::abs(nb) <= st.remaining_b) {
                Key k2 = plan.set(plan.set(key, st.slot_a, detail::zigzag(na)), st.slot_b, detail::zigzag(nb));
                auto& t = next[k2];
                if (flips) {
                    t.even = checked_add(t.even, c.odd);
                    t.odd = checked_add(t.odd, c.even);
                } else {
                    t.even = checked_add(t.even, c.even);
                    t.odd = checked_add(t.odd, c.odd);
                }
            }
        }
        std::swap(cur, next);
    }
    auto it = cur.find(Key{0});
    ParityCount out;
    if (it != cur.end()) {
        out.even_count = it->second.even;
        out.odd_count = it->second.odd;
    }
    out.diff = out.even_count - out.odd_count;
    return out;
}

ParityCount eulerian_diff(const Orientation& d, const Signature* signature, int edge_limit) {
    auto arcs = d.arcs();
    std::vector<std::uint8_t> positive;
    if (signature) {
        if (!(signature->base() == d.base())) throw PreconditionError("signature is over a different graph");
        positive.reserve(arcs.size());
        for (int i = 0; i < d.base().edge_count(); ++i) positive.push_back(signature->sign(i) > 0 ? 1 : 0);
    }
    return eulerian_diff(d.base().vertex_count(), arcs, positive, edge_limit);
}

bool is_at_orientation(const Orientation& d, const Signature* signature, int edge_limit) {
    return eulerian_diff(d, signature, edge_limit).diff != 0;
}

std::int64_t coeff_of_monomial(const Graph& g, std::span<const int> exponents, const Signature* signature) {
    int n = g.vertex_count();
    if (static_cast<int>(exponents.size()) != n)
        throw PreconditionError("exponent vector length differs from the vertex count");
    if (signature && !(signature->base() == g)) throw PreconditionError("signature is over a different graph");
    long long total = 0;
    for (int v = 0; v < n; ++v) {
        if (exponents[v] < 0) throw PreconditionError("negative exponent");
        if (exponents[v] > g.degree(v)) return 0;
        total += exponents[v];
    }
    if (total != g.edge_count()) return 0;

    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    auto maxdeg = static_cast<std::uint32_t>(std::max(1, g.max_degree()));
    auto plan = detail::make_frontier_plan(n, edges, maxdeg);

    // State: out-degree already spent by each active vertex. Each factor
    // (x_u - s x_v) either gives x_u (arc u->v, weight +1) or -s x_v (arc v->u).
    std::unordered_map<Key, std::int64_t, KeyHash> cur{{Key{0}, 1}}, next;
    for (const auto& st : plan.steps) {
        int u = st.a < st.b ? st.a : st.b;
        int sigma = signature ? signature->sign(st.edge) : 1;
        next.clear();
        next.reserve(cur.size() * 2);
        for (const auto& [key, w] : cur) {
            int oa = static_cast<int>(plan.get(key, st.slot_a));
            int ob = static_cast<int>(plan.get(key, st.slot_b));
            for (int pick = 0; pick < 2; ++pick) {
                int tail = pick == 0 ? u : (u == st.a ? st.b : st.a);
                int na = oa + (tail == st.a ? 1 : 0);
                int nb = ob + (tail == st.b ? 1 : 0);
                int ea = exponents[st.a], eb = exponents[st.b];
                if (na > ea || nb > eb) continue;
                if (na + st.remaining_a < ea || nb + st.remaining_b < eb) continue;
                // Retired slots must read zero so that equal states share a key.
                auto va = static_cast<std::uint32_t>(st.remaining_a == 0 ? 0 : na);
                auto vb = static_cast<std::uint32_t>(st.remaining_b == 0 ? 0 : nb);
                Key k2 = plan.set(plan.set(key, st.slot_a, va), st.slot_b, vb);
                std::int64_t weight = pick == 0 ? w : (sigma > 0 ? -w : w);
                auto& t = next[k2];
                t = checked_add(t, weight);
            }
        }
        std::swap(cur, next);
    }
    auto it = cur.find(Key{0});
    return it == cur.end() ? 0 : it->second;
}

int alon_tarsi_number(const Graph& g, const Signature* signature, int edge_limit) {
    int m = g.edge_count(), n = g.vertex_count();
    if (m > edge_limit)
        throw ResourceLimit("Alon-Tarsi search over " + std::to_string(m) + " edges exceeds the limit of " +
                            std::to_string(edge_limit));
    if (m == 0) return 1;
    if (signature && !(signature->base() == g)) throw PreconditionError("signature is over a different graph");

    std::vector<std::uint8_t> positive;
    if (signature)
        for (int i = 0; i < m; ++i) positive.push_back(signature->sign(i) > 0 ? 1 : 0);

    for (int k = 1;; ++k) {
        int cap = k - 1;
        if (static_cast<long long>(cap) * n < m) continue;
        std::vector<int> out(static_cast<std::size_t>(n), 0);
        std::vector<Arc> arcs(static_cast<std::size_t>(m));
        std::set<std::vector<int>> tried;
        long long spare = static_cast<long long>(cap) * n;
        bool found = false;
        // Orientations sharing an out-degree sequence share |diff|, so each
        // sequence is evaluated once.
        auto rec = [&](auto&& self, int i) -> void {
            if (found) return;
            if (i == m) {
                if (!tried.insert(out).second) return;
                if (eulerian_diff(n, arcs, positive, 62).diff != 0) found = true;
                return;
            }
            if (spare < m - i) return;
            const auto& e = g.edge(i);
            for (int dir = 0; dir < 2 && !found; ++dir) {
                int tail = dir == 0 ? e.u : e.v, head = dir == 0 ? e.v : e.u;
                if (out[tail] >= cap) continue;
                ++out[tail];
                --spare;
                arcs[i] = {tail, head};
                self(self, i + 1);
                ++spare;
                --out[tail];
            }
        };
        rec(rec, 0);
        if (found) return k;
    }
}

bool is_proper_coloring(const Graph& g, std::span<const int> coloring, const Signature* signature) {
    if (static_cast<int>(coloring.size()) != g.vertex_count()) return false;
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        int s = signature ? signature->sign(i) : 1;
        if (coloring[e.u] == s * coloring[e.v]) return false;
    }
    return true;
}

std::optional<std::vector<int>> find_list_coloring(const Graph& g, const ListAssignment& lists,
                                                   const Signature* signature, std::int64_t node_limit) {
    int n = g.vertex_count();
    if (static_cast<int>(lists.size()) != n) throw PreconditionError("list assignment length differs from vertex count");
    for (const auto& l : lists)
        if (l.empty()) throw PreconditionError("empty colour list");
    if (signature && !(signature->base() == g)) throw PreconditionError("signature is over a different graph");

    std::vector<int> color(static_cast<std::size_t>(n), 0);
    std::vector<std::uint8_t> done(static_cast<std::size_t>(n), 0);
    std::int64_t nodes = 0;

    auto allowed = [&](int v, int c) {
        auto nb = g.neighbors(v);
        auto inc = g.incident_edges(v);
        for (std::size_t k = 0; k < nb.size(); ++k) {
            int w = nb[k];
            if (!done[w]) continue;
            int s = signature ? signature->sign(inc[k]) : 1;
            if (c == s * color[w]) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int placed) -> bool {
        if (placed == n) return true;
        if (++nodes > node_limit) throw ResourceLimit("list colouring search exceeded its node budget");
        // Most constrained vertex first.
        int best = -1, best_free = 0;
        for (int v = 0; v < n; ++v) {
            if (done[v]) continue;
            int free = 0;
            for (int c : lists[v]) free += allowed(v, c) ? 1 : 0;
            if (best < 0 || free < best_free) {
                best = v;
                best_free = free;
            }
        }
        if (best_free == 0) return false;
        for (int c : lists[best]) {
            if (!allowed(best, c)) continue;
            color[best] = c;
            done[best] = 1;
            if (self(self, placed + 1)) return true;
            done[best] = 0;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return color;
}

std::vector<int> signed_color_set(int k) {
    if (k < 0) throw PreconditionError("negative colour count");
    std::vector<int> out;
    if (k % 2 == 1) out.push_back(0);
    for (int i = 1; i <= k / 2; ++i) {
        out.push_back(-i);
        out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace atcert
