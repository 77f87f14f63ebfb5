#include "search.hpp"

#include "atcert/certifier.hpp"
#include "atcert/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_set>

namespace atcert::detail {

SearchSpec SearchSpec::open(const Graph& g, EdgeRole role, int bound) {
    SearchSpec s;
    s.g = g;
    s.removal = role;
    auto n = static_cast<std::size_t>(g.vertex_count());
    s.lo.assign(n, 0);
    s.hi.assign(n, bound);
    s.penalty.assign(n, 0);
    s.may_cover.assign(n, 1);
    s.removable.assign(static_cast<std::size_t>(g.edge_count()), role == EdgeRole::plain ? 0 : 1);
    s.acyclic = role == EdgeRole::forest;
    return s;
}

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

// Phase A: repeatedly pick a source v of the remaining graph. Its out-degree is
// the number of edges to still-remaining vertices that are not removed now.
class PeelSearch {
public:
    explicit PeelSearch(const SearchSpec& s) : s_(s), n_(s.g.vertex_count()) {
        nbr_.assign(static_cast<std::size_t>(n_), 0);
        for (const auto& e : s.g.edges()) {
            nbr_[e.u] |= bit(e.v);
            nbr_[e.v] |= bit(e.u);
        }
        dsu_.resize(static_cast<std::size_t>(n_));
        std::iota(dsu_.begin(), dsu_.end(), 0);
    }

    std::optional<SearchResult> run() {
        remaining_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
        if (!rec()) return std::nullopt;
        SearchResult r;
        r.removed = removed_;
        r.arcs = arcs_;
        r.acyclic = true;
        r.diff = 1;
        return r;
    }

private:
    const SearchSpec& s_;
    int n_;
    std::vector<Mask> nbr_;
    Mask remaining_ = 0;
    Mask covered_ = 0;
    std::vector<int> dsu_;
    std::vector<Arc> arcs_;
    std::vector<Edge> removed_;
    std::unordered_set<std::string> failed_;
    std::int64_t nodes_ = 0;

    int find(int x) const {
        while (dsu_[x] != x) x = dsu_[x];
        return x;
    }

    std::string key() const {
        std::string k(reinterpret_cast<const char*>(&remaining_), sizeof remaining_);
        if (s_.removal == EdgeRole::matching) {
            Mask c = covered_ & remaining_;
            k.append(reinterpret_cast<const char*>(&c), sizeof c);
        } else if (s_.removal == EdgeRole::forest) {
            // Connectivity among the remaining vertices, labelled by first member.
            std::vector<int> first(static_cast<std::size_t>(n_), -1);
            for (int v = 0; v < n_; ++v) {
                if (!(remaining_ & bit(v))) continue;
                int r = find(v);
                if (first[r] < 0) first[r] = v;
                k.push_back(static_cast<char>(first[r]));
            }
        }
        return k;
    }

    bool feasible_out(int v, int out, int r) const {
        int cov = (covered_ & bit(v)) ? 1 : 0;
        int cap = s_.hi[v] - (s_.penalty[v] ? cov + r : 0);
        return out >= s_.lo[v] && out <= cap;
    }

    bool rec() {
        if (remaining_ == 0) return true;
        auto k = key();
        if (failed_.count(k)) return false;
        if (++nodes_ > s_.node_budget) throw ResourceLimit("orientation search exceeded its node budget");

        // Out-degrees can only shrink, so a vertex already below its minimum is lost.
        for (int w = 0; w < n_; ++w)
            if ((remaining_ & bit(w)) && std::popcount(nbr_[w] & remaining_) < s_.lo[w]) {
                failed_.insert(std::move(k));
                return false;
            }

        struct Cand {
            int min_r, v;
        };
        std::vector<Cand> cands;
        for (int v = 0; v < n_; ++v) {
            if (!(remaining_ & bit(v))) continue;
            int base = std::popcount(nbr_[v] & remaining_);
            int max_r = max_removals(v, base);
            for (int r = 0; r <= max_r; ++r)
                if (feasible_out(v, base - r, r)) {
                    cands.push_back({r, v});
                    break;
                }
        }
        std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.min_r < b.min_r; });

        for (const auto& c : cands) {
            int v = c.v;
            std::vector<int> options;
            for (int w = 0; w < n_; ++w)
                if ((nbr_[v] & remaining_ & bit(w)) && can_remove(v, w)) options.push_back(w);
            int base = std::popcount(nbr_[v] & remaining_);
            int max_r = std::min(max_removals(v, base), static_cast<int>(options.size()));
            for (int r = c.min_r; r <= max_r; ++r) {
                if (!feasible_out(v, base - r, r)) continue;
                std::vector<int> pick;
                if (choose(v, options, 0, r, pick)) return true;
            }
        }
        failed_.insert(std::move(k));
        return false;
    }

    int max_removals(int v, int base) const {
        switch (s_.removal) {
            case EdgeRole::plain: return 0;
            case EdgeRole::matching: return (covered_ & bit(v)) || !s_.may_cover[v] ? 0 : std::min(1, base);
            case EdgeRole::forest: return s_.may_cover[v] ? base : 0;
        }
        return 0;
    }

    bool can_remove(int v, int w) const {
        if (s_.removal == EdgeRole::plain || !s_.may_cover[v] || !s_.may_cover[w]) return false;
        if (!s_.removable[*s_.g.edge_index(v, w)]) return false;
        if (s_.removal == EdgeRole::matching && ((covered_ & bit(v)) || (covered_ & bit(w)))) return false;
        return true;
    }

    // Chooses `left` more edges from options[from..] to remove at v, then peels v.
    bool choose(int v, const std::vector<int>& options, std::size_t from, int left, std::vector<int>& pick) {
        if (left == 0) return peel(v, pick);
        for (std::size_t i = from; i + static_cast<std::size_t>(left) <= options.size(); ++i) {
            int w = options[i];
            if (s_.removal == EdgeRole::forest) {
                int rw = find(w);
                if (rw == find(v)) continue;
                bool clash = false;
                for (int p : pick)
                    if (find(p) == rw) clash = true;
                if (clash) continue;
            }
            pick.push_back(w);
            if (choose(v, options, i + 1, left - 1, pick)) return true;
            pick.pop_back();
        }
        return false;
    }

    bool peel(int v, const std::vector<int>& pick) {
        Mask saved_cov = covered_;
        auto saved_dsu = dsu_;
        auto arcs_size = arcs_.size();
        auto removed_size = removed_.size();
        Mask cut = 0;
        for (int w : pick) {
            cut |= bit(w);
            removed_.push_back(make_edge(v, w));
            if (s_.removal == EdgeRole::matching) covered_ |= bit(v) | bit(w);
            if (s_.removal == EdgeRole::forest) dsu_[find(w)] = find(v);
        }
        Mask targets = nbr_[v] & remaining_ & ~cut;
        for (int w = 0; w < n_; ++w)
            if (targets & bit(w)) arcs_.push_back(Arc{v, w});
        remaining_ &= ~bit(v);
        if (rec()) return true;
        remaining_ |= bit(v);
        arcs_.resize(arcs_size);
        removed_.resize(removed_size);
        covered_ = saved_cov;
        dsu_ = std::move(saved_dsu);
        return false;
    }
};

// Phase B: every edge is removed, oriented forward or oriented backward.
class EdgeSearch {
public:
    explicit EdgeSearch(const SearchSpec& s) : s_(s), n_(s.g.vertex_count()), m_(s.g.edge_count()) {
        out_.assign(static_cast<std::size_t>(n_), 0);
        cov_.assign(static_cast<std::size_t>(n_), 0);
        undecided_.assign(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v) undecided_[v] = s.g.degree(v);
        state_.assign(static_cast<std::size_t>(m_), 0);
        // Edges grouped by breadth-first vertex order so that vertices close early.
        std::vector<int> pos(static_cast<std::size_t>(n_), -1);
        int next = 0;
        for (int root = 0; root < n_; ++root) {
            if (pos[root] >= 0) continue;
            std::vector<int> queue{root};
            pos[root] = next++;
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (int w : s.g.neighbors(queue[i]))
                    if (pos[w] < 0) {
                        pos[w] = next++;
                        queue.push_back(w);
                    }
        }
        order_.resize(static_cast<std::size_t>(m_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            const auto& ea = s.g.edge(a);
            const auto& eb = s.g.edge(b);
            return std::max(pos[ea.u], pos[ea.v]) < std::max(pos[eb.u], pos[eb.v]);
        });
    }

    std::optional<SearchResult> run() {
        if (!rec(0)) return std::nullopt;
        return result_;
    }

private:
    const SearchSpec& s_;
    int n_, m_;
    std::vector<int> out_, cov_, undecided_, order_;
    std::vector<std::uint8_t> state_;  // 0 removed, 1 forward (u -> v), 2 backward
    std::unordered_set<std::string> seen_;
    std::int64_t nodes_ = 0;
    SearchResult result_;

    bool can_reach_lo(int v) const { return out_[v] + undecided_[v] >= s_.lo[v]; }
    bool under_cap(int v) const { return out_[v] + (s_.penalty[v] ? cov_[v] : 0) <= s_.hi[v]; }

    bool leaf() {
        std::string k(state_.begin(), state_.end());
        for (int v = 0; v < n_; ++v) k.push_back(static_cast<char>(out_[v]));
        // Only which edges are gone and the out-degree sequence matter.
        for (int i = 0; i < m_; ++i)
            if (state_[i] != 0) k[static_cast<std::size_t>(i)] = 1;
        if (!seen_.insert(std::move(k)).second) return false;
        std::vector<Arc> arcs;
        std::vector<std::uint8_t> positive;
        std::vector<Edge> removed;
        for (int i = 0; i < m_; ++i) {
            const auto& e = s_.g.edge(i);
            if (state_[i] == 0) {
                removed.push_back(e);
                continue;
            }
            arcs.push_back(state_[i] == 1 ? Arc{e.u, e.v} : Arc{e.v, e.u});
            if (!s_.positive.empty()) positive.push_back(s_.positive[i]);
        }
        auto diff = eulerian_diff(n_, arcs, positive, 62).diff;
        if (diff == 0) return false;
        result_.removed = std::move(removed);
        result_.arcs = std::move(arcs);
        Orientation d = Orientation::from_arcs(delete_edges(s_.g, result_.removed), result_.arcs);
        result_.acyclic = is_acyclic_orientation(d);
        result_.diff = diff;
        return true;
    }

    bool rec(int i) {
        if (i == m_) return leaf();
        if (++nodes_ > s_.node_budget) throw ResourceLimit("orientation search exceeded its node budget");
        int idx = order_[i];
        const auto& e = s_.g.edge(idx);
        int u = e.u, v = e.v;
        --undecided_[u];
        --undecided_[v];
        bool found = false;
        for (int choice = 1; choice <= 3 && !found; ++choice) {
            if (choice == 3) {
                if (s_.removal == EdgeRole::plain || !s_.removable[idx] || !s_.may_cover[u] || !s_.may_cover[v]) continue;
                if (s_.removal == EdgeRole::matching && (cov_[u] || cov_[v])) continue;
                ++cov_[u];
                ++cov_[v];
                state_[idx] = 0;
                if (under_cap(u) && under_cap(v) && can_reach_lo(u) && can_reach_lo(v)) found = rec(i + 1);
                --cov_[u];
                --cov_[v];
            } else {
                int tail = choice == 1 ? u : v;
                ++out_[tail];
                state_[idx] = static_cast<std::uint8_t>(choice);
                if (under_cap(tail) && can_reach_lo(u) && can_reach_lo(v)) found = rec(i + 1);
                --out_[tail];
            }
        }
        ++undecided_[u];
        ++undecided_[v];
        return found;
    }
};

}  // namespace

std::optional<SearchResult> search(const SearchSpec& spec) {
    int n = spec.g.vertex_count();
    if (n > 64) throw ResourceLimit("orientation search handles at most 64 vertices per piece");
    if (static_cast<int>(spec.lo.size()) != n || static_cast<int>(spec.hi.size()) != n ||
        static_cast<int>(spec.penalty.size()) != n || static_cast<int>(spec.may_cover.size()) != n ||
        static_cast<int>(spec.removable.size()) != spec.g.edge_count())
        throw PreconditionError("search specification has mismatched lengths");
    if (auto r = PeelSearch(spec).run()) return r;
    if (spec.acyclic) return std::nullopt;
    return EdgeSearch(spec).run();
}

}  // namespace atcert::detail
