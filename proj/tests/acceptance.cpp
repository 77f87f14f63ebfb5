// Acceptance suite: one PASS/FAIL line per criterion. Each criterion has a pinned
// wall-clock budget; running over it is a failure just like a wrong answer.

#include "atcert/certificate.hpp"
#include "atcert/certifier.hpp"
#include "atcert/constructor.hpp"
#include "atcert/decompose.hpp"
#include "atcert/generate.hpp"
#include "atcert/planarity.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace atcert;

namespace {

const Mode all_modes[] = {Mode::at5, Mode::at4_matching, Mode::at3_forest};

struct Failure {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

std::string describe(const Graph& g) {
    std::ostringstream s;
    s << g.vertex_count() << " vertices:";
    for (const auto& e : g.edges()) s << ' ' << e.u << '-' << e.v;
    return s.str();
}

std::vector<int> degrees(const Orientation& d) {
    auto s = d.out_degrees();
    return {s.begin(), s.end()};
}

std::int64_t oracle_coeff(const oracle::Polynomial& p, const std::vector<int>& mono) {
    auto it = p.find(mono);
    return it == p.end() ? 0 : it->second;
}

// Every orientation of every connected graph on up to five vertices.
template <class F>
void each_small_orientation(F&& f) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : oracle::connected_graphs(n)) {
            int m = g.edge_count();
            for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
                std::vector<std::uint8_t> fwd(static_cast<std::size_t>(m));
                for (int i = 0; i < m; ++i) fwd[i] = mask >> i & 1U;
                f(g, Orientation(g, fwd));
            }
        }
}

std::string criterion1() {
    long pairs = 0;
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : oracle::connected_graphs(n)) {
            auto poly = oracle::expand(g);
            int m = g.edge_count();
            for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
                std::vector<std::uint8_t> fwd(static_cast<std::size_t>(m));
                for (int i = 0; i < m; ++i) fwd[i] = mask >> i & 1U;
                Orientation d(g, fwd);
                auto deg = degrees(d);
                auto diff = eulerian_diff(d).diff;
                require(std::abs(oracle_coeff(poly, deg)) == std::abs(diff), "exhaustive mismatch on " + describe(g));
                require(std::abs(coeff_of_monomial(g, deg)) == std::abs(diff), "library coefficient mismatch on " + describe(g));
                ++pairs;
            }
        }
    std::mt19937_64 rng(1001);
    for (int t = 0; t < 200; ++t) {
        auto g = oracle::random_graph(rng, 7, 12);
        auto d = Orientation::from_arcs(g, oracle::random_arcs(rng, g));
        auto deg = degrees(d);
        require(std::abs(oracle::coefficient(g, deg)) == std::abs(eulerian_diff(d).diff), "random mismatch on " + describe(g));
    }
    return std::to_string(pairs) + " exhaustive pairs, 200 random";
}

std::string criterion2() {
    long pairs = 0;
    std::mt19937_64 rng(1002);
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : oracle::connected_graphs(n)) {
            auto sig = oracle::random_signs(rng, g);
            auto poly = oracle::expand(g, &sig);
            int m = g.edge_count();
            for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
                std::vector<std::uint8_t> fwd(static_cast<std::size_t>(m));
                for (int i = 0; i < m; ++i) fwd[i] = mask >> i & 1U;
                Orientation d(g, fwd);
                require(std::abs(oracle_coeff(poly, degrees(d))) == std::abs(eulerian_diff(d, &sig).diff),
                        "signed exhaustive mismatch on " + describe(g));
                ++pairs;
            }
        }
    for (int t = 0; t < 200; ++t) {
        auto g = oracle::random_graph(rng, 7, 12);
        auto sig = oracle::random_signs(rng, g);
        auto d = Orientation::from_arcs(g, oracle::random_arcs(rng, g));
        require(std::abs(oracle::coefficient(g, degrees(d), &sig)) == std::abs(eulerian_diff(d, &sig).diff),
                "signed random mismatch on " + describe(g));
    }
    for (int t = 0; t < 100; ++t) {
        auto g = oracle::random_graph(rng, 7, 12);
        auto d = Orientation::from_arcs(g, oracle::random_arcs(rng, g));
        Signature plus(g);
        auto a = eulerian_diff(d), b = eulerian_diff(d, &plus);
        require(a.even_count == b.even_count && a.odd_count == b.odd_count, "all-positive reduction on " + describe(g));
    }
    return std::to_string(pairs) + " exhaustive signed pairs, 200 random, 100 reductions";
}

std::string criterion3() {
    struct Spot {
        const char* name;
        Graph g;
        int at;
    };
    for (const auto& s : {Spot{"C4", cycle_graph(4), 2}, Spot{"C5", cycle_graph(5), 3}, Spot{"K4", complete_graph(4), 4},
                          Spot{"K5", complete_graph(5), 5}}) {
        require(alon_tarsi_number(s.g) == s.at, std::string("AT(") + s.name + ")");
        require(oracle::alon_tarsi(s.g) == s.at, std::string("oracle AT(") + s.name + ")");
    }
    auto w = wagner_graph();
    auto c = wagner_leaf_cert(w, 4, 5, Mode::at5);
    auto v = verify_certificate(w, c);
    require(v.accepted && c.acyclic && c.removed.empty(), "Wagner certificate rejected: " + v.reason);
    auto d = oracle::out_degrees(8, c.arcs);
    require(*std::max_element(d.begin(), d.end()) <= 3, "Wagner orientation exceeds out-degree 3");
    require(oracle::eulerian_scan(8, c.arcs).even - oracle::eulerian_scan(8, c.arcs).odd == 1, "Wagner diff");
    return "AT(C4,C5,K4,K5) = 2,3,4,5; AT(W) <= 4 by an acyclic max out-degree 3 orientation";
}

std::string criterion4() {
    std::mt19937_64 rng(1004);
    int done = 0;
    while (done < 50) {
        int k = 1 + static_cast<int>(rng() % 3);
        int n1 = k + 1 + static_cast<int>(rng() % 3), n2 = k + 1 + static_cast<int>(rng() % 3);
        auto piece = [&](int n, bool anchored) {
            std::vector<Arc> arcs;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    bool in_t = b < k;
                    if (!in_t && rng() % 2) continue;
                    if (anchored && a < k)
                        arcs.push_back(Arc{b, a});  // into the clique, and down its order inside it
                    else
                        arcs.push_back(rng() & 1U ? Arc{a, b} : Arc{b, a});
                }
            return arcs;
        };
        auto a1 = piece(n1, false), a2 = piece(n2, true);
        if (a1.size() > 9 || a2.size() > 9) continue;
        std::vector<int> map1(static_cast<std::size_t>(n1)), map2(static_cast<std::size_t>(n2)), clique(static_cast<std::size_t>(k));
        std::iota(map1.begin(), map1.end(), 0);
        std::iota(clique.begin(), clique.end(), 0);
        for (int i = 0; i < n2; ++i) map2[i] = i < k ? i : n1 + i - k;
        int n = n1 + n2 - k;
        std::set<Edge> edges;
        for (const auto& a : a1) edges.insert(make_edge(a.tail, a.head));
        for (const auto& a : a2) edges.insert(make_edge(map2[a.tail], map2[a.head]));
        Graph g(n, std::vector<Edge>(edges.begin(), edges.end()));
        Certificate c1, c2;
        c1.arcs = a1;
        c1.bounds.assign(static_cast<std::size_t>(n1), 4);
        c2.arcs = a2;
        c2.bounds.assign(static_cast<std::size_t>(n2), 4);
        c2.anchor = Anchor{clique, anchor_pattern(Mode::at5, k)};
        auto glued = glue(g, c1, map1, c2, map2, clique);
        std::vector<Arc> rest2;
        for (const auto& a : a2)
            if (!(a.tail < k && a.head < k)) rest2.push_back(a);
        auto s1 = oracle::eulerian_scan(n1, a1), s2 = oracle::eulerian_scan(n2, rest2), sg = oracle::eulerian_scan(n, glued.arcs);
        require(std::abs(sg.even - sg.odd) == std::abs(s1.even - s1.odd) * std::abs(s2.even - s2.odd),
                "product identity fails on " + describe(g));
        ++done;
    }
    return "50 random clique-sums";
}

struct CorpusItem {
    std::string name;
    Graph g;
    std::optional<std::vector<int>> anchor;
};

std::vector<CorpusItem> corpus() {
    std::vector<CorpusItem> out;
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : oracle::connected_graphs(n))
            if (oracle::planar_by_minors(g)) out.push_back({"planar " + describe(g), g, std::nullopt});
    auto w = wagner_graph();
    // Every ordered anchor edge; this covers the rim and the diagonal orbits.
    for (const auto& e : w.edges())
        for (auto [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}})
            out.push_back({"wagner anchor " + std::to_string(u) + "," + std::to_string(v), w, std::vector<int>{u, v}});
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        int n = 6 + static_cast<int>(seed % 7);
        out.push_back({"cliquesum seed " + std::to_string(seed), generate(CorpusKind::cliquesum, n, seed), std::nullopt});
    }
    return out;
}

// Solves and verifies one corpus item in one mode; returns the certificate.
Certificate certify_item(const CorpusItem& item, Mode mode, const Signature* sig) {
    const auto& g = item.g;
    auto c = solve(g, mode, item.anchor, sig);
    auto v = verify_certificate(g, c, default_exact_limit, sig);
    require(v.accepted, item.name + " " + std::string(mode_name(mode)) + ": " + v.reason);
    int rest = g.edge_count() - static_cast<int>(c.removed.size());
    if (rest <= default_exact_limit) require(v.diff && *v.diff != 0, item.name + ": exact check did not run");
    auto d = oracle::out_degrees(g.vertex_count(), c.arcs);
    for (int x : d) require(x <= mode_bound(mode), item.name + ": out-degree bound");
    if (mode == Mode::at4_matching) require(is_matching(g, c.removed), item.name + ": not a matching");
    if (mode == Mode::at3_forest) {
        require(is_forest(g, c.removed) && c.acyclic, item.name + ": not an acyclic forest certificate");
        require(oracle::peel_degeneracy(delete_edges(g, c.removed)) <= 2, item.name + ": g - E(F) not 2-degenerate");
    }
    if (item.anchor) {
        auto pattern = anchor_pattern(mode, static_cast<int>(item.anchor->size()));
        for (std::size_t i = 0; i < pattern.size(); ++i)
            require(d[(*item.anchor)[i]] == pattern[i], item.name + ": anchor pattern");
    }
    return c;
}

std::string pipeline(bool with_signs) {
    auto items = corpus();
    long runs = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        std::optional<Signature> sig;
        if (with_signs) sig = random_signature(items[i].g, 5000 + i);
        for (auto mode : all_modes) {
            certify_item(items[i], mode, sig ? &*sig : nullptr);
            ++runs;
        }
    }
    return std::to_string(items.size()) + " graphs, " + std::to_string(runs) + " certified runs";
}

std::string criterion6() {
    int checked = 0;
    for (const auto& item : corpus()) {
        if (item.g.edge_count() > 16) continue;
        require(alon_tarsi_number(item.g) <= 5, item.name + ": AT > 5");
        auto c = certify_item(item, Mode::at3_forest, nullptr);
        require(alon_tarsi_number(delete_edges(item.g, c.removed)) <= 3, item.name + ": AT(g - E(F)) > 3");
        ++checked;
    }
    return std::to_string(checked) + " graphs with at most 16 edges";
}

std::string criterion7() {
    int checked = 0;
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : oracle::connected_graphs(n)) {
            bool minor = oracle::has_minor(g, complete_graph(5));
            require(std::holds_alternative<K5MinorVerdict>(decompose(g)) == minor, "disagreement on " + describe(g));
            ++checked;
        }
    std::mt19937_64 rng(1007);
    for (int t = 0; t < 50; ++t) {
        int n = 5 + static_cast<int>(rng() % 4);
        auto g = oracle::random_graph(rng, n, n * (n - 1) / 2, true);
        bool minor = oracle::has_minor(g, complete_graph(5));
        require(std::holds_alternative<K5MinorVerdict>(decompose(g)) == minor, "disagreement on " + describe(g));
        ++checked;
    }
    require(std::holds_alternative<K5MinorVerdict>(decompose(complete_graph(5))), "K5 not reported");
    auto w = decompose(wagner_graph());
    require(std::holds_alternative<SumTree>(w), "W reported as K5 minor");
    const auto& tree = std::get<SumTree>(w);
    require(tree.leaves().size() == 1 && tree.nodes[tree.leaves()[0]].kind == LeafKind::wagner, "W is not a single Wagner leaf");
    return std::to_string(checked) + " graphs";
}

std::string criterion8() {
    std::mt19937_64 rng(1008);
    auto items = corpus();
    int graphs = 0;
    for (std::size_t i = 0; graphs < 20 && i < items.size(); i += items.size() / 25 + 1) {
        const auto& g = items[i].g;
        if (g.edge_count() == 0) continue;
        auto c = certify_item(items[i], Mode::at5, nullptr);
        // Certified AT bound: the largest out-degree plus one.
        auto d = oracle::out_degrees(g.vertex_count(), c.arcs);
        int k = *std::max_element(d.begin(), d.end()) + 1;
        for (int t = 0; t < 100; ++t) {
            ListAssignment lists;
            for (int v = 0; v < g.vertex_count(); ++v) {
                std::vector<int> pool(static_cast<std::size_t>(2 * k));
                std::iota(pool.begin(), pool.end(), 0);
                std::shuffle(pool.begin(), pool.end(), rng);
                pool.resize(static_cast<std::size_t>(k));
                lists.push_back(pool);
            }
            auto col = find_list_coloring(g, lists);
            require(col && is_proper_coloring(g, *col), items[i].name + ": no list colouring");
        }
        ++graphs;
    }
    require(graphs == 20, "fewer than 20 corpus graphs");
    return "20 graphs x 100 list assignments";
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<std::string()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "oracle equivalence", 30, criterion1},
        {2, "signed oracle equivalence", 30, criterion2},
        {3, "exact AT spot values", 60, criterion3},
        {4, "glue product identity", 30, criterion4},
        {5, "end-to-end pipeline", 300, [] { return pipeline(false); }},
        {6, "exact AT consistency", 300, criterion6},
        {7, "K5-minor detection", 60, criterion7},
        {8, "list colouring consequence", 60, criterion8},
        {9, "signed pipeline", 300, [] { return pipeline(true); }},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = c.run();
        } catch (const Failure& f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && secs > c.budget_seconds) {
            ok = false;
            detail += " (over the time budget)";
        }
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, c.budget_seconds);
        std::cout << "criterion " << c.id << " " << (ok ? "PASS" : "FAIL") << " " << c.title << ": " << detail << " ["
                  << timing << "]" << std::endl;
        failures += ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
