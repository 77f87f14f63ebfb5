#include "cli.hpp"

#include "atcert/certifier.hpp"
#include "atcert/constructor.hpp"
#include "atcert/decompose.hpp"
#include "atcert/errors.hpp"
#include "atcert/graph_io.hpp"
#include "atcert/planarity.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace atcert::cli {

namespace {

using nlohmann::json;

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output_path.empty() || cfg.output_path == "-") {
        out << text;
        return;
    }
    std::ofstream f(cfg.output_path, std::ios::binary);
    if (!f) throw Error("cannot write " + cfg.output_path);
    f << text;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw MalformedInput("cannot open " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

json edges_json(const std::vector<Edge>& edges) {
    json a = json::array();
    for (const auto& e : edges) a.push_back({e.u, e.v});
    return a;
}

json tree_json(const SumTree& t) {
    json nodes = json::array();
    for (const auto& node : t.nodes) {
        json j;
        if (node.is_leaf) {
            j["kind"] = node.kind == LeafKind::planar ? "planar" : "wagner";
            j["vertices"] = node.vertex_map;
            std::vector<Edge> edges;
            for (const auto& e : node.piece.edges())
                edges.push_back(make_edge(node.vertex_map[e.u], node.vertex_map[e.v]));
            std::sort(edges.begin(), edges.end());
            j["edges"] = edges_json(edges);
            auto virt = node.virtual_edges;
            std::sort(virt.begin(), virt.end());
            j["virtual_edges"] = edges_json(virt);
            if (node.embedding) {
                json rot = json::array();
                for (const auto& r : node.embedding->rotation) {
                    json row = json::array();
                    for (int w : r) row.push_back(node.vertex_map[w]);
                    rot.push_back(row);
                }
                j["rotation"] = rot;
            }
        } else {
            j["clique"] = node.clique;
            j["left"] = node.left;
            j["right"] = node.right;
        }
        nodes.push_back(j);
    }
    return {{"nodes", nodes}, {"root", t.root}};
}

json verdict_json(const K5MinorVerdict& v) {
    return {{"verdict", "K5 minor"}, {"piece", v.piece}, {"reason", v.reason}};
}

int analyze(const RunConfig& cfg, std::ostream& out) {
    auto parsed = read_graph_file(cfg.input_path);
    const auto& g = parsed.graph;
    const Signature* sig = parsed.signature ? &*parsed.signature : nullptr;
    std::ostringstream s;
    s << "vertices=" << g.vertex_count() << "\n";
    s << "edges=" << g.edge_count() << "\n";
    s << "signed=" << (sig ? "yes" : "no") << "\n";
    s << "degeneracy=" << degeneracy_order(g).degeneracy << "\n";
    s << "planar=" << (is_planar(g) ? "yes" : "no") << "\n";
    s << "wagner=" << (is_wagner(g) ? "yes" : "no") << "\n";
    s << "k5_minor=" << (has_k5_minor(g) ? "yes" : "no") << "\n";
    if (g.edge_count() <= default_at_limit)
        s << "AT=" << alon_tarsi_number(g, sig) << "\n";
    else
        s << "AT=skipped (" << g.edge_count() << " edges exceed the exact limit of " << default_at_limit << ")\n";
    emit(cfg, s.str(), out);
    return exit_ok;
}

int certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto parsed = read_graph_file(cfg.input_path);
    std::optional<Signature> sig = parsed.signature;
    if (!sig && cfg.is_signed) sig = random_signature(parsed.graph, cfg.seed.value_or(0));
    SolveOptions opt;
    opt.exact_limit = cfg.exact_limit;
    try {
        auto cert = solve(parsed.graph, cfg.mode.value_or(Mode::at5), cfg.anchor, sig ? &*sig : nullptr, opt);
        emit(cfg, certificate_to_json(cert), out);
        err << "certified " << mode_name(cert.mode) << ": diff="
            << (cert.diff ? std::to_string(*cert.diff) : std::string("not computed")) << "\n";
        return exit_ok;
    } catch (const K5MinorDetected& e) {
        emit(cfg, verdict_json(e.verdict()).dump() + "\n", out);
        err << "K5 minor: " << e.verdict().reason << "\n";
        return exit_k5_minor;
    }
}

int verify(const RunConfig& cfg, std::ostream& out) {
    auto parsed = read_graph_file(cfg.input_path);
    auto cert = certificate_from_json(slurp(cfg.certificate_path));
    auto v = verify_certificate(parsed.graph, cert, cfg.exact_limit, parsed.signature ? &*parsed.signature : nullptr);
    std::ostringstream s;
    s << (v.accepted ? "accept" : "reject: " + v.reason) << "\n";
    for (const auto& c : v.checks) s << "  check: " << c << "\n";
    if (v.diff) s << "  diff=" << *v.diff << "\n";
    emit(cfg, s.str(), out);
    return v.accepted ? exit_ok : exit_rejected;
}

int decompose_cmd(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto parsed = read_graph_file(cfg.input_path);
    const auto& g = parsed.graph;
    json comps = json::array();
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        auto result = decompose(sub);
        if (auto* v = std::get_if<K5MinorVerdict>(&result)) {
            K5MinorVerdict mapped = *v;
            for (auto& x : mapped.piece) x = comp[x];
            emit(cfg, verdict_json(mapped).dump() + "\n", out);
            err << "K5 minor: " << mapped.reason << "\n";
            return exit_k5_minor;
        }
        auto tree = std::get<SumTree>(std::move(result));
        for (auto& node : tree.nodes) {
            for (auto& x : node.vertex_map) x = comp[x];
            for (auto& x : node.clique) x = comp[x];
            for (auto& e : node.virtual_edges) e = make_edge(comp[e.u], comp[e.v]);
        }
        comps.push_back(tree_json(tree));
    }
    emit(cfg, json{{"components", comps}}.dump() + "\n", out);
    return exit_ok;
}

int gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.seed) {
        err << "gen requires --seed\n";
        return exit_parse;
    }
    auto g = generate(cfg.kind, cfg.n, *cfg.seed);
    std::optional<Signature> sig;
    // A separate stream for the signs keeps the graph identical with or without --signed.
    if (cfg.is_signed) sig = random_signature(g, *cfg.seed ^ 0x9E3779B97F4A7C15ULL);
    emit(cfg, format_graph(g, sig ? &*sig : nullptr), out);
    return exit_ok;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.exact_limit < 0) {
            err << "exact limit must be nonnegative\n";
            return exit_parse;
        }
        if (cfg.command == "analyze") return analyze(cfg, out);
        if (cfg.command == "certify") return certify(cfg, out, err);
        if (cfg.command == "verify") return verify(cfg, out);
        if (cfg.command == "decompose") return decompose_cmd(cfg, out, err);
        if (cfg.command == "gen") return gen(cfg, out, err);
        err << "unknown command '" << cfg.command << "'\n";
        return exit_parse;
    } catch (const MalformedInput& e) {
        err << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const K5MinorDetected& e) {
        err << "K5 minor: " << e.verdict().reason << "\n";
        return exit_k5_minor;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << "\n";
        return exit_resource;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_rejected;
    }
}

}  // namespace atcert::cli
