#include "atcert/certificate.hpp"

#include "atcert/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace atcert {

using nlohmann::json;

std::string_view mode_name(Mode mode) {
    switch (mode) {
        case Mode::at5: return "at5";
        case Mode::at4_matching: return "at4-matching";
        case Mode::at3_forest: return "at3-forest";
    }
    return "?";
}

Mode parse_mode(std::string_view name) {
    if (name == "at5") return Mode::at5;
    if (name == "at4-matching") return Mode::at4_matching;
    if (name == "at3-forest") return Mode::at3_forest;
    throw MalformedInput("unknown mode '" + std::string(name) + "'");
}

int mode_bound(Mode mode) {
    switch (mode) {
        case Mode::at5: return 4;
        case Mode::at4_matching: return 3;
        case Mode::at3_forest: return 2;
    }
    return 0;
}

EdgeRole removed_role(Mode mode) {
    switch (mode) {
        case Mode::at5: return EdgeRole::plain;
        case Mode::at4_matching: return EdgeRole::matching;
        case Mode::at3_forest: return EdgeRole::forest;
    }
    return EdgeRole::plain;
}

std::vector<int> anchor_pattern(Mode mode, int size) {
    static const int at5[] = {0, 1, 2}, match[] = {0, 0, 2}, forest[] = {0, 0, 1};
    const int* p = mode == Mode::at5 ? at5 : mode == Mode::at4_matching ? match : forest;
    if (size < 1 || size > 3) throw PreconditionError("anchor must have 1 to 3 vertices");
    if (size == 1) return {0};
    return std::vector<int>(p, p + size);
}

void Certificate::normalize() {
    for (auto& e : removed) e = make_edge(e.u, e.v);
    std::sort(removed.begin(), removed.end());
    std::sort(arcs.begin(), arcs.end());
    if (signs) {
        for (auto& s : *signs)
            if (s.u > s.v) std::swap(s.u, s.v);
        std::sort(signs->begin(), signs->end());
    }
}

namespace {

struct Rejection {
    std::string reason;
};

// Signature from the caller, else from the certificate, else none.
std::optional<Signature> resolve_signature(const Graph& g, const Certificate& cert, const Signature* given) {
    if (cert.signs) {
        std::vector<std::int8_t> signs(static_cast<std::size_t>(g.edge_count()), 0);
        for (const auto& s : *cert.signs) {
            auto idx = g.edge_index(s.u, s.v);
            if (!idx) throw Rejection{"signed entry is not an edge of the graph"};
            if (s.sign != 1 && s.sign != -1) throw Rejection{"sign must be +1 or -1"};
            if (signs[*idx] != 0) throw Rejection{"edge signed twice"};
            signs[*idx] = static_cast<std::int8_t>(s.sign);
        }
        if (std::count(signs.begin(), signs.end(), 0) != 0) throw Rejection{"signature does not cover every edge"};
        Signature carried(g, std::move(signs));
        if (given) {
            if (!(given->base() == g)) throw Rejection{"signature is over a different graph"};
            if (!std::equal(carried.signs().begin(), carried.signs().end(), given->signs().begin()))
                throw Rejection{"certificate signature differs from the supplied one"};
        }
        return carried;
    }
    if (given) {
        if (!(given->base() == g)) throw Rejection{"signature is over a different graph"};
        return *given;
    }
    return std::nullopt;
}

}  // namespace

Verdict verify_certificate(const Graph& g, const Certificate& cert, int exact_limit, const Signature* signature) {
    Verdict out;
    const int n = g.vertex_count();
    try {
        auto sig = resolve_signature(g, cert, signature);

        out.checks.push_back("removed-set role");
        std::set<Edge> removed;
        for (const auto& e0 : cert.removed) {
            auto e = make_edge(e0.u, e0.v);
            if (!g.has_edge(e.u, e.v)) throw Rejection{"removed edge is not an edge of the graph"};
            if (!removed.insert(e).second) throw Rejection{"removed edge listed twice"};
        }
        std::vector<Edge> rem(removed.begin(), removed.end());
        switch (removed_role(cert.mode)) {
            case EdgeRole::plain:
                if (!rem.empty()) throw Rejection{"mode at5 removes no edges"};
                break;
            case EdgeRole::matching:
                if (!is_matching(g, rem)) throw Rejection{"removed edges are not a matching"};
                break;
            case EdgeRole::forest:
                if (!is_forest(g, rem)) throw Rejection{"removed edges are not a forest"};
                break;
        }

        out.checks.push_back("orientation totality");
        auto rest = delete_edges(g, rem);
        std::vector<std::uint8_t> seen(static_cast<std::size_t>(rest.edge_count()), 0);
        std::vector<std::uint8_t> forward(static_cast<std::size_t>(rest.edge_count()), 0);
        for (const auto& a : cert.arcs) {
            if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) throw Rejection{"arc endpoint out of range"};
            auto idx = rest.edge_index(a.tail, a.head);
            if (!idx) throw Rejection{"arc is not an edge of the graph minus the removed set"};
            if (seen[*idx]) throw Rejection{"edge oriented twice"};
            seen[*idx] = 1;
            forward[*idx] = a.tail < a.head ? 1 : 0;
        }
        if (std::count(seen.begin(), seen.end(), 0) != 0) throw Rejection{"some remaining edge is not oriented"};
        Orientation d(rest, forward);

        out.checks.push_back("out-degree bounds");
        if (static_cast<int>(cert.bounds.size()) != n) throw Rejection{"bounds length differs from the vertex count"};
        for (int v = 0; v < n; ++v) {
            if (cert.bounds[v] < 0 || cert.bounds[v] > mode_bound(cert.mode))
                throw Rejection{"bound at vertex " + std::to_string(v) + " exceeds the mode's limit"};
            if (d.out_degree(v) > cert.bounds[v])
                throw Rejection{"bound violation: vertex " + std::to_string(v) + " has out-degree " +
                                std::to_string(d.out_degree(v)) + " > " + std::to_string(cert.bounds[v])};
        }

        if (cert.anchor) {
            out.checks.push_back("anchor pattern");
            const auto& a = *cert.anchor;
            int k = static_cast<int>(a.vertices.size());
            if (k < 1 || k > 3 || a.out_degrees.size() != a.vertices.size()) throw Rejection{"malformed anchor"};
            for (int i = 0; i < k; ++i) {
                if (a.vertices[i] < 0 || a.vertices[i] >= n) throw Rejection{"anchor vertex out of range"};
                for (int j = 0; j < i; ++j) {
                    if (a.vertices[i] == a.vertices[j]) throw Rejection{"anchor vertices repeat"};
                    if (!g.has_edge(a.vertices[i], a.vertices[j])) throw Rejection{"anchor is not a clique"};
                }
            }
            if (a.out_degrees != anchor_pattern(cert.mode, k)) throw Rejection{"anchor out-degrees differ from the mode's pattern"};
            for (int i = 0; i < k; ++i)
                if (d.out_degree(a.vertices[i]) != a.out_degrees[i])
                    throw Rejection{"anchor vertex " + std::to_string(a.vertices[i]) + " has out-degree " +
                                    std::to_string(d.out_degree(a.vertices[i]))};
            if (k == 3 && cert.mode == Mode::at4_matching)
                for (const auto& e : rem)
                    if (e.u == a.vertices[2] || e.v == a.vertices[2]) throw Rejection{"matching covers the anchor apex"};
            if (k == 3 && cert.mode == Mode::at3_forest && removed.count(make_edge(a.vertices[0], a.vertices[2])))
                throw Rejection{"forest contains the anchor edge uw"};
        }

        out.checks.push_back("acyclicity");
        bool acyclic = is_acyclic_orientation(d);
        if ((cert.acyclic || cert.mode == Mode::at3_forest) && !acyclic)
            throw Rejection{cert.mode == Mode::at3_forest ? "at3-forest requires an acyclic orientation"
                                                          : "orientation claimed acyclic has a directed cycle"};

        if (acyclic) {
            // Only the empty sub-digraph is Eulerian.
            out.diff = 1;
        } else if (rest.edge_count() <= exact_limit) {
            out.checks.push_back("exact Eulerian difference");
            std::optional<Signature> rsig;
            if (sig) rsig = sig->restrict_to(rest);
            out.diff = eulerian_diff(d, rsig ? &*rsig : nullptr, std::min(exact_limit, 62)).diff;
            if (*out.diff == 0) throw Rejection{"not an AT-orientation: diff = 0"};
        } else {
            out.checks.push_back("exact Eulerian difference skipped: " + std::to_string(rest.edge_count()) +
                                 " edges exceed the limit");
        }
        if (cert.diff && out.diff && *cert.diff != *out.diff)
            throw Rejection{"claimed diff " + std::to_string(*cert.diff) + " differs from the computed " +
                            std::to_string(*out.diff)};
        out.accepted = true;
    } catch (const Rejection& r) {
        out.accepted = false;
        out.reason = r.reason;
    } catch (const ResourceLimit&) {
        throw;  // the caller asked for a count that cannot be done exactly
    } catch (const Error& e) {
        out.accepted = false;
        out.reason = e.what();
    }
    return out;
}

std::string certificate_to_json(const Certificate& cert0) {
    Certificate cert = cert0;
    cert.normalize();
    json j = json::object();
    j["mode"] = std::string(mode_name(cert.mode));
    j["acyclic"] = cert.acyclic;
    j["bounds"] = cert.bounds;
    j["diff"] = cert.diff ? json(*cert.diff) : json(nullptr);
    json removed = json::array(), arcs = json::array();
    for (const auto& e : cert.removed) removed.push_back({e.u, e.v});
    for (const auto& a : cert.arcs) arcs.push_back({a.tail, a.head});
    j["removed"] = removed;
    j["arcs"] = arcs;
    if (cert.anchor) j["anchor"] = {{"out_degrees", cert.anchor->out_degrees}, {"vertices", cert.anchor->vertices}};
    if (cert.signs) {
        json s = json::array();
        for (const auto& e : *cert.signs) s.push_back({e.u, e.v, e.sign});
        j["signed"] = s;
    }
    return j.dump() + "\n";
}

namespace {

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw MalformedInput(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw MalformedInput(std::string(what) + " must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

std::vector<std::vector<int>> tuples(const json& j, const char* what, std::size_t width) {
    if (!j.is_array()) throw MalformedInput(std::string(what) + " must be an array");
    std::vector<std::vector<int>> out;
    for (const auto& t : j) {
        auto v = int_list(t, what);
        if (v.size() != width) throw MalformedInput(std::string(what) + " entries have the wrong length");
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

Certificate certificate_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw MalformedInput(std::string("certificate is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw MalformedInput("certificate must be a JSON object");
    static const std::set<std::string> known{"acyclic", "anchor", "arcs", "bounds", "diff", "mode", "removed", "signed"};
    for (const auto& [k, v] : j.items())
        if (!known.count(k)) throw MalformedInput("unknown certificate field '" + k + "'");
    for (const char* req : {"mode", "removed", "arcs", "bounds", "acyclic"})
        if (!j.contains(req)) throw MalformedInput(std::string("certificate lacks '") + req + "'");

    Certificate c;
    if (!j["mode"].is_string()) throw MalformedInput("mode must be a string");
    c.mode = parse_mode(j["mode"].get<std::string>());
    for (const auto& t : tuples(j["removed"], "removed", 2)) c.removed.push_back(make_edge(t[0], t[1]));
    for (const auto& t : tuples(j["arcs"], "arcs", 2)) c.arcs.push_back(Arc{t[0], t[1]});
    c.bounds = int_list(j["bounds"], "bounds");
    if (!j["acyclic"].is_boolean()) throw MalformedInput("acyclic must be a boolean");
    c.acyclic = j["acyclic"].get<bool>();
    if (j.contains("diff") && !j["diff"].is_null()) {
        if (!j["diff"].is_number_integer()) throw MalformedInput("diff must be an integer or null");
        c.diff = j["diff"].get<std::int64_t>();
    }
    if (j.contains("anchor")) {
        const auto& a = j["anchor"];
        if (!a.is_object() || !a.contains("vertices") || !a.contains("out_degrees"))
            throw MalformedInput("anchor needs vertices and out_degrees");
        c.anchor = Anchor{int_list(a["vertices"], "anchor vertices"), int_list(a["out_degrees"], "anchor out_degrees")};
    }
    if (j.contains("signed")) {
        c.signs.emplace();
        for (const auto& t : tuples(j["signed"], "signed", 3)) c.signs->push_back(SignedEdge{t[0], t[1], t[2]});
    }
    c.normalize();
    return c;
}

}  // namespace atcert
