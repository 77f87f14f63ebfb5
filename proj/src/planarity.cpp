#include "atcert/planarity.hpp"

#include "atcert/errors.hpp"

#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace atcert {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

struct DartIndex {
    std::map<std::pair<int, int>, int> face;
};

DartIndex trace(const PlaneEmbedding& emb, std::vector<std::vector<int>>* walks) {
    DartIndex idx;
    const int n = emb.base.vertex_count();
    std::vector<std::map<int, int>> pos(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < static_cast<int>(emb.rotation[v].size()); ++i) pos[v][emb.rotation[v][i]] = i;
    int count = 0;
    for (int u = 0; u < n; ++u) {
        for (int v : emb.rotation[u]) {
            if (idx.face.count({u, v})) continue;
            std::vector<int> walk;
            int a = u, b = v;
            while (!idx.face.count({a, b})) {
                idx.face[{a, b}] = count;
                walk.push_back(a);
                const auto& rot = emb.rotation[b];
                int i = pos[b].at(a);
                int c = rot[(i + 1) % rot.size()];
                a = b;
                b = c;
            }
            if (walks) walks->push_back(std::move(walk));
            ++count;
        }
    }
    return idx;
}

}  // namespace

std::vector<std::vector<int>> PlaneEmbedding::faces() const {
    std::vector<std::vector<int>> out;
    trace(*this, &out);
    return out;
}

int PlaneEmbedding::face_of_dart(int tail, int head) const {
    auto idx = trace(*this, nullptr);
    auto it = idx.face.find({tail, head});
    if (it == idx.face.end()) throw PreconditionError("dart is not an edge of the embedding");
    return it->second;
}

std::vector<int> PlaneEmbedding::outer_boundary() const {
    auto f = faces();
    if (f.empty()) return {};
    return f.at(static_cast<std::size_t>(outer_face));
}

bool PlaneEmbedding::is_valid() const {
    const int n = base.vertex_count();
    if (static_cast<int>(rotation.size()) != n) return false;
    for (int v = 0; v < n; ++v) {
        auto r = rotation[v];
        std::sort(r.begin(), r.end());
        auto nb = base.neighbors(v);
        if (!std::equal(r.begin(), r.end(), nb.begin(), nb.end())) return false;
    }
    auto f = faces();
    if (!f.empty() && (outer_face < 0 || outer_face >= static_cast<int>(f.size()))) return false;
    auto comps = connected_components(base);
    // Tracing yields no face for an isolated vertex; each component otherwise
    // contributes its own outer face, all of which coincide in the plane.
    long long face_count = static_cast<long long>(f.size());
    for (const auto& c : comps)
        if (c.size() == 1) ++face_count;
    face_count -= static_cast<long long>(comps.size()) - 1;
    if (comps.empty()) return true;
    return static_cast<long long>(n) - base.edge_count() + face_count == 1 + static_cast<long long>(comps.size());
}

std::optional<PlaneEmbedding> planar_embedding(const Graph& g) {
    const int n = g.vertex_count();
    BoostGraph bg(static_cast<std::size_t>(n));
    for (const auto& e : g.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    auto edge_ids = boost::get(boost::edge_index, bg);
    int k = 0;
    for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(edge_ids, *it, k++);

    std::vector<std::vector<BoostEdge>> rot(static_cast<std::size_t>(n));
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(rot.begin(), boost::get(boost::vertex_index, bg)));
    if (!planar) return std::nullopt;

    PlaneEmbedding emb;
    emb.base = g;
    emb.rotation.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        for (const auto& e : rot[v]) {
            int s = static_cast<int>(boost::source(e, bg)), t = static_cast<int>(boost::target(e, bg));
            emb.rotation[v].push_back(s == v ? t : s);
        }
    emb.outer_face = 0;
    if (!emb.is_valid()) throw InternalError("planarity test returned an invalid rotation system");
    return emb;
}

}  // namespace atcert
