#include "atcert/certificate.hpp"
#include "atcert/certifier.hpp"
#include "atcert/constructor.hpp"
#include "atcert/decompose.hpp"
#include "atcert/errors.hpp"
#include "atcert/generate.hpp"
#include "atcert/graph_io.hpp"
#include "atcert/planarity.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

namespace py = pybind11;
using namespace atcert;

namespace {

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Edge> e;
    e.reserve(edges.size());
    for (auto [u, v] : edges) e.push_back({u, v});
    return Graph(n, std::move(e));
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

// Signs arrive aligned with g.edges(), which is the sorted edge order.
std::optional<Signature> make_signature(const Graph& g, const std::optional<std::vector<int>>& signs) {
    if (!signs) return std::nullopt;
    std::vector<std::int8_t> s(signs->begin(), signs->end());
    return Signature(g, std::move(s));
}

const Signature* ptr(const std::optional<Signature>& s) { return s ? &*s : nullptr; }

}  // namespace

PYBIND11_MODULE(_atcert, m) {
    m.doc() = "Alon-Tarsi certificates for K5-minor-free graphs";

    auto error = py::register_exception<Error>(m, "AtcertError");
    py::register_exception<MalformedInput>(m, "MalformedInput", PyExc_ValueError);
    py::register_exception<ResourceLimit>(m, "ResourceLimit", error.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
    py::register_exception<K5MinorDetected>(m, "K5MinorDetected", error.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edges", &edge_list)
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(" + std::to_string(g.vertex_count()) + ", " + std::to_string(g.edge_count()) + " edges)";
        });

    m.def("parse_graph", [](const std::string& text) {
        auto p = parse_graph_string(text);
        std::optional<std::vector<int>> signs;
        if (p.signature) signs = std::vector<int>(p.signature->signs().begin(), p.signature->signs().end());
        return std::make_tuple(p.graph, signs);
    });
    m.def("format_graph", [](const Graph& g, const std::optional<std::vector<int>>& signs) {
        auto s = make_signature(g, signs);
        return format_graph(g, ptr(s));
    }, py::arg("g"), py::arg("signs") = py::none());

    m.def("degeneracy", [](const Graph& g) { return degeneracy_order(g).degeneracy; });
    m.def("is_planar", &is_planar);
    m.def("is_wagner", &is_wagner);
    m.def("has_k5_minor", &has_k5_minor);
    m.def("wagner_graph", &wagner_graph);
    m.def("complete_graph", &complete_graph);
    m.def("cycle_graph", &cycle_graph);

    m.def("eulerian_diff", [](int n, const std::vector<std::pair<int, int>>& arcs,
                              const std::optional<std::vector<int>>& positive, int limit) {
        std::vector<Arc> a;
        for (auto [t, h] : arcs) a.push_back({t, h});
        std::vector<std::uint8_t> pos;
        if (positive) pos.assign(positive->begin(), positive->end());
        auto c = eulerian_diff(n, a, pos, limit);
        return std::make_tuple(c.even_count, c.odd_count, c.diff);
    }, py::arg("n"), py::arg("arcs"), py::arg("positive") = py::none(), py::arg("limit") = default_exact_limit);

    m.def("coeff_of_monomial", [](const Graph& g, const std::vector<int>& exps, const std::optional<std::vector<int>>& signs) {
        auto s = make_signature(g, signs);
        return coeff_of_monomial(g, exps, ptr(s));
    }, py::arg("g"), py::arg("exponents"), py::arg("signs") = py::none());

    m.def("alon_tarsi_number", [](const Graph& g, const std::optional<std::vector<int>>& signs, int limit) {
        auto s = make_signature(g, signs);
        return alon_tarsi_number(g, ptr(s), limit);
    }, py::arg("g"), py::arg("signs") = py::none(), py::arg("limit") = default_at_limit);

    m.def("certify", [](const Graph& g, const std::string& mode, const std::optional<std::vector<int>>& anchor,
                        const std::optional<std::vector<int>>& signs) {
        auto s = make_signature(g, signs);
        return certificate_to_json(solve(g, parse_mode(mode), anchor, ptr(s)));
    }, py::arg("g"), py::arg("mode") = "at5", py::arg("anchor") = py::none(), py::arg("signs") = py::none(),
       "Certificate JSON for g; raises K5MinorDetected when g has a K5 minor.");

    m.def("verify", [](const Graph& g, const std::string& certificate, int exact_limit,
                       const std::optional<std::vector<int>>& signs) {
        auto s = make_signature(g, signs);
        auto v = verify_certificate(g, certificate_from_json(certificate), exact_limit, ptr(s));
        py::dict d;
        d["accepted"] = v.accepted;
        d["reason"] = v.reason;
        d["checks"] = v.checks;
        d["diff"] = v.diff;
        return d;
    }, py::arg("g"), py::arg("certificate"), py::arg("exact_limit") = default_exact_limit, py::arg("signs") = py::none());

    m.def("generate", [](const std::string& kind, int n, std::uint64_t seed) {
        return generate(parse_kind(kind), n, seed);
    }, py::arg("kind"), py::arg("n"), py::arg("seed"));
}
