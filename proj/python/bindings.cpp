#include <linkgraph/cli.hpp>
#include <linkgraph/error.hpp>
#include <linkgraph/harness.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace linkgraph;

namespace
{
    auto dumped(const nlohmann::json & j) -> std::string
    {
        return j.dump();
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Link graphs of multigraphs: construction, colourings and minor witnesses.";

    static py::exception<Error> error(m, "LinkgraphError");
    py::register_exception_translator([] (std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        }
        catch (const Error & e) {
            PyErr_SetObject(error.ptr(), py::make_tuple(std::string(to_string(e.code())), e.what()).ptr());
        }
    });

    py::class_<Multigraph>(m, "Multigraph")
        .def_property_readonly("vertex_count", &Multigraph::vertex_count)
        .def_property_readonly("edge_count", &Multigraph::edge_count)
        .def_property_readonly("vertex_ids", &Multigraph::vertex_ids)
        .def_property_readonly("edge_ids", &Multigraph::edge_ids)
        .def("endpoints", [] (const Multigraph & g, const std::string & edge) {
            auto [a, b] = g.endpoints(g.edge_index(edge));
            return std::pair{ g.vertex_id(a), g.vertex_id(b) };
        })
        .def("degree", [] (const Multigraph & g, const std::string & v) { return degree(g, v); })
        .def("to_edge_list", [] (const Multigraph & g) { return serialize_edge_list(g); })
        .def("__repr__", [] (const Multigraph & g) {
            return "<Multigraph " + std::to_string(g.vertex_count()) + " vertices, " +
                std::to_string(g.edge_count()) + " edges>";
        });

    m.def("parse_edge_list", [] (const std::string & text) { return parse_edge_list(text); }, py::arg("text"));
    m.def("dipole", &dipole, py::arg("t"));
    m.def("complete", &complete, py::arg("n"));
    m.def("complete_bipartite", &complete_bipartite, py::arg("n"), py::arg("m"));
    m.def("cycle", &cycle, py::arg("n"));
    m.def("path", &path, py::arg("n"));
    m.def("petersen", &petersen);
    m.def("wheel", &wheel, py::arg("n"));
    m.def("random_multigraph", &random_multigraph, py::arg("n"), py::arg("m"), py::arg("seed"));
    m.def("figure_two_graph", &figure_two_graph);

    m.def("degeneracy", [] (const Multigraph & g) { return degeneracy(g); });
    m.def("girth", [] (const Multigraph & g) { return girth(g); });

    m.def("link_graph_json", [] (const Multigraph & g, std::size_t ell, std::size_t limit) {
        return dumped(to_json(link_graph(g, ell, limit)));
    }, py::arg("g"), py::arg("ell"), py::arg("limit") = default_link_limit);
    m.def("path_graph_json", [] (const Multigraph & g, std::size_t ell, std::size_t limit) {
        return dumped(to_json(path_graph(g, ell, limit)));
    }, py::arg("g"), py::arg("ell"), py::arg("limit") = default_link_limit);
    m.def("arc_digraph_json", [] (const Multigraph & g, std::size_t ell, std::size_t limit) {
        return dumped(to_json(arc_digraph(g, ell, limit), g));
    }, py::arg("g"), py::arg("ell"), py::arg("limit") = default_link_limit);

    m.def("chromatic_number", [] (const Multigraph & g, std::size_t ell, std::size_t cap) {
        return exact_chromatic(link_graph(g, ell), cap).chi;
    }, py::arg("g"), py::arg("ell"), py::arg("cap") = default_colour_oracle_cap);
    m.def("recursive_colouring_json", [] (const Multigraph & g, std::size_t ell) {
        auto r = recursive_chromatic_bound(g, ell);
        auto j = to_json(link_graph(g, ell), r.coloring);
        return dumped(nlohmann::json{ { "colours", r.colours }, { "chain", r.chain }, { "coloring", j } });
    }, py::arg("g"), py::arg("ell"));

    m.def("hadwiger_lower_bound_json", [] (const Multigraph & g, std::size_t ell, std::size_t search_rounds,
                std::uint64_t seed) {
        HadwigerOptions options;
        options.search_rounds = search_rounds;
        options.seed = seed;
        auto h = link_graph(g, ell);
        auto b = hadwiger_lower_bound(h, options);
        return dumped(nlohmann::json{ { "bound", b.bound }, { "route", b.route },
            { "verified", verify_minor(h, b.witness).ok }, { "witness", to_json(h, b.witness) } });
    }, py::arg("g"), py::arg("ell"), py::arg("search_rounds") = 0, py::arg("seed") = 1);

    m.def("verify_json", [] (const std::vector<std::string> & claims, bool timing) {
        return dumped(to_json(verify_suite(default_corpus(), claims), timing));
    }, py::arg("claims") = std::vector<std::string>{}, py::arg("timing") = false);

    m.def("run_cli", [] (const std::vector<std::string> & args) {
        std::ostringstream out, err;
        auto code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
