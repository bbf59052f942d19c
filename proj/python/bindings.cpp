#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bvhodge/closed_forms.hpp"
#include "bvhodge/error.hpp"
#include "bvhodge/orbifold_engine.hpp"
#include "bvhodge/report.hpp"

namespace py = pybind11;
using namespace bvhodge;

namespace {

std::vector<std::vector<Count>> rows(const HodgeDiamond& h) {
    std::vector<std::vector<Count>> out(static_cast<std::size_t>(h.dim() + 1));
    for (int p = 0; p <= h.dim(); ++p)
        for (int q = 0; q <= h.dim(); ++q) out[static_cast<std::size_t>(p)].push_back(h.at(p, q));
    return out;
}

std::pair<Count, Count> as_pair(const HodgePair& h) { return {h.h11, h.h21}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hodge numbers of Borcea-Voisin threefolds of order 2, 3, 4 and 6";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());

    m.def(
        "run_json",
        [](const std::string& document, bool checks) {
            return to_json(run(parse_document(document), RunOptions{checks})).dump();
        },
        py::arg("document"), py::arg("checks") = true, "Run a configuration document; returns the JSON report.");
    m.def(
        "emit_text",
        [](const std::string& document, bool checks) {
            return emit(run(parse_document(document), RunOptions{checks}), Format::text);
        },
        py::arg("document"), py::arg("checks") = true);
    m.def(
        "hodge_diamond", [](const std::string& document) { return rows(orbifold_hodge_diamond(parse_config_text(document))); },
        py::arg("document"));
    m.def(
        "euler_pairsum", [](const std::string& document) { return orbifold_euler_pairsum(parse_config_text(document)); },
        py::arg("document"));
    m.def(
        "sector_diamond",
        [](const std::string& document, int j) {
            const auto cfg = parse_config_text(document);
            return rows(sector_contribution(cfg, GroupElement(cfg.order, j)).total);
        },
        py::arg("document"), py::arg("j"));

    m.def(
        "hodge_order2", [](Count r, Count mm, Count N, Count Np) { return as_pair(hodge_order2(r, mm, N, Np)); },
        py::arg("r"), py::arg("m"), py::arg("N"), py::arg("N_prime"));
    m.def(
        "classic_bv", [](Count N, Count Np) { return as_pair(classic_bv(N, Np)); }, py::arg("N"), py::arg("N_prime"));
    m.def(
        "hodge_order3",
        [](Count r, Count mm, Count k, Count n, Count g) { return as_pair(hodge_order3(r, mm, k, n, g)); },
        py::arg("r"), py::arg("m"), py::arg("k"), py::arg("n_points"), py::arg("g_C"));
    m.def(
        "aas_relations_order4",
        [](Count k, Count a, Count b, Count g_D, Count h) {
            const auto d = aas_relations_order4(k, a, b, g_D, h);
            return std::make_pair(d.r, d.m);
        },
        py::arg("k"), py::arg("a"), py::arg("b"), py::arg("g_D"), py::arg("h"));
    m.def("euler_formula", [](int order, const std::vector<Count>& e) { return euler_formula(order, e); },
          py::arg("order"), py::arg("fixed_euler"));
    m.def("cy_euler_relation", &cy_euler_relation, py::arg("h11"), py::arg("e"));
    m.def("corollary_order6",
          py::overload_cast<Count, Count, Count, Count, Count, Count, Count, Count, Count, Count>(&corollary_order6),
          py::arg("r"), py::arg("m"), py::arg("l"), py::arg("b"), py::arg("a"), py::arg("n_prime"), py::arg("p25"),
          py::arg("p34"), py::arg("n"), py::arg("g_D"));
    m.def(
        "elliptic_orbits",
        [](int n) {
            std::map<int, std::vector<int>> out;
            for (const auto& locus : elliptic_fixture(n).loci) out[locus.subgroup_order] = locus.orbit_sizes;
            return out;
        },
        py::arg("n"), "Orbit sizes of the fixed points of each subgroup of the elliptic-curve automorphism.");
}
