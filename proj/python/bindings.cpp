#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ngc/cache.hpp"
#include "ngc/cohomflow.hpp"
#include "ngc/json_io.hpp"
#include "ngc/tetraflow.hpp"

namespace py = pybind11;
using namespace ngc;

namespace {

EvalMode mode_from(const std::string& name) {
    if (name == "plain") return EvalMode::Plain;
    if (name == "skew") return EvalMode::Skew;
    if (name == "sym") return EvalMode::Sym;
    throw py::value_error("mode must be 'plain', 'skew' or 'sym'");
}

std::vector<Rat> rats_from(const std::vector<std::string>& texts) {
    std::vector<Rat> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(rat_from_string(t));
    return out;
}

std::vector<std::string> rats_to(const Column& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(rat_to_string(x));
    return out;
}

}  // namespace

PYBIND11_MODULE(_ngc, m) {
    m.doc() = "Exact graph calculus for Nambu-determinant Poisson structures";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<StructureError>(m, "StructureError");
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch");
    py::register_exception<BudgetExceeded>(m, "BudgetExceededError");

    py::class_<MicroGraph>(m, "MicroGraph")
        .def_readonly("dim", &MicroGraph::dim)
        .def_readonly("has_sink", &MicroGraph::has_sink)
        .def_readonly("n_lc", &MicroGraph::n_lc)
        .def_readonly("targets", &MicroGraph::targets)
        .def("encoding", &serialize_encoding)
        .def("__repr__", [](const MicroGraph& g) {
            return "MicroGraph('" + serialize_encoding(g) + "', dim=" +
                   std::to_string(g.dim) + ")";
        })
        .def("__eq__", [](const MicroGraph& a, const MicroGraph& b) { return a == b; });

    py::class_<Multivector>(m, "Multivector")
        .def("is_zero", &Multivector::is_zero)
        .def("degree", &Multivector::degree)
        .def_property_readonly("dim", &Multivector::dim)
        .def("display", &Multivector::display)
        .def("term_count",
             [](const Multivector& v) {
                 size_t n = 0;
                 for (const auto& [w, p] : v.components()) n += p.term_count();
                 return n;
             })
        .def("__repr__", [](const Multivector& v) { return v.display(); })
        .def("__eq__", [](const Multivector& a, const Multivector& b) { return a == b; })
        .def("__add__", [](const Multivector& a, const Multivector& b) { return a + b; })
        .def("__sub__",
             [](const Multivector& a, const Multivector& b) { return a + Rat(-1) * b; })
        .def("__rmul__", [](const Multivector& v, const std::string& c) {
            return rat_from_string(c) * v;
        });

    py::class_<CanonicalForm>(m, "CanonicalForm")
        .def_readonly("encoding", &CanonicalForm::encoding)
        .def_readonly("sign", &CanonicalForm::sign);

    m.def("parse_encoding", &parse_encoding, py::arg("text"), py::arg("dim"),
          py::arg("has_sink") = true);
    m.def("canonical_form", &canonical_form);
    m.def("generate_2d_vector_graphs", &generate_2d_vector_graphs,
          py::arg("n_lc") = 3);
    m.def("generate_hamiltonian_micrographs", &generate_hamiltonian_micrographs);
    m.def("descendants", &descendants);
    m.def("embed", &embed);
    m.def("swap_casimirs", &swap_casimirs);
    m.def("dedup_isomorphic", &dedup_isomorphic);

    m.def(
        "evaluate",
        [](const MicroGraph& g, const std::string& mode) {
            return evaluate_mode(g, mode_from(mode));
        },
        py::arg("graph"), py::arg("mode") = "plain");
    m.def(
        "evaluate_combination",
        [](const std::vector<std::string>& coeffs, const std::vector<MicroGraph>& gs,
           const std::string& mode) {
            return evaluate_combination(rats_from(coeffs), gs, mode_from(mode));
        },
        py::arg("coeffs"), py::arg("graphs"), py::arg("mode") = "plain");

    m.def("nambu_structure", &nambu_structure);
    m.def("tetrahedral_flow", &tetrahedral_flow);
    m.def("schouten_bracket", [](const Multivector& a, const Multivector& b) {
        JetRing ring{a.dim(), 16};
        return schouten_bracket(a, b, ring);
    });
    m.def("lichnerowicz", [](const Multivector& v) {
        JetRing ring{v.dim(), 16};
        return lichnerowicz(v, ring);
    });

    py::class_<PipelineResult>(m, "PipelineResult")
        .def_readonly("dim", &PipelineResult::dim)
        .def_readonly("has_solution", &PipelineResult::has_solution)
        .def_property_readonly(
            "solution", [](const PipelineResult& r) { return rats_to(r.solution); })
        .def_property_readonly("kernel",
                               [](const PipelineResult& r) {
                                   std::vector<std::vector<std::string>> out;
                                   for (const auto& k : r.kernel)
                                       out.push_back(rats_to(k));
                                   return out;
                               })
        .def_readonly("seconds", &PipelineResult::seconds)
        .def("to_json", &PipelineResult::to_json_string);

    m.def(
        "solve_trivialization",
        [](int dim, const std::vector<MicroGraph>& family, const std::string& mode) {
            return solve_trivialization(dim, family, mode_from(mode));
        },
        py::arg("dim"), py::arg("family"), py::arg("mode") = "plain");
    m.def(
        "homogeneous_kernel",
        [](int dim, const std::vector<MicroGraph>& family, const std::string& mode) {
            return homogeneous_kernel(dim, family, mode_from(mode));
        },
        py::arg("dim"), py::arg("family"), py::arg("mode") = "plain");

    py::class_<SynonymClass>(m, "SynonymClass")
        .def_readonly("members", &SynonymClass::members)
        .def_property_readonly(
            "scales", [](const SynonymClass& c) { return rats_to(c.scales); });
    m.def(
        "detect_synonyms",
        [](const std::vector<MicroGraph>& family, const std::string& mode) {
            return detect_synonyms(family, mode_from(mode));
        },
        py::arg("family"), py::arg("mode") = "plain");
    m.def("trivializing_pairs_2d", &trivializing_pairs_2d);

    py::class_<PairTable>(m, "PairTable")
        .def_readonly("dim", &PairTable::dim)
        .def_readonly("row_graphs", &PairTable::row_graphs)
        .def_readonly("col_graphs", &PairTable::col_graphs)
        .def_readonly("cells", &PairTable::cells)
        .def("to_csv", &PairTable::to_csv)
        .def("to_json", &PairTable::to_json_string);
    m.def("pair_search_table", &pair_search_table, py::arg("dim"),
          py::arg("cell_budget_seconds") = -1.0);

    m.def("set_cache_directory", &cache::set_directory);
    m.def("cache_directory", &cache::directory);
}
