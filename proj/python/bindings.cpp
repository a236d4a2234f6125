#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "maxenergy/bounds.hpp"
#include "maxenergy/characterization.hpp"
#include "maxenergy/construction.hpp"
#include "maxenergy/errors.hpp"
#include "maxenergy/graph.hpp"
#include "maxenergy/matrix.hpp"
#include "maxenergy/number_theory.hpp"
#include "maxenergy/spectra.hpp"

namespace py = pybind11;
using namespace maxenergy;

namespace {

std::vector<std::vector<double>> matrix_rows(const RealMatrix& a) {
    std::vector<std::vector<double>> rows(a.rows(), std::vector<double>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
    return rows;
}

std::vector<std::pair<std::size_t, std::size_t>> graph_edges(const Graph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    return edges;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Graph and matrix energy toolkit: spectra, bounds, extremal "
              "constructions and near-maximal-energy grading.";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<OverflowError>(m, "SearchOverflowError", PyExc_OverflowError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<RealMatrix>(m, "Matrix", py::buffer_protocol())
        .def(py::init([](const std::vector<std::vector<double>>& rows) {
                 return RealMatrix::from_rows(rows);
             }),
             py::arg("rows"))
        .def_static("constant", &RealMatrix::constant, py::arg("rows"),
                    py::arg("cols"), py::arg("value"))
        .def_property_readonly("rows", &RealMatrix::rows)
        .def_property_readonly("cols", &RealMatrix::cols)
        .def("entry", [](const RealMatrix& a, std::size_t i,
                         std::size_t j) { return a(i, j); })
        .def("to_rows", &matrix_rows)
        .def("transposed", &RealMatrix::transposed)
        .def("is_symmetric", &RealMatrix::is_symmetric)
        .def("is_nonnegative", &RealMatrix::is_nonnegative)
        .def_buffer([](RealMatrix& a) -> py::buffer_info {
            return py::buffer_info(
                const_cast<double*>(a.data().data()), sizeof(double),
                py::format_descriptor<double>::format(), 2,
                {a.rows(), a.cols()}, {sizeof(double) * a.cols(), sizeof(double)},
                /*readonly=*/true);
        })
        .def("__repr__", [](const RealMatrix& a) {
            return "Matrix(" + std::to_string(a.rows()) + "x" +
                   std::to_string(a.cols()) + ")";
        });

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("order"))
        .def("order", &Graph::order)
        .def("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("add_edge", &Graph::add_edge)
        .def("edges", &graph_edges)
        .def("__repr__", [](const Graph& g) {
            return "Graph(order=" + std::to_string(g.order()) +
                   ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    // spectra
    m.def("symmetric_eigenvalues",
          [](const RealMatrix& a) { return symmetric_eigenvalues(a).values; },
          py::arg("matrix"), py::call_guard<py::gil_scoped_release>());
    m.def("singular_values",
          [](const RealMatrix& a) { return singular_values(a).values; },
          py::arg("matrix"), py::call_guard<py::gil_scoped_release>());
    m.def("energy", &energy, py::arg("matrix"),
          py::call_guard<py::gil_scoped_release>());
    m.def("entrywise_norms",
          [](const RealMatrix& a) {
              const EntrywiseNorms n = entrywise_norms(a);
              return py::make_tuple(n.l1, n.frob_sq, n.max_abs);
          },
          py::arg("matrix"));

    // number theory
    py::class_<PrimeWitness>(m, "PrimeWitness")
        .def_readonly("p", &PrimeWitness::p)
        .def_readonly("residue_class", &PrimeWitness::residue_class)
        .def("__repr__", [](const PrimeWitness& w) {
            return "PrimeWitness(p=" + std::to_string(w.p) + ")";
        });
    m.def("is_prime", &is_prime, py::arg("n"));
    m.def("find_prime_1mod4", &find_prime_1mod4, py::arg("n"));
    m.def("window_check", &window_check, py::arg("n"), py::arg("p"));
    m.def("quadratic_residues", &quadratic_residues, py::arg("p"));
    m.def("is_quadratic_residue", &is_quadratic_residue, py::arg("a"), py::arg("p"));

    // graphs
    m.def("paley_graph", &paley_graph, py::arg("p"),
          py::call_guard<py::gil_scoped_release>());
    m.def("induced_subgraph", &induced_subgraph, py::arg("graph"), py::arg("vertices"));
    m.def("complement", &complement, py::arg("graph"));
    m.def("adjacency_matrix", &adjacency_matrix, py::arg("graph"));
    m.def("graph_energy", &graph_energy, py::arg("graph"),
          py::call_guard<py::gil_scoped_release>());
    m.def("parse_graph", &parse_graph, py::arg("text"));
    m.def("serialize_graph", &serialize_graph, py::arg("graph"));
    m.def("parse_matrix", &parse_matrix, py::arg("text"));
    m.def("serialize_matrix", &serialize_matrix, py::arg("matrix"));

    // bounds
    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("name", &BoundReport::name)
        .def_readonly("value", &BoundReport::value)
        .def_readonly("subject_energy", &BoundReport::subject_energy)
        .def_readonly("is_upper", &BoundReport::is_upper)
        .def_readonly("applicable", &BoundReport::applicable)
        .def_readonly("slack", &BoundReport::slack)
        .def_property_readonly("satisfied",
                               [](const BoundReport& r) -> py::object {
                                   if (!r.satisfied) return py::none();
                                   return py::bool_(*r.satisfied);
                               });
    py::class_<ChainStep>(m, "ChainStep")
        .def_readonly("label", &ChainStep::label)
        .def_readonly("lhs", &ChainStep::lhs)
        .def_readonly("rhs", &ChainStep::rhs)
        .def_readonly("holds", &ChainStep::holds);
    py::class_<ChainDiagnostic>(m, "ChainDiagnostic")
        .def_readonly("alpha", &ChainDiagnostic::alpha)
        .def_readonly("n", &ChainDiagnostic::n)
        .def_readonly("subject_energy", &ChainDiagnostic::subject_energy)
        .def_readonly("steps", &ChainDiagnostic::steps);
    m.def("koolen_moulton_bound", &koolen_moulton_bound, py::arg("n"));
    m.def("matrix_energy_upper", &matrix_energy_upper, py::arg("m"), py::arg("n"),
          py::arg("alpha"));
    m.def("refined_upper", &refined_upper, py::arg("matrix"));
    m.def("energy_lower", &energy_lower, py::arg("sigma1"), py::arg("sigma2"),
          py::arg("e"));
    m.def("paley_energy_floor", &paley_energy_floor, py::arg("p"));
    m.def("energy_bound_chain", &energy_bound_chain, py::arg("matrix"),
          py::call_guard<py::gil_scoped_release>());

    // construction
    py::class_<ConstructionReport>(m, "ConstructionReport")
        .def_readonly("n", &ConstructionReport::n)
        .def_readonly("p", &ConstructionReport::p)
        .def_readonly("window_ok", &ConstructionReport::window_ok)
        .def_readonly("x", &ConstructionReport::x)
        .def_readonly("induced_edges", &ConstructionReport::induced_edges)
        .def_readonly("edge_target", &ConstructionReport::edge_target)
        .def_readonly("energy_achieved", &ConstructionReport::energy_achieved)
        .def_readonly("energy_floor", &ConstructionReport::energy_floor)
        .def_readonly("target", &ConstructionReport::target)
        .def_readonly("certified", &ConstructionReport::certified)
        .def_readonly("seed", &ConstructionReport::seed)
        .def_readonly("restarts_used", &ConstructionReport::restarts_used)
        .def_readonly("rng", &ConstructionReport::rng)
        .def("to_text", &ConstructionReport::to_text)
        .def("to_json", &ConstructionReport::to_json)
        .def("__repr__", [](const ConstructionReport& r) {
            return "ConstructionReport(n=" + std::to_string(r.n) +
                   ", certified=" + (r.certified ? "True" : "False") + ")";
        });
    m.def("select_dense_subset", &select_dense_subset, py::arg("graph"), py::arg("k"),
          py::arg("seed"), py::arg("budget") = kDefaultRestartBudget,
          py::call_guard<py::gil_scoped_release>());
    m.def("construction_target", &construction_target, py::arg("n"));
    m.def("construct_max_energy_graph", &construct_max_energy_graph, py::arg("n"),
          py::arg("seed") = 0, py::arg("budget") = kDefaultRestartBudget,
          py::call_guard<py::gil_scoped_release>());

    // characterization
    py::class_<ConditionReport>(m, "ConditionReport")
        .def_readonly("value", &ConditionReport::value)
        .def_readonly("threshold", &ConditionReport::threshold)
        .def_readonly("passed", &ConditionReport::passed);
    py::class_<CharacterizationReport>(m, "CharacterizationReport")
        .def_readonly("n", &CharacterizationReport::n)
        .def_readonly("epsilon", &CharacterizationReport::epsilon)
        .def_readonly("delta", &CharacterizationReport::delta)
        .def_readonly("alpha", &CharacterizationReport::alpha)
        .def_readonly("energy", &CharacterizationReport::energy)
        .def_readonly("hypothesis_threshold",
                      &CharacterizationReport::hypothesis_threshold)
        .def_readonly("hypothesis_met", &CharacterizationReport::hypothesis_met)
        .def_readonly("alpha_exceeds_2eps",
                      &CharacterizationReport::alpha_exceeds_2eps)
        .def_readonly("cond_i", &CharacterizationReport::cond_i)
        .def_readonly("cond_ii", &CharacterizationReport::cond_ii)
        .def_readonly("cond_iii", &CharacterizationReport::cond_iii)
        .def_readonly("cond_iv", &CharacterizationReport::cond_iv)
        .def_readonly("cond_v", &CharacterizationReport::cond_v)
        .def_readonly("cond_v_index_lo", &CharacterizationReport::cond_v_index_lo)
        .def_readonly("cond_v_index_hi", &CharacterizationReport::cond_v_index_hi)
        .def("to_text", &CharacterizationReport::to_text)
        .def("to_json", &CharacterizationReport::to_json);
    py::class_<ComplementEnergyCheck>(m, "ComplementEnergyCheck")
        .def_readonly("premise", &ComplementEnergyCheck::premise)
        .def_readonly("conclusion", &ComplementEnergyCheck::conclusion)
        .def_readonly("energy", &ComplementEnergyCheck::energy)
        .def_readonly("complement_energy", &ComplementEnergyCheck::complement_energy)
        .def_readonly("premise_threshold", &ComplementEnergyCheck::premise_threshold)
        .def_readonly("conclusion_threshold",
                      &ComplementEnergyCheck::conclusion_threshold);
    m.def("grade_near_maximal", &grade_near_maximal, py::arg("matrix"),
          py::arg("epsilon"), py::arg("delta"),
          py::call_guard<py::gil_scoped_release>());
    m.def("complement_energy", &complement_energy, py::arg("matrix"),
          py::call_guard<py::gil_scoped_release>());
    m.def("complement_energy_check", &complement_energy_check, py::arg("matrix"),
          py::arg("epsilon"), py::arg("delta"),
          py::call_guard<py::gil_scoped_release>());
}
