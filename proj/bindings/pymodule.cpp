#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pentagon/canonical.hpp"
#include "pentagon/json_io.hpp"

namespace py = pybind11;
using namespace pentagon;

namespace {

std::string frac(const Rational& q) { return to_fraction_string(q); }

py::object json_to_py(const Json& j) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(j.dump());
}

const PatternFamily& named_family(const std::string& name) {
    if (name == "c5") return c5_family();
    if (name == "c22111") return c22111_family();
    if (name == "c31111") return c31111_family();
    throw std::invalid_argument("unknown family " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact verification toolkit for induced-C5 inducibility";

    py::class_<SmallGraph>(m, "SmallGraph")
        .def(py::init<int>(), py::arg("n"))
        .def_readonly("n", &SmallGraph::n)
        .def("edge", &SmallGraph::edge)
        .def("add_edge", &SmallGraph::add_edge)
        .def("remove_edge", &SmallGraph::remove_edge)
        .def("edge_count", &SmallGraph::edge_count)
        .def("graph6", [](const SmallGraph& g) { return to_graph6(g); })
        .def("__eq__", [](const SmallGraph& a, const SmallGraph& b) { return a == b; })
        .def("__repr__", [](const SmallGraph& g) { return "SmallGraph('" + to_graph6(g) + "')"; });

    m.def("from_graph6", &from_graph6, py::arg("text"));
    m.def("to_graph6", &to_graph6, py::arg("graph"));
    m.def("cycle", &SmallGraph::cycle, py::arg("n"));
    m.def("complete", &SmallGraph::complete, py::arg("n"));
    m.def("petersen", &SmallGraph::petersen);
    m.def("complement", &complement, py::arg("graph"));

    m.def("certificate", [](const SmallGraph& g) { return py::bytes(
              std::string(canonical_form(g).certificate.begin(), canonical_form(g).certificate.end())); });
    m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"));
    m.def("automorphism_count", &automorphism_count, py::arg("graph"));

    m.def("count_induced", &count_induced, py::arg("graph"), py::arg("pattern"));
    m.def("count_pattern", [](const SmallGraph& g, const std::string& name) {
        return count_family(g, named_family(name));
    }, py::arg("graph"), py::arg("pattern"));

    m.def("iterated_c5", [](int k) { return realize(BlowupTree::iterated_c5(k)); }, py::arg("k"));
    m.def("pentagon_blowup", [](const std::vector<SmallGraph>& inners) {
        if (inners.size() != 5) throw std::invalid_argument("need exactly 5 inner graphs");
        std::array<SmallGraph, 5> arr;
        std::copy(inners.begin(), inners.end(), arr.begin());
        return realize(BlowupTree::pentagon(arr));
    }, py::arg("inners"));
    m.def("recursion_value", [](long n) {
        return py::module_::import("builtins").attr("int")(recursion_value(n).get_str());
    }, py::arg("n"));
    m.def("detect_5_partition", [](const SmallGraph& g) -> py::object {
        DetectResult r = detect_5_partition(g);
        if (!r.partition) return py::none();
        py::list classes;
        for (const auto& cls : r.partition->classes) classes.append(cls);
        return classes;
    }, py::arg("graph"));

    m.def("limit_density", [](const std::string& pattern) {
        return frac(limit_density(SmallGraph::cycle(5), named_family(pattern)).density);
    }, py::arg("pattern"));
    m.def("finite_density", [](int k, const std::string& pattern) {
        return frac(finite_density(k, named_family(pattern)));
    }, py::arg("k"), py::arg("pattern"));

    m.def("qp_bound", [](const std::string& objective, const std::string& rhs_mode) {
        FlagConstants fc = FlagConstants::published();
        Rational rhs = rhs_mode == "derived" ? derive_main_threshold(fc) : rat(3979, 1000000);
        Objective obj = objective == "min_x1" ? Objective::MinX1
                        : objective == "max_x1" ? Objective::MaxX1
                        : objective == "max_x0" ? Objective::MaxX0
                                                : Objective::MaxF;
        ReducedSolution sol = solve_reduced({obj, rhs});
        if (!sol.feasible) throw std::runtime_error("infeasible program");
        return py::make_tuple(frac(sol.interval.lo), frac(sol.interval.hi));
    }, py::arg("objective"), py::arg("rhs_mode") = "derived");
    m.def("main_threshold", [] { return frac(derive_main_threshold(FlagConstants::published())); });

    m.def("grid_max", [](int steps, const std::string& mode, int threads, bool symmetry) {
        FeasMode fm = mode == "strict" ? FeasMode::Strict
                      : mode == "relaxed" ? FeasMode::Relaxed
                                          : FeasMode::Unconstrained;
        return json_to_py(to_json(grid_max(GridSpec{steps, rat(21, 100)}, fm, threads, symmetry)));
    }, py::arg("steps"), py::arg("mode") = "strict", py::arg("threads") = 1, py::arg("symmetry") = false);

    m.def("verify_claims", [](const std::string& rhs_mode, int grid_steps) {
        GridEvidence ev{grid_max(GridSpec{grid_steps, rat(21, 100)}, FeasMode::Strict, 1), std::nullopt};
        auto records = verify_claims(FlagConstants::published(),
                                     rhs_mode == "derived" ? RhsMode::Derived : RhsMode::Printed, ev);
        return json_to_py(to_json(records));
    }, py::arg("rhs_mode") = "derived", py::arg("grid_steps") = 100);

    m.def("exhaustive_c", [](int n) { return json_to_py(to_json(exhaustive_c(n, 0))); }, py::arg("n"));
    m.def("hill_climb", [](int n, std::uint64_t seed, std::uint64_t iters) {
        return json_to_py(to_json(hill_climb(n, seed, iters)));
    }, py::arg("n"), py::arg("seed"), py::arg("iterations") = 100);
}
