#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circpow/constructions.hpp"
#include "circpow/invariants.hpp"
#include "circpow/io.hpp"
#include "circpow/verify.hpp"

namespace py = pybind11;
using namespace circpow;

namespace {

SearchOptions make_options(double budget, bool parallel, bool symmetry) {
    SearchOptions o;
    if (budget > 0) o.budget_seconds = budget;
    o.parallel = parallel;
    o.symmetry = symmetry;
    return o;
}

// Found -> vertex map, None -> Python None, Timeout -> TimeoutError.
py::object hom_to_python(HomResult&& r) {
    if (r.status == HomStatus::Timeout)
        throw TimeoutError("homomorphism search timed out");
    if (r.status == HomStatus::None) return py::none();
    return py::cast(r.certificate.map);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact graph powers, homomorphisms and chromatic invariants";
    m.attr("__version__") = kToolVersion;

    py::register_exception<TimeoutError>(m, "Timeout");
    py::register_exception<LoopCreatedError>(m, "LoopCreated");
    py::register_exception<CapExceededError>(m, "CapExceeded");
    py::register_exception<GraphError>(m, "GraphInputError");

    py::class_<Rational>(m, "Rational")
        .def(py::init<long long>())
        .def(py::init<long long, long long>())
        .def_property_readonly("num", &Rational::num)
        .def_property_readonly("den", &Rational::den)
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; })
        .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
        .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; })
        .def("__le__", [](const Rational& a, const Rational& b) { return a <= b; })
        .def("__add__", [](const Rational& a, const Rational& b) { return a + b; })
        .def("__sub__", [](const Rational& a, const Rational& b) { return a - b; })
        .def("__mul__", [](const Rational& a, const Rational& b) { return a * b; })
        .def("__truediv__", [](const Rational& a, const Rational& b) { return a / b; });

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def_property_readonly("name", &Graph::name)
        .def_property_readonly("labels", &Graph::labels)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("edges", &Graph::edges)
        .def("vertex_transitive", &Graph::vertex_transitive)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::string n = g.name().empty() ? "graph" : g.name();
            return "<" + n + ": order=" + std::to_string(g.order()) +
                   " size=" + std::to_string(g.size()) + ">";
        });

    m.def("make_graph", &make_graph, py::arg("order"), py::arg("edges"),
          py::arg("labels") = std::vector<std::string>{});
    m.def("walk_power", &walk_power, py::arg("graph"), py::arg("k"));
    m.def(
        "walk_neighborhood",
        [](const Graph& g, int v, int steps) {
            return walk_neighborhood(g, v, steps).to_vector();
        },
        py::arg("graph"), py::arg("vertex"), py::arg("steps"));
    m.def(
        "odd_girth",
        [](const Graph& g) -> py::object {
            auto og = odd_girth(g);
            if (!og) return py::none(); // bipartite: infinite odd girth
            return py::int_(*og);
        },
        py::arg("graph"));
    m.def(
        "remove",
        [](const Graph& g, const std::vector<int>& vertices, const EdgeList& edges) {
            Subgraph s = remove(g, vertices, edges);
            return py::make_tuple(s.graph, s.original_vertex);
        },
        py::arg("graph"), py::arg("vertices") = std::vector<int>{},
        py::arg("edges") = EdgeList{});
    m.def("complement", &complement, py::arg("graph"));
    m.def("disjoint_union", &disjoint_union, py::arg("a"), py::arg("b"));
    m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"),
          py::arg("budget") = 60.0);

    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def("petersen", &petersen);
    m.def("circular_complete", &circular_complete, py::arg("n"), py::arg("d"));
    m.def("kneser", &kneser, py::arg("m"), py::arg("n"), py::arg("s") = 0);
    m.def("kneser_vertex_sets", &kneser_vertex_sets, py::arg("m"), py::arg("n"));
    m.def("subdivide", &subdivide, py::arg("graph"), py::arg("s"));
    m.def("frac_power", &frac_power, py::arg("graph"), py::arg("r"), py::arg("s"));
    m.def("dual_power_base", &dual_power_base, py::arg("graph"), py::arg("s"),
          py::arg("vertex_cap") = 20000);
    m.def("dual_power", &dual_power, py::arg("graph"), py::arg("r"), py::arg("s"),
          py::arg("vertex_cap") = 20000);
    m.def("hajos_chain", &hajos_chain, py::arg("d"), py::arg("n"));
    m.def("hajos_circular_coloring", &hajos_circular_coloring, py::arg("d"), py::arg("n"));
    m.def("fractional_embedding", &fractional_embedding, py::arg("graph"), py::arg("f"),
          py::arg("m"), py::arg("n"), py::arg("s"));
    m.def("kneser_walk_condition", &kneser_walk_condition, py::arg("m"), py::arg("n"),
          py::arg("k"), py::arg("l"));

    m.def(
        "find_homomorphism",
        [](const Graph& g, const Graph& h, double budget, bool parallel, bool symmetry) {
            return hom_to_python(find_homomorphism(g, h, make_options(budget, parallel, symmetry)));
        },
        py::arg("source"), py::arg("target"), py::arg("budget") = 0.0,
        py::arg("parallel") = false, py::arg("symmetry") = true,
        "Vertex map if one exists, None if provably none; raises Timeout.");
    m.def(
        "check_homomorphism",
        [](const std::vector<int>& map, const Graph& g, const Graph& h) {
            return check_homomorphism(HomCertificate{map}, g, h);
        },
        py::arg("map"), py::arg("source"), py::arg("target"));
    m.def(
        "homomorphically_equivalent",
        [](const Graph& g, const Graph& h, double budget) {
            Decision d = homomorphically_equivalent(g, h, make_options(budget, false, true));
            if (d == Decision::Inconclusive) throw TimeoutError("equivalence check timed out");
            return d == Decision::Yes;
        },
        py::arg("a"), py::arg("b"), py::arg("budget") = 0.0);

    m.def(
        "chromatic_number",
        [](const Graph& g, double budget) {
            return chromatic_number(g, make_options(budget, false, true));
        },
        py::arg("graph"), py::arg("budget") = 0.0);
    m.def(
        "circular_chromatic_number",
        [](const Graph& g, double budget) {
            CircularValue v = circular_chromatic_number(g, make_options(budget, false, true));
            return py::make_tuple(v.value, v.witness.map);
        },
        py::arg("graph"), py::arg("budget") = 0.0,
        "Returns (value, witness map into circular_complete(value.num, value.den)).");
    m.def(
        "fractional_chromatic_number",
        [](const Graph& g, long long max_sets) {
            FractionalValue v = fractional_chromatic_number(g, max_sets);
            return py::make_tuple(v.value, v.cover, v.clique);
        },
        py::arg("graph"), py::arg("max_sets") = 100000,
        "Returns (value, cover weights on independent sets, clique weights per vertex).");
    m.def("independence_number", &independence_number, py::arg("graph"));
    m.def("clique_number", &clique_number, py::arg("graph"));
    m.def(
        "multichromatic_number",
        [](const Graph& g, int n, double budget) {
            return multichromatic_number(g, n, make_options(budget, false, true));
        },
        py::arg("graph"), py::arg("n"), py::arg("budget") = 0.0);
    m.def(
        "mu", [](const Graph& g, double budget) { return mu(g, make_options(budget, false, true)); },
        py::arg("graph"), py::arg("budget") = 0.0);
    m.def(
        "zeta",
        [](const Graph& g, double budget) { return zeta(g, make_options(budget, false, true)); },
        py::arg("graph"), py::arg("budget") = 0.0);
    m.def("lower_parent", &lower_parent, py::arg("n"), py::arg("d"));

    py::class_<VerifyRecord>(m, "VerifyRecord")
        .def_readonly("claim", &VerifyRecord::claim)
        .def_readonly("anchor", &VerifyRecord::anchor)
        .def_readonly("instance", &VerifyRecord::instance)
        .def_readonly("expected", &VerifyRecord::expected)
        .def_readonly("computed", &VerifyRecord::computed)
        .def_readonly("passed", &VerifyRecord::pass)
        .def_readonly("inconclusive", &VerifyRecord::inconclusive)
        .def_readonly("seconds", &VerifyRecord::seconds)
        .def("__repr__", [](const VerifyRecord& r) {
            return "<" + r.claim + ": " + (r.inconclusive ? "inconclusive" : (r.pass ? "pass" : "FAIL")) + ">";
        });
    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("records", &VerificationReport::records)
        .def("failed", &VerificationReport::failed)
        .def("inconclusive", &VerificationReport::inconclusive)
        .def("all_pass", &VerificationReport::all_pass);

    auto suite_opts = [](double budget, bool include_long) {
        SuiteOptions o;
        if (budget > 0) o.budget_seconds = budget;
        o.include_long = include_long;
        return o;
    };
    m.def(
        "verify_circular_power",
        [suite_opts](int max_n, double budget, bool include_long) {
            return suite_circular_power(max_n, suite_opts(budget, include_long));
        },
        py::arg("max_n") = 10, py::arg("budget") = 0.0, py::arg("include_long") = false);
    m.def(
        "verify_dual_circular",
        [suite_opts](double budget, bool include_long) {
            return suite_dual_circular(suite_opts(budget, include_long));
        },
        py::arg("budget") = 0.0, py::arg("include_long") = false);
    m.def(
        "verify_subdivision",
        [suite_opts](double budget, bool include_long) {
            return suite_subdivision_chic(suite_opts(budget, include_long));
        },
        py::arg("budget") = 0.0, py::arg("include_long") = false);
    m.def(
        "verify_counterexample",
        [suite_opts](int k, double budget, bool include_long) {
            return suite_unavoidable_counterexample(k, suite_opts(budget, include_long));
        },
        py::arg("k") = 1, py::arg("budget") = 0.0, py::arg("include_long") = false);
    m.def(
        "verify_hajos",
        [suite_opts](int d, int n, double budget, bool include_long) {
            return suite_hajos(d, n, suite_opts(budget, include_long));
        },
        py::arg("d") = 2, py::arg("n") = 4, py::arg("budget") = 0.0,
        py::arg("include_long") = false);
    m.def(
        "verify_kneser_walk",
        [suite_opts](int m_, int n, int l_max, double budget, bool include_long) {
            return suite_kneser_walk(m_, n, l_max, suite_opts(budget, include_long));
        },
        py::arg("m") = 5, py::arg("n") = 2, py::arg("l_max") = 8, py::arg("budget") = 0.0,
        py::arg("include_long") = false);
    m.def(
        "verify_fractional",
        [suite_opts](double budget, bool include_long) {
            return suite_fractional(suite_opts(budget, include_long));
        },
        py::arg("budget") = 0.0, py::arg("include_long") = false);
    m.def(
        "verify_multichromatic",
        [suite_opts](double budget, bool include_long) {
            return suite_multichromatic(suite_opts(budget, include_long));
        },
        py::arg("budget") = 0.0, py::arg("include_long") = false);
    m.def(
        "verify_scaling",
        [suite_opts](double budget, bool include_long) {
            return suite_scaling_equivalence(suite_opts(budget, include_long));
        },
        py::arg("budget") = 0.0, py::arg("include_long") = false);
    m.def(
        "verify_all",
        [suite_opts](double budget, bool include_long) {
            return run_all(suite_opts(budget, include_long));
        },
        py::arg("budget") = 0.0, py::arg("include_long") = false);
    m.def(
        "report_to_json",
        [suite_opts](const VerificationReport& report, const std::string& suite, double budget,
                     bool include_long) {
            return report_to_json(report, suite_opts(budget, include_long), suite).dump(2);
        },
        py::arg("report"), py::arg("suite") = "all", py::arg("budget") = 0.0,
        py::arg("include_long") = false);

    m.def("graph_to_json", &graph_to_string, py::arg("graph"));
    m.def("graph_from_json", &graph_from_string, py::arg("text"));
    m.def("to_dot", &to_dot, py::arg("graph"));
}
