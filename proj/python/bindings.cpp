#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hstlab/baues.hpp"
#include "hstlab/combinatorics.hpp"
#include "hstlab/stasheff_tamari.hpp"
#include "hstlab/topology.hpp"
#include "hstlab/triangulation.hpp"
#include "hstlab/verification.hpp"

namespace py = pybind11;
using namespace hstlab;

namespace {

using Labels = std::vector<int>;

LabelSet to_set(const Labels& labels)
{
    return LabelSet::from_labels(labels);
}

std::vector<Labels> to_lists(const std::vector<LabelSet>& sets)
{
    std::vector<Labels> out;
    out.reserve(sets.size());
    for (LabelSet s : sets) out.push_back(s.labels());
    return out;
}

std::vector<LabelSet> to_sets(const std::vector<Labels>& lists)
{
    std::vector<LabelSet> out;
    out.reserve(lists.size());
    for (const auto& l : lists) out.push_back(to_set(l));
    return out;
}

Triangulation to_triangulation(int n, int d, const std::vector<Labels>& simplices)
{
    return Triangulation(n, d, to_sets(simplices));
}

std::vector<std::vector<Labels>> enumerate(int n, int d, std::size_t cap)
{
    const auto e = enumerate_triangulations(n, d, cap);
    std::vector<std::vector<Labels>> out;
    for (const auto& t : e.triangulations) out.push_back(to_lists(t.simplices()));
    return out;
}

FinitePoset order_poset(int n, int d, const std::string& order)
{
    return build_order(enumerate_triangulations(n, d), parse_order(order));
}

std::optional<std::tuple<int, int, std::string>> witness(int n, int d, const std::string& order)
{
    const auto w = lattice_witness(order_poset(n, d, order));
    if (!w) return std::nullopt;
    return std::tuple{w->x, w->y, std::string(to_string(w->reason))};
}

py::dict sphere(int n, int d, const std::string& order, std::size_t face_budget)
{
    const auto p = order_poset(n, d, order);
    const auto cert = sphere_certificate(p.proper_part(), n - d - 3, face_budget);
    py::dict out;
    out["passed"] = cert.passed;
    out["homology"] = cert.homology.describe();
    out["mobius"] = cert.mobius;
    out["message"] = cert.message;
    return out;
}

py::dict baues(int n, int d)
{
    const auto b = baues_poset(n, d);
    py::list cells;
    for (const auto& s : b.subdivisions) cells.append(to_lists(s.cells()));
    py::dict out;
    out["subdivisions"] = cells;
    out["covers"] = b.poset.cover_pairs();
    out["order_matches_intervals"] = b.order_matches_intervals;
    return out;
}

} // namespace

PYBIND11_MODULE(_hstlab, m)
{
    m.doc() = "Triangulations of cyclic polytopes and the higher Stasheff-Tamari orders";

    py::register_exception<ResourceLimitExceeded>(m, "ResourceLimitExceeded", PyExc_RuntimeError);

    m.def("zig_zag_admissible", [](const Labels& a, const Labels& b, int d) { return zig_zag_admissible(to_set(a), to_set(b), d); },
          py::arg("a"), py::arg("b"), py::arg("d"));
    m.def("classify_facet",
          [](const Labels& facet, const Labels& vertices, int d) {
              return std::string(to_string(classify_facet(to_set(facet), to_set(vertices), d)));
          },
          py::arg("facet"), py::arg("vertices"), py::arg("d"));
    m.def("facet_split",
          [](const Labels& s) {
              const auto split = simplex_facet_split(to_set(s));
              return std::pair{to_lists(split.lower), to_lists(split.upper)};
          },
          py::arg("simplex"));

    m.def("bottom", [](int n, int d) { return to_lists(bottom(n, d).simplices()); }, py::arg("n"), py::arg("d"));
    m.def("top", [](int n, int d) { return to_lists(top(n, d).simplices()); }, py::arg("n"), py::arg("d"));
    m.def("validate",
          [](const std::vector<Labels>& simplices, int n, int d) {
              std::vector<std::string> problems;
              for (const auto& v : validate(to_sets(simplices), n, d).violations)
                  problems.push_back(std::string(to_string(v.kind)) + ": " + v.message);
              return problems;
          },
          py::arg("simplices"), py::arg("n"), py::arg("d"));
    m.def("increasing_flips",
          [](int n, int d, const std::vector<Labels>& t) { return to_lists(increasing_flips(to_triangulation(n, d, t))); },
          py::arg("n"), py::arg("d"), py::arg("simplices"));
    m.def("submersion_set",
          [](int n, int d, const std::vector<Labels>& t, int i) { return to_lists(submersion_set(to_triangulation(n, d, t), i)); },
          py::arg("n"), py::arg("d"), py::arg("simplices"), py::arg("i"));

    m.def("enumerate", &enumerate, py::arg("n"), py::arg("d"), py::arg("cap") = default_enumeration_cap(),
          "All triangulations of C(n, d) in canonical order, each as a list of simplices.");
    m.def("poset_json", [](int n, int d, const std::string& order) { return order_poset(n, d, order).to_json(); },
          py::arg("n"), py::arg("d"), py::arg("order") = "s2");
    m.def("compare_orders",
          [](int n, int d) -> std::optional<std::pair<int, int>> {
              const auto e = enumerate_triangulations(n, d);
              const auto diff = compare_relations(build_s1(e), build_s2(e));
              if (!diff) return std::nullopt;
              return std::pair{diff->x, diff->y};
          },
          py::arg("n"), py::arg("d"));
    m.def("lattice_witness", &witness, py::arg("n"), py::arg("d"), py::arg("order") = "s2");
    m.def("mobius",
          [](int n, int d, const std::string& order) {
              const auto p = order_poset(n, d, order);
              return p.mobius(*p.bottom(), *p.top());
          },
          py::arg("n"), py::arg("d"), py::arg("order") = "s2");
    m.def("sphere_certificate", &sphere, py::arg("n"), py::arg("d"), py::arg("order") = "s2",
          py::arg("face_budget") = kDefaultFaceBudget);
    m.def("baues_poset", &baues, py::arg("n"), py::arg("d"));
    m.def("verify_suspension", [](int n, int d, const std::string& order) { return verify_suspension(n, d, parse_order(order)).to_json(); },
          py::arg("n"), py::arg("d"), py::arg("order") = "s1");
}
