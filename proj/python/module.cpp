#include "coqkit/braid.hpp"
#include "coqkit/explorer.hpp"
#include "coqkit/io.hpp"
#include "coqkit/proper.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace coqkit;

namespace {

// Python ints are unbounded, so go through decimal text both ways.
py::object to_py(const Int& x) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

Int from_py(const py::handle& h) { return Int(py::str(h).cast<std::string>()); }

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

CyclicOrdering ordering(const Quiver& q, const std::optional<std::vector<std::string>>& names) {
    return names ? CyclicOrdering::from_names(q, *names) : CyclicOrdering::standard(q);
}

std::vector<std::size_t> indices(const Quiver& q, const std::vector<std::string>& names) {
    if (names.size() != q.size()) throw DomainError("linear order must list every vertex once");
    std::vector<std::size_t> out;
    for (const auto& n : names) out.push_back(q.index(n));
    return out;
}

std::vector<std::string> labels(const Quiver& q, const std::vector<std::size_t>& seq) {
    std::vector<std::string> out;
    for (auto v : seq) out.push_back(q.name(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_coqkit, m) {
    m.doc() = "Cyclically ordered quivers, proper mutations and their invariants";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<Quiver>(m, "Quiver")
        .def(py::init([](std::vector<std::string> vertices, const py::iterable& arrows) {
                 std::vector<Arrow> list;
                 for (const auto& a : arrows) {
                     auto t = a.cast<py::sequence>();
                     if (t.size() != 3) throw ParseError("each arrow must be (source, target, multiplicity)");
                     list.push_back({t[0].cast<std::string>(), t[1].cast<std::string>(), from_py(t[2])});
                 }
                 return Quiver::from_arrows(std::move(vertices), list);
             }),
             py::arg("vertices"), py::arg("arrows"))
        .def_static("from_json", [](const std::string& text) { return parse_quiver_json(text).quiver; })
        .def_property_readonly("vertices", &Quiver::vertices)
        .def("__len__", &Quiver::size)
        .def("matrix",
             [](const Quiver& q) {
                 py::list rows;
                 for (std::size_t i = 0; i < q.size(); ++i) {
                     py::list row;
                     for (std::size_t j = 0; j < q.size(); ++j) row.append(to_py(q.at(i, j)));
                     rows.append(row);
                 }
                 return rows;
             })
        .def("arrows",
             [](const Quiver& q) {
                 py::list out;
                 for (const auto& a : q.arrows()) out.append(py::make_tuple(a.from, a.to, to_py(a.mult)));
                 return out;
             })
        .def("mutate", [](const Quiver& q, const std::string& v) { return mutate(q, v); })
        .def("to_json", [](const Quiver& q) { return dump_quiver(q); })
        .def("is_acyclic", &is_acyclic)
        .def("is_vortex", &is_vortex)
        .def("fork_return",
             [](const Quiver& q) -> std::optional<std::string> {
                 auto r = is_fork(q);
                 if (!r) return std::nullopt;
                 return q.name(*r);
             })
        .def("det", [](const Quiver& q) { return to_py(det_b(q)); })
        .def("canonical_form", &canonical_form)
        .def("__eq__", [](const Quiver& a, const Quiver& b) { return a == b; })
        .def("__repr__", [](const Quiver& q) {
            return "<Quiver " + std::to_string(q.size()) + " vertices, " + std::to_string(q.arrows().size()) +
                   " arrow groups>";
        });

    m.def(
        "load",
        [](const std::string& path) {
            auto f = load_quiver_file(path);
            std::optional<std::vector<std::string>> order;
            if (f.order) order = f.order->names(f.quiver);
            return py::make_tuple(f.quiver, order);
        },
        py::arg("path"), "Read a quiver file; returns (quiver, order or None).");

    m.def(
        "alexander",
        [](const Quiver& q, std::optional<std::vector<std::string>> order) {
            auto poly = alexander_polynomial(q, ordering(q, order).seq());
            py::list out;
            for (const auto& c : poly.coeffs()) out.append(to_py(c));
            return out;
        },
        py::arg("quiver"), py::arg("order") = py::none(), "Coefficients of the Alexander polynomial, constant term first.");
    m.def(
        "alexander_text",
        [](const Quiver& q, std::optional<std::vector<std::string>> order) {
            return alexander_polynomial(q, ordering(q, order).seq()).str();
        },
        py::arg("quiver"), py::arg("order") = py::none());
    m.def(
        "markov",
        [](const Quiver& q, std::optional<std::vector<std::string>> order) {
            return to_py(markov_invariant(q, ordering(q, order).seq()));
        },
        py::arg("quiver"), py::arg("order") = py::none());
    m.def(
        "invariants",
        [](const Quiver& q, std::optional<std::vector<std::string>> order, std::vector<std::size_t> ks) {
            return json_to_py(invariant_report_json(invariant_report(q, ordering(q, order).seq(), ks)));
        },
        py::arg("quiver"), py::arg("order") = py::none(), py::arg("ks") = std::vector<std::size_t>{});

    m.def(
        "is_proper",
        [](const Quiver& q, std::optional<std::vector<std::string>> order, std::size_t cap) {
            return is_proper_coq(COQ{q, ordering(q, order)}, cap);
        },
        py::arg("quiver"), py::arg("order") = py::none(), py::arg("cap") = default_cycle_cap);
    m.def(
        "is_proper_vertex",
        [](const Quiver& q, std::optional<std::vector<std::string>> order, const std::string& v, bool up_to_wiggles) {
            COQ c{q, ordering(q, order)};
            return up_to_wiggles ? is_proper_in_wiggle_class(c, q.index(v)) : is_proper_vertex(c, q.index(v));
        },
        py::arg("quiver"), py::arg("order"), py::arg("vertex"), py::arg("up_to_wiggles") = false);
    m.def(
        "proper_mutate",
        [](const Quiver& q, std::optional<std::vector<std::string>> order, const std::string& v) {
            auto r = proper_mutate(COQ{q, ordering(q, order)}, q.index(v));
            return py::make_tuple(r.quiver, r.order.names(r.quiver));
        },
        py::arg("quiver"), py::arg("order"), py::arg("vertex"), "Returns (mutated quiver, new cyclic order).");
    m.def(
        "find_proper_ordering",
        [](const Quiver& q) -> std::optional<std::vector<std::string>> {
            auto r = find_proper_ordering(q);
            if (!r) return std::nullopt;
            return r->names(q);
        },
        py::arg("quiver"));
    m.def(
        "verify_totally_proper",
        [](const Quiver& q, std::optional<std::vector<std::string>> order, std::size_t budget) {
            TotallyProperOptions opts;
            opts.budget = budget;
            return json_to_py(verdict_json(verify_totally_proper(COQ{q, ordering(q, order)}, opts)));
        },
        py::arg("quiver"), py::arg("order") = py::none(), py::arg("budget") = 10000);

    m.def(
        "mutation_class",
        [](const Quiver& q, std::size_t size, std::size_t depth, long entry) {
            return json_to_py(class_report_json(mutation_class(q, ExplorationLimits{size, depth, entry, true})));
        },
        py::arg("quiver"), py::arg("max_quivers") = 10000, py::arg("max_depth") = 1000, py::arg("max_entry") = 1000);
    m.def(
        "forkless_part",
        [](const Quiver& q, std::size_t size, std::size_t depth, long entry) {
            return json_to_py(class_report_json(forkless_part(q, ExplorationLimits{size, depth, entry, true})));
        },
        py::arg("quiver"), py::arg("max_quivers") = 10000, py::arg("max_depth") = 1000, py::arg("max_entry") = 1000);

    m.def(
        "braid",
        [](const Quiver& q, const std::vector<std::string>& linear_order, const std::string& word) {
            auto r = act_word(LinearlyOrderedQuiver{q, indices(q, linear_order)}, parse_braid_word(word));
            return py::make_tuple(r.loq.quiver, labels(r.loq.quiver, r.loq.order));
        },
        py::arg("quiver"), py::arg("linear_order"), py::arg("word"),
        "Apply a word such as \"s2 S1 r3\" left to right; returns (quiver, linear order).");
}
