#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rado/ceder.hpp"
#include "rado/closure.hpp"
#include "rado/equation.hpp"
#include "rado/json_io.hpp"
#include "rado/search.hpp"
#include "rado/version.hpp"

namespace py = pybind11;

namespace {

// Accept python ints (via long long) and "n/d" strings wherever a Rational
// is expected.
rado::Rational to_rational(const py::object& obj) {
    if (py::isinstance<rado::Rational>(obj)) return obj.cast<rado::Rational>();
    if (py::isinstance<py::int_>(obj)) return rado::Rational(obj.cast<long long>());
    if (py::isinstance<py::str>(obj)) return rado::Rational::from_string(obj.cast<std::string>());
    throw py::type_error("expected Rational, int, or 'n/d' string");
}

rado::RationalSet to_rational_set(const py::iterable& values) {
    rado::RationalSet out;
    for (const auto& v : values) out.insert(to_rational(py::reinterpret_borrow<py::object>(v)));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact partition-regularity toolkit: Rado's criterion, forcing numbers "
              "with avoider certificates, signature colorings, and field-operation "
              "closures.";
    m.attr("__version__") = rado::kVersion;

    py::register_exception<rado::resource_cap_error>(m, "ResourceCapError", PyExc_RuntimeError);

    py::class_<rado::Rational>(m, "Rational")
        .def(py::init<long long>(), py::arg("value") = 0)
        .def(py::init<long long, long long>(), py::arg("numerator"), py::arg("denominator"))
        .def(py::init([](const std::string& text) { return rado::Rational::from_string(text); }),
             py::arg("text"))
        .def_property_readonly("numerator",
                               [](const rado::Rational& r) { return r.num().to_string(); })
        .def_property_readonly("denominator",
                               [](const rado::Rational& r) { return r.den().to_string(); })
        .def("is_zero", &rado::Rational::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__str__", &rado::Rational::to_string)
        .def("__repr__",
             [](const rado::Rational& r) { return "Rational('" + r.to_string() + "')"; })
        .def("__hash__",
             [](const rado::Rational& r) { return py::hash(py::str(r.to_string())); });

    m.def("normalize", &rado::normalize, py::arg("numerator"), py::arg("denominator"));
    m.def(
        "dot",
        [](const std::vector<py::object>& u, const std::vector<py::object>& v) {
            rado::RationalVector ru, rv;
            for (const auto& x : u) ru.push_back(to_rational(x));
            for (const auto& x : v) rv.push_back(to_rational(x));
            return rado::dot(ru, rv);
        },
        py::arg("u"), py::arg("v"));

    py::class_<rado::LinearEquation>(m, "LinearEquation")
        .def_readonly("coeffs", &rado::LinearEquation::coeffs)
        .def_readonly("require_distinct", &rado::LinearEquation::require_distinct)
        .def("__repr__", [](const rado::LinearEquation& eq) {
            return rado::equation_to_json(eq).dump();
        });

    py::class_<rado::Solution>(m, "Solution")
        .def_readonly("values", &rado::Solution::values)
        .def_readonly("color", &rado::Solution::color)
        .def("__repr__", [](const rado::Solution& s) {
            std::string out = "Solution(values=[";
            for (std::size_t i = 0; i < s.values.size(); ++i)
                out += (i ? "," : "") + std::to_string(s.values[i]);
            return out + "], color=" + std::to_string(s.color) + ")";
        });

    m.def("make_equation", &rado::make_equation, py::arg("coeffs"),
          py::arg("require_distinct") = false);
    m.def("fox_equation", &rado::fox_equation, py::arg("s"));
    m.def(
        "is_solution",
        [](const rado::LinearEquation& eq, const std::vector<long long>& values) {
            return rado::is_solution(eq, values);
        },
        py::arg("equation"), py::arg("values"));
    m.def(
        "has_zero_subset_sum",
        [](const std::vector<long long>& coeffs) { return rado::has_zero_subset_sum(coeffs); },
        py::arg("coeffs"));
    m.def("is_regular", &rado::is_regular, py::arg("equation"));
    m.def(
        "find_distinct_kernel_vector",
        [](const std::vector<long long>& coeffs) {
            return rado::find_distinct_kernel_vector(coeffs);
        },
        py::arg("coeffs"));
    m.def("is_distinct_regular", &rado::is_distinct_regular, py::arg("equation"));

    py::class_<rado::Coloring>(m, "Coloring")
        .def(py::init(&rado::make_coloring), py::arg("n"), py::arg("num_colors"),
             py::arg("colors"))
        .def_readonly("n", &rado::Coloring::n)
        .def_readonly("num_colors", &rado::Coloring::num_colors)
        .def_readonly("colors", &rado::Coloring::colors)
        .def("color_of", &rado::Coloring::color_of, py::arg("value"))
        .def(py::self == py::self);
    m.def("uniform_coloring", &rado::uniform_coloring, py::arg("n"));

    py::class_<rado::APWitness>(m, "APWitness")
        .def_readonly("a", &rado::APWitness::a)
        .def_readonly("d", &rado::APWitness::d)
        .def_readonly("k", &rado::APWitness::k);

    py::enum_<rado::SearchStatus>(m, "SearchStatus")
        .value("FOUND", rado::SearchStatus::found)
        .value("NOT_FOUND_WITHIN_BOUND", rado::SearchStatus::not_found_within_bound)
        .value("CAPPED", rado::SearchStatus::capped);

    py::class_<rado::ForcingResult>(m, "ForcingResult")
        .def_readonly("num_colors", &rado::ForcingResult::num_colors)
        .def_readonly("status", &rado::ForcingResult::status)
        .def_readonly("forcing_n", &rado::ForcingResult::forcing_n)
        .def_readonly("explored_bound", &rado::ForcingResult::explored_bound)
        .def_readonly("avoider", &rado::ForcingResult::avoider)
        .def_readonly("nodes_explored", &rado::ForcingResult::nodes_explored)
        .def("to_json",
             [](const rado::ForcingResult& r) { return rado::certificate_to_json(r).dump(); })
        .def_static("from_json", [](const std::string& text) {
            return rado::certificate_from_json(nlohmann::json::parse(text));
        });

    m.def("find_mono_solution", &rado::find_mono_solution, py::arg("coloring"),
          py::arg("equation"));
    m.def("find_mono_ap", &rado::find_mono_ap, py::arg("coloring"), py::arg("k"));
    m.def("four_from_vdw", &rado::four_from_vdw, py::arg("coloring"));
    m.def("four_from_ramsey", &rado::four_from_ramsey, py::arg("coloring"));
    m.def("forcing_number", &rado::forcing_number, py::arg("equation"), py::arg("num_colors"),
          py::arg("n_max"), py::arg("node_cap") = rado::kDefaultNodeCap,
          py::call_guard<py::gil_scoped_release>());
    m.def("vdw_forcing", &rado::vdw_forcing, py::arg("k"), py::arg("num_colors"),
          py::arg("n_max"), py::arg("node_cap") = rado::kDefaultNodeCap,
          py::call_guard<py::gil_scoped_release>());
    m.def("verify_certificate", &rado::verify_certificate, py::arg("certificate"));

    py::class_<rado::SparseQVector>(m, "SparseQVector")
        .def(py::init([](const std::vector<std::pair<int, py::object>>& entries) {
                 std::vector<std::pair<int, rado::Rational>> converted;
                 converted.reserve(entries.size());
                 for (const auto& [idx, value] : entries)
                     converted.emplace_back(idx, to_rational(value));
                 return rado::SparseQVector::from_entries(std::move(converted));
             }),
             py::arg("entries") = std::vector<std::pair<int, py::object>>{})
        .def_static(
            "basis",
            [](int index, const py::object& scale) {
                return rado::SparseQVector::basis(index, to_rational(scale));
            },
            py::arg("index"), py::arg("scale") = py::int_(1))
        .def("support", &rado::SparseQVector::support)
        .def("signature", &rado::SparseQVector::signature)
        .def("coordinate", &rado::SparseQVector::coordinate, py::arg("index"))
        .def("is_zero", &rado::SparseQVector::is_zero)
        .def(py::self == py::self)
        .def("__repr__", [](const rado::SparseQVector& w) {
            return rado::sparse_vector_to_json(w).dump();
        });

    m.def("support", [](const rado::SparseQVector& w) { return w.support(); }, py::arg("w"));
    m.def("signature", [](const rado::SparseQVector& w) { return w.signature(); }, py::arg("w"));

    py::class_<rado::CederParams>(m, "CederParams")
        .def(py::init([](const py::object& gamma) { return rado::CederParams{to_rational(gamma)}; }),
             py::arg("gamma"))
        .def_readonly("gamma", &rado::CederParams::gamma);

    py::class_<rado::SignatureRegistry>(m, "SignatureRegistry")
        .def(py::init<>())
        .def("id_of", &rado::SignatureRegistry::id_of, py::arg("signature"))
        .def("size", &rado::SignatureRegistry::size);

    m.def("ceder_color_id", &rado::ceder_color_id, py::arg("w"), py::arg("registry"));
    m.def("complete_triple", &rado::complete_triple, py::arg("x"), py::arg("y"),
          py::arg("params"));
    m.def(
        "gamma_from_triple",
        [](const py::object& b1, const py::object& b2, const py::object& b3) {
            return rado::gamma_from_triple(to_rational(b1), to_rational(b2), to_rational(b3));
        },
        py::arg("b1"), py::arg("b2"), py::arg("b3"));
    m.def(
        "enumerate_universe",
        [](int max_index, int max_support, const std::vector<py::object>& grid) {
            std::vector<rado::Rational> converted;
            for (const auto& g : grid) converted.push_back(to_rational(g));
            return rado::enumerate_universe(max_index, max_support, converted);
        },
        py::arg("max_index"), py::arg("max_support"), py::arg("grid"));

    py::class_<rado::CederCounterexample>(m, "CederCounterexample")
        .def_readonly("x", &rado::CederCounterexample::x)
        .def_readonly("y", &rado::CederCounterexample::y)
        .def_readonly("z", &rado::CederCounterexample::z);

    py::class_<rado::CederReport>(m, "CederReport")
        .def_readonly("triples_checked", &rado::CederReport::triples_checked)
        .def_readonly("equation_triples", &rado::CederReport::equation_triples)
        .def_readonly("mono_violations", &rado::CederReport::mono_violations)
        .def_readonly("counterexamples", &rado::CederReport::counterexamples);

    m.def("verify_ceder", &rado::verify_ceder, py::arg("params"), py::arg("universe"),
          py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());

    py::class_<rado::ClosureState>(m, "ClosureState")
        .def_readonly("levels", &rado::ClosureState::levels)
        .def_readonly("depth", &rado::ClosureState::depth)
        .def_readonly("capped", &rado::ClosureState::capped);

    py::class_<rado::MembershipResult>(m, "MembershipResult")
        .def_readonly("found", &rado::MembershipResult::found)
        .def_readonly("level", &rado::MembershipResult::level)
        .def_readonly("depth_searched", &rado::MembershipResult::depth_searched)
        .def_readonly("capped", &rado::MembershipResult::capped);

    m.def(
        "closure_step",
        [](const py::iterable& values) { return rado::closure_step(to_rational_set(values)); },
        py::arg("values"));
    m.def(
        "closure_enumerate",
        [](const py::iterable& base, int depth, std::size_t cap) {
            return rado::closure_enumerate(to_rational_set(base), depth, cap);
        },
        py::arg("base"), py::arg("depth"), py::arg("cap") = 1'000'000);
    m.def(
        "in_closure",
        [](const py::object& q, const py::iterable& base, int depth, std::size_t cap) {
            return rado::in_closure(to_rational(q), to_rational_set(base), depth, cap);
        },
        py::arg("q"), py::arg("base"), py::arg("depth"), py::arg("cap") = 1'000'000);
}
