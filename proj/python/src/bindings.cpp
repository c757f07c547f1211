#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "walks/bijections.hpp"
#include "walks/catalog.hpp"
#include "walks/closedforms.hpp"
#include "walks/exactmath.hpp"
#include "walks/oracle.hpp"
#include "walks/render.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;

// Natural <-> Python int, through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<walks::Natural> {
    PYBIND11_TYPE_CASTER(walks::Natural, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) {
            return false;
        }
        const auto text = py::str(src).cast<std::string>();
        try {
            value = walks::Natural::from_string(text);
        } catch (const std::invalid_argument&) {
            return false;
        }
        return true;
    }

    static handle cast(const walks::Natural& n, return_value_policy, handle) {
        const auto text = n.to_string();
        return PyLong_FromString(text.c_str(), nullptr, 10);
    }
};
}  // namespace pybind11::detail

namespace {

walks::oracle::Guards guards(std::uint64_t max_candidates, std::uint64_t max_states) {
    walks::oracle::Guards g;
    g.max_candidates = max_candidates;
    g.max_states = max_states;
    return g;
}

walks::WalkType type_of(const std::string& letters) { return walks::WalkType::parse(letters); }

py::dict record_dict(const walks::catalog::SequenceRecord& rec) {
    py::dict d;
    d["type"] = rec.type.letters();
    d["terms"] = rec.terms;
    d["source"] = std::string(walks::catalog::to_string(rec.source));
    d["oeis_id"] = rec.oeis_id;
    d["even_only_star"] = rec.even_only_star;
    d["absolute_values_note"] = rec.absolute_values_note;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    using namespace walks;
    m.doc() = "Exact counts, oracles and bijections for restricted lattice walks";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);

    const walks::oracle::Guards defaults;

    m.def("binomial", &binomial, py::arg("n"), py::arg("k"));
    m.def(
        "multinomial", [](std::int64_t n, const std::vector<std::int64_t>& parts) { return multinomial(n, parts); },
        py::arg("n"), py::arg("parts"));
    m.def("catalan", &catalan, py::arg("i"));
    m.def("central_binomial_even", &central_binomial_even, py::arg("i"));
    m.def("central_binomial_any", &central_binomial_any, py::arg("j"));
    m.def("motzkin", &motzkin, py::arg("n"));

    m.def(
        "canonicalize_type",
        [](const std::string& letters) {
            const auto t = type_of(letters);
            return py::make_tuple(t.letters(), t.free_direction_count());
        },
        py::arg("letters"), "Returns (canonical letters, number of unconstrained directions).");
    m.def(
        "validate",
        [](const std::string& type, const std::string& walk) -> py::object {
            const auto t = type_of(type);
            const auto v = walks::validate(parse_walk(walk, t), t);
            if (!v) {
                return py::none();
            }
            return py::make_tuple(v->step_index, v->reason());
        },
        py::arg("type"), py::arg("walk"), "None when valid, else (step_index, reason).");

    m.def(
        "enumerate",
        [defaults](const std::string& type, int n, std::uint64_t max_candidates) {
            const auto t = type_of(type);
            std::vector<std::string> out;
            for (const auto& w : walks::oracle::enumerate(t, n, guards(max_candidates, defaults.max_states))) {
                out.push_back(format_walk(w, t));
            }
            return out;
        },
        py::arg("type"), py::arg("n"), py::arg("max_candidates") = defaults.max_candidates);
    m.def(
        "count_dp",
        [defaults](const std::string& type, int n, std::uint64_t max_states) {
            py::gil_scoped_release release;
            return walks::oracle::count_dp(type_of(type), n, guards(defaults.max_candidates, max_states));
        },
        py::arg("type"), py::arg("n"), py::arg("max_states") = defaults.max_states);
    m.def(
        "sequence_dp",
        [defaults](const std::string& type, int n_max, std::uint64_t max_states) {
            py::gil_scoped_release release;
            return walks::oracle::sequence_dp(type_of(type), n_max, guards(defaults.max_candidates, max_states));
        },
        py::arg("type"), py::arg("n_max"), py::arg("max_states") = defaults.max_states);

    m.def("touchard_terms", &closedforms::touchard_terms, py::arg("n"));
    m.def(
        "general_count", [](const std::string& type, int n) { return closedforms::general_count(type_of(type), n); },
        py::arg("type"), py::arg("n"));
    m.def("ab_closed", &closedforms::ab_closed, py::arg("n"));
    m.def("aa_closed", &closedforms::aa_closed, py::arg("n"));
    m.def("quadrant_axis_sum", &closedforms::quadrant_axis_sum, py::arg("n"));
    m.def("halfplane_closed", &closedforms::halfplane_closed, py::arg("n"));
    m.def("ace3d_count", &closedforms::ace3d_count, py::arg("n"));
    m.def("vandermonde_chain", &closedforms::vandermonde_chain, py::arg("n"));

    m.def(
        "dyck_to_touchard",
        [](const std::string& word) {
            return format_walk(bijections::dyck_to_touchard(bijections::DyckPath::parse(word)),
                               bijections::touchard_type());
        },
        py::arg("word"));
    m.def(
        "touchard_to_dyck",
        [](const std::string& walk) {
            return bijections::touchard_to_dyck(parse_walk(walk, bijections::touchard_type())).to_string();
        },
        py::arg("walk"));
    m.def(
        "to_two_colored_motzkin",
        [](const std::string& walk) {
            std::vector<std::string> out;
            for (auto s : bijections::to_two_colored_motzkin(parse_walk(walk, bijections::touchard_type()))) {
                switch (s) {
                    case bijections::MotzkinStep::Up: out.emplace_back("up"); break;
                    case bijections::MotzkinStep::Down: out.emplace_back("down"); break;
                    case bijections::MotzkinStep::FlatColor1: out.emplace_back("flat1"); break;
                    case bijections::MotzkinStep::FlatColor2: out.emplace_back("flat2"); break;
                }
            }
            return out;
        },
        py::arg("walk"));
    m.def(
        "enumerate_dyck",
        [](int length) {
            std::vector<std::string> out;
            for (const auto& p : bijections::enumerate_dyck(length)) {
                out.push_back(p.to_string());
            }
            return out;
        },
        py::arg("length"));

    m.def("golden_table3", [] {
        py::list out;
        for (const auto& rec : catalog::golden_table3()) {
            out.append(record_dict(rec));
        }
        return out;
    });
    m.def("table2_map", [] {
        py::list out;
        for (const auto& e : catalog::table2_map()) {
            out.append(py::make_tuple(e.type.letters(), e.oeis_id, e.even_only));
        }
        return out;
    });
    m.def(
        "verify",
        [](const std::string& type, int n_max) {
            catalog::VerificationReport report = [&] {
                py::gil_scoped_release release;
                return catalog::verify(type_of(type), n_max);
            }();
            py::dict d;
            d["type"] = report.type.letters();
            d["structured"] = catalog::format_structured(report);
            d["notes"] = report.notes;
            d["warnings"] = report.warnings;
            d["mismatch"] = report.any_mismatch();
            return d;
        },
        py::arg("type"), py::arg("n_max"));

    m.def(
        "render_walk",
        [](const std::string& type, const std::string& walk, const std::string& format) {
            const auto t = type_of(type);
            const auto w = parse_walk(walk, t);
            return format == "svg" ? render::walk_svg(w, t) : render::walk_ascii(w, t);
        },
        py::arg("type"), py::arg("walk"), py::arg("format") = "ascii");

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
