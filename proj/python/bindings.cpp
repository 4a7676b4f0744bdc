#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "primspec/cli.hpp"
#include "primspec/errors.hpp"
#include "primspec/report.hpp"
#include "primspec/symbolic.hpp"
#include "primspec/theorems.hpp"

namespace py = pybind11;
using namespace primspec;

namespace {

AnalysisConfig make_config(std::size_t max_elements, std::size_t max_ideals, std::uint64_t seed) {
    AnalysisConfig c;
    c.max_elements = max_elements;
    c.max_ideals = max_ideals;
    c.seed = seed;
    return c;
}

class PyRing {
public:
    PyRing(const std::string& spec, std::size_t max_elements, std::size_t max_ideals, std::uint64_t seed)
        : config_(make_config(max_elements, max_ideals, seed)), analysis_(analyze_ring(spec, config_)) {}

    std::string spec() const { return analysis_.ring->label(); }
    std::size_t size() const { return analysis_.ring->size(); }

    std::vector<std::string> ideals() const {
        std::vector<std::string> out;
        for (IdealId i = 0; i < analysis_.lattice->size(); ++i) out.push_back(analysis_.lattice->render(i));
        return out;
    }

    std::vector<std::string> points(const Spectrum& sp) const {
        std::vector<std::string> out;
        for (auto id : sp.points()) out.push_back(analysis_.lattice->render(id));
        return out;
    }
    std::vector<std::string> prim() const { return points(*analysis_.prim); }
    std::vector<std::string> prime_spec() const { return points(*analysis_.spec); }

    py::object check(const std::string& property) const {
        const auto o = evaluate_property(property, analysis_);
        if (!o.value) return py::none();
        return py::bool_(*o.value);
    }

    std::string report_json() const {
        return primspec::report_json(analysis_, verify_theorems(analysis_, config_)).dump(2);
    }

    py::dict verify() const {
        const auto rep = verify_theorems(analysis_, config_);
        py::dict d;
        for (const auto& e : rep.entries) d[py::str(e.id)] = to_string(e.status);
        return d;
    }

    std::string dot(const std::string& graph) const {
        if (graph != "lattice" && graph != "specialization")
            throw ValidationError("graph must be 'lattice' or 'specialization'");
        return export_dot(analysis_, graph == "lattice" ? DotGraph::ideal_lattice : DotGraph::specialization);
    }

private:
    AnalysisConfig config_;
    RingAnalysis analysis_;
};

py::tuple run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Primary and prime spectra of finite commutative rings";
    m.attr("__version__") = kToolVersion;

    py::register_exception<SpecSyntaxError>(m, "SpecSyntaxError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception<NotACover>(m, "NotACover", PyExc_ValueError);

    py::class_<PyRing>(m, "Ring")
        .def(py::init<const std::string&, std::size_t, std::size_t, std::uint64_t>(), py::arg("spec"),
             py::arg("max_elements") = kDefaultMaxElements, py::arg("max_ideals") = kDefaultMaxIdeals,
             py::arg("seed") = 0)
        .def_property_readonly("spec", &PyRing::spec)
        .def_property_readonly("size", &PyRing::size)
        .def("ideals", &PyRing::ideals, "Ideal labels in canonical order")
        .def("prim", &PyRing::prim, "Points of Prim(R)")
        .def("prime_spec", &PyRing::prime_spec, "Points of Spec(R)")
        .def("check", &PyRing::check, py::arg("property"), "Property value, or None when undecided")
        .def("verify", &PyRing::verify, "Theorem id -> status")
        .def("report_json", &PyRing::report_json)
        .def("dot", &PyRing::dot, py::arg("graph") = "lattice")
        .def("__repr__", [](const PyRing& r) { return "Ring('" + r.spec() + "')"; });

    m.def("run", &run, py::arg("args"), "Run a CLI command line; returns (exit_code, stdout, stderr)");
    m.def("property_names", &property_names);

    m.def("v_rad_z", [](std::int64_t n) { return z::v_rad_z(n).render(); }, py::arg("n"));
    m.def("v_z", &z::render_v_z, py::arg("n"));
    m.def("factorize", &z::factorize, py::arg("n"));
    m.def(
        "closure_equal_z",
        [](const std::string& a, const std::string& b) {
            return z::closure_equal_z(z::parse_z_primary(a), z::parse_z_primary(b));
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "closure_equal_zxz",
        [](const std::string& a, const std::string& b, bool include_zero) {
            return z::closure_equal_zxz(z::parse_zxz_primary(a), z::parse_zxz_primary(b), include_zero);
        },
        py::arg("a"), py::arg("b"), py::arg("include_zero") = true);
    m.def(
        "extract_finite_subcover_z",
        [](std::int64_t r, const std::vector<std::int64_t>& s) {
            const auto c = z::extract_finite_subcover_z(r, s);
            py::dict d;
            d["delta"] = c.delta;
            d["exponent"] = c.exponent;
            d["coefficients"] = c.coefficients;
            d["power"] = c.power;
            d["verified"] = c.verified;
            return d;
        },
        py::arg("r"), py::arg("s"));
    m.def(
        "a2_failure_witness_z",
        [](std::uint64_t p) {
            const auto w = z::a2_failure_witness_z(p);
            return py::make_tuple(w.radical_of_intersection, w.intersection_of_radicals);
        },
        py::arg("p"));
}
