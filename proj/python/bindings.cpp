// Python bindings. Structured results cross the boundary as JSON text and are
// decoded by the package wrapper.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "arbor/acceptance.hpp"
#include "arbor/error.hpp"
#include "arbor/frontgen.hpp"
#include "arbor/graph_export.hpp"
#include "arbor/report_io.hpp"

namespace py = pybind11;
using namespace arbor;

namespace {

MorphismSet puncture_set(const LinearQuiver& q, const std::string& text) {
    MorphismSet w = parse_morphism_set(q, text);
    for (const auto& f : w.members()) {
        if (f.is_identity()) throw DomainError("identity " + to_string(f) + " in a puncture set");
    }
    return w;
}

std::string closure_json(int n, const std::string& w) {
    const auto q = make_quiver(n);
    Json j;
    j["n"] = n;
    j["closure"] = to_json(closure_2of6(q, puncture_set(q, w)));
    return j.dump();
}

// Identities are implied, matching how puncture sets are written.
bool is_closed(int n, const std::string& w) {
    const auto q = make_quiver(n);
    return is_two_of_six_closed(q, parse_morphism_set(q, w) | MorphismSet::identities(q));
}

std::string localize_json(int n, const std::string& w, bool composition) {
    const auto q = make_quiver(n);
    const auto loc = localize(q, puncture_set(q, w));
    const auto& lc = loc.category;
    return localization_json(lc, skeleton(lc), iso_image_set(q, lc.inverted()), composition).dump();
}

std::string localize_dot(int n, const std::string& w) {
    const auto q = make_quiver(n);
    std::ostringstream out;
    write_category_dot(localize(q, puncture_set(q, w)).category, out);
    return out.str();
}

std::string oracle_json(int n, const std::string& w, const std::string& kind, int prime, int dmax) {
    const auto q = make_quiver(n);
    const auto set = puncture_set(q, w);
    const auto closure = closure_2of6(q, set);
    if (kind == "reps") return to_json(forced_iso_reps(q, set, prime, dmax), closure).dump();
    if (kind == "representable") return to_json(forced_iso_representable(q, closure), closure).dump();
    throw DomainError("oracle kind must be 'reps' or 'representable'");
}

std::string loose_report_json(int n, const std::string& w) {
    const auto q = make_quiver(n);
    return dump(to_json(loose_report(n, puncture_set(q, w))));
}

std::string loose_report_flags(int n, const std::string& flags) {
    std::istringstream in(flags);
    return dump(to_json(loose_report(read_flag_file(n, in))));
}

std::string validate_report(const std::string& text) {
    return dump(to_json(loose_report_from_json(parse_json(text))));
}

FrontDiagram diagram(const std::string& tree_spec, const std::string& punctures) {
    const auto tree = parse_tree(tree_spec);
    std::vector<Morphism> ps;
    if (!punctures.empty()) ps = puncture_set(LinearQuiver(tree.size() + 1), punctures).members();
    return front_curves(tree, ps);
}

std::string front_svg(const std::string& tree, const std::string& punctures) {
    std::ostringstream out;
    write_svg(diagram(tree, punctures), out);
    return out.str();
}

std::string census_json(const std::string& tree, int resolution, const std::string& punctures) {
    return to_json(region_census(diagram(tree, punctures), resolution)).dump();
}

std::vector<py::dict> selftest(int max_n, std::vector<int> only) {
    AcceptanceOptions options;
    options.max_n = max_n;
    options.only = std::move(only);
    std::vector<CriterionResult> results;
    {
        py::gil_scoped_release release;
        results = run_acceptance(options);
    }
    std::vector<py::dict> out;
    for (const auto& r : results) {
        py::dict d;
        d["id"] = r.id;
        d["name"] = r.name;
        d["passed"] = r.passed;
        d["detail"] = r.detail;
        d["seconds"] = r.seconds;
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ResolutionError>(m, "ResolutionError", domain.ptr());
    py::register_exception<CompositionError>(m, "CompositionError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<ModelViolation>(m, "ModelViolation", PyExc_RuntimeError);

    m.def("closure_json", &closure_json, py::arg("n"), py::arg("w"));
    m.def("is_closed", &is_closed, py::arg("n"), py::arg("w"));
    m.def("localize_json", &localize_json, py::arg("n"), py::arg("w"), py::arg("composition") = false);
    m.def("localize_dot", &localize_dot, py::arg("n"), py::arg("w"));
    m.def("oracle_json", &oracle_json, py::arg("n"), py::arg("w"), py::arg("kind") = "reps",
          py::arg("prime") = 2, py::arg("dmax") = 2);
    m.def("loose_report_json", &loose_report_json, py::arg("n"), py::arg("w"));
    m.def("loose_report_flags", &loose_report_flags, py::arg("n"), py::arg("flags"));
    m.def("validate_report", &validate_report, py::arg("text"));
    m.def("front_svg", &front_svg, py::arg("tree"), py::arg("punctures") = "");
    m.def("census_json", &census_json, py::arg("tree"), py::arg("resolution") = 512,
          py::arg("punctures") = "");
    m.def("bump_chi", py::overload_cast<double, double, double>(&bump_chi<double>), py::arg("r"),
          py::arg("epsilon") = kDefaultEpsilon, py::arg("c0") = kDefaultPlateau);
    m.def("count_representations",
          [](int n, int prime, int dmax) { return count_representations(make_quiver(n), prime, dmax); },
          py::arg("n"), py::arg("prime") = 2, py::arg("dmax") = 2);
    m.def("selftest", &selftest, py::arg("max_n") = 3, py::arg("only") = std::vector<int>{});
}
