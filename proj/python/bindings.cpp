// Python bindings: the classifier, the fixture verifier and the invariant suites.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oracles.hpp"
#include "tfd/errors.hpp"
#include "tfd/exceptional.hpp"
#include "tfd/format.hpp"
#include "tfd/toric.hpp"

namespace py = pybind11;
using namespace tfd;

PYBIND11_MODULE(_tfd, m) {
    m.doc() = "Fixed point data of semifree circle actions on monotone 6-manifolds";
    m.attr("schema_version") = kSchemaVersion;

    py::register_exception<TfdError>(m, "TfdError", PyExc_ValueError);

    m.def(
        "classify_json", [](const std::string& which, int indent) { return to_json(classify_case(which), indent); },
        py::arg("case") = "all", py::arg("indent") = -1);
    m.def(
        "table",
        [](const std::string& format, const std::string& which) {
            auto recs = classify_case(which);
            if (format == "markdown") return to_markdown(recs);
            if (format == "tsv") return to_tsv(recs);
            if (format == "json") return to_json(recs);
            throw TfdError("usage", "format must be json, markdown or tsv");
        },
        py::arg("format") = "markdown", py::arg("case") = "all");
    m.def(
        "verify_fixture",
        [](const std::string& path) {
            Fixture f = load_fixture(path);
            ToricFixedReport r = fixture_report(f);
            py::dict out;
            out["matched"] = match_tfd(r, classify_all());
            out["expect"] = f.expect ? py::object(py::str(*f.expect)) : py::object(py::none());
            out["b_min"] = r.b_min;
            out["b_max"] = r.b_max;
            out["description"] = describe(r);
            return out;
        },
        py::arg("path"));
    m.def(
        "check",
        [](const std::string& suite) {
            std::vector<py::tuple> out;
            for (const auto& l : oracle::run_suite(suite)) out.push_back(py::make_tuple(l.module, l.property, l.ok, l.detail));
            return out;
        },
        py::arg("suite") = "all");
    m.def(
        "exceptional_classes",
        [](int k) {
            SurfaceModel s = make_model(BaseKind::P2, k);
            std::vector<std::string> out;
            for (const auto& c : exceptional_classes(s)) out.push_back(format_class(s, c));
            return out;
        },
        py::arg("k"));
}
