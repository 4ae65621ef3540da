#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bcforge/acceptance.hpp"
#include "bcforge/models.hpp"
#include "bcforge/report.hpp"

namespace py = pybind11;
using namespace bcforge;

namespace {

std::vector<Theory> theories_from(const std::optional<std::vector<std::string>>& keys) {
  if (!keys) return all_theories();
  std::vector<Theory> out;
  for (const std::string& k : *keys) {
    auto t = parse_theory(k);
    if (!t) throw py::value_error("unknown theory '" + k + "'");
    out.push_back(*t);
  }
  return out;
}

Format format_from(const std::string& key) {
  auto f = parse_format(key);
  if (!f) throw py::value_error("unknown format '" + key + "'");
  return *f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact cohomology of finite bigraded models";

  auto model_error = py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
  py::register_exception<ModelValidationError>(m, "ModelValidationError", model_error.ptr());
  py::register_exception<UnknownPreset>(m, "UnknownPreset", model_error.ptr());
  py::register_exception<UnresolvableGenerator>(m, "UnresolvableGenerator", model_error.ptr());

  py::class_<BuiltModel>(m, "Model")
      .def_static("preset", [](const std::string& name) { return build(preset(name)); }, py::arg("name"))
      .def_static("from_json", [](const std::string& text) { return build(modelspec_from_json(text)); },
                  py::arg("text"))
      .def_static("from_file", [](const std::string& path) { return build(load_modelspec(path)); }, py::arg("path"))
      .def_property_readonly("name", [](const BuiltModel& bm) { return bm.spec.name; })
      .def_property_readonly("n", [](const BuiltModel& bm) { return bm.spec.n; })
      .def_property_readonly("generator_count", &BuiltModel::generator_count)
      .def("to_json", [](const BuiltModel& bm) { return modelspec_to_json(bm.spec); })
      .def("labels",
           [](const BuiltModel& bm, int p, int q) {
             std::vector<std::string> out;
             auto it = bm.generators.find({p, q});
             if (it != bm.generators.end()) {
               for (const Generator& g : it->second) out.push_back(g.label);
             }
             return out;
           },
           py::arg("p"), py::arg("q"))
      .def("__repr__", [](const BuiltModel& bm) {
        return "<Model " + bm.spec.name + " n=" + std::to_string(bm.spec.n) + " generators=" +
               std::to_string(bm.generator_count()) + ">";
      });

  m.def("preset_names", &preset_names);
  m.def("preset_json", [](const std::string& name) { return modelspec_to_json(preset(name)); }, py::arg("name"));

  m.def(
      "validate",
      [](const BuiltModel& bm, const std::string& format) {
        Report r;
        r.command = "validate";
        r.model = bm.spec.name;
        r.n = bm.spec.n;
        r.invariants = model_invariants(bm);
        return render(r, format_from(format));
      },
      py::arg("model"), py::arg("format") = "json");
  m.def(
      "table",
      [](const BuiltModel& bm, const std::optional<std::vector<std::string>>& theories, bool representatives,
         const std::string& format) {
        std::vector<Theory> ts = theories_from(theories);
        Format f = format_from(format);
        py::gil_scoped_release release;
        return render(table_report(bm, ts, false, representatives), f);
      },
      py::arg("model"), py::arg("theories") = std::nullopt, py::arg("representatives") = false,
      py::arg("format") = "json");
  m.def(
      "ddbar",
      [](const BuiltModel& bm, const std::string& format) {
        Format f = format_from(format);
        py::gil_scoped_release release;
        return render(ddbar_report(bm), f);
      },
      py::arg("model"), py::arg("format") = "json");
  m.def(
      "compare",
      [](const BuiltModel& sub, const BuiltModel& ambient, const std::optional<std::vector<std::string>>& theories,
         const std::string& format) {
        std::vector<Theory> ts = theories_from(theories);
        Format f = format_from(format);
        py::gil_scoped_release release;
        return render(compare_report(sub, ambient, ts), f);
      },
      py::arg("sub"), py::arg("ambient"), py::arg("theories") = std::nullopt, py::arg("format") = "json");
  m.def(
      "run_acceptance",
      [](std::uint64_t seed) {
        std::vector<CriterionResult> rs;
        {
          py::gil_scoped_release release;
          rs = run_acceptance(seed);
        }
        py::list out;
        for (const CriterionResult& r : rs) {
          py::dict d;
          d["id"] = r.id;
          d["title"] = r.title;
          d["pass"] = r.pass;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 0);
}
