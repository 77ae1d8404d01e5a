#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "turnover/curve.hpp"
#include "turnover/enumerator.hpp"
#include "turnover/hyperbolic.hpp"
#include "turnover/io.hpp"
#include "turnover/render.hpp"
#include "turnover/reproduce.hpp"
#include "turnover/torus.hpp"

namespace py = pybind11;
using namespace turnover;

// Structured results cross the boundary as JSON text, decoded on the Python
// side, so both front ends share one schema.
namespace {

using Triple = std::array<int, 3>;

std::string validate(Triple p, int order, Triple a) {
  const Instance inst = make_instance(p, order, a);
  io::Json out{{"instance", io::to_json(io::InstanceDocument{inst, std::nullopt})},
               {"invariants", io::invariants_to_json(invariants(inst.sig, inst.hom))},
               {"lcm_law", lcm_law_check(inst.sig, inst.hom)}};
  return out.dump();
}

std::string certify_json(Triple p, int order, Triple a, bool all_generators, bool with_geometry) {
  io::Json out = io::Json::array();
  for (const auto& c : certify(make_instance(p, order, a), {all_generators, with_geometry})) {
    out.push_back(io::to_json(io::CertificateDocument{c, std::nullopt}));
  }
  return out.dump();
}

std::string complex_json(Triple p, int order, Triple a) {
  const Instance inst = make_instance(p, order, a);
  return io::complex_to_json(build_complex(inst.sig, inst.hom)).dump();
}

io::Json class_json(const InstanceClass& c) {
  io::Json j = io::to_json(io::InstanceDocument{c.instance, std::nullopt});
  j["genus"] = c.genus;
  j["fixed_point_free"] = c.fixed_point_free;
  return j;
}

std::string enumerate_json(std::optional<int> max_order, std::optional<int> max_genus, bool fpf_only, int jobs) {
  if (max_order.has_value() == max_genus.has_value()) {
    throw std::invalid_argument("give exactly one of max_order and max_genus");
  }
  const auto classes = max_order ? enumerate_admissible(*max_order, jobs)
                                 : enumerate_by_genus(*max_genus, fpf_only, jobs);
  io::Json out = io::Json::array();
  for (const auto& c : classes) {
    if (!fpf_only || c.fixed_point_free) out.push_back(class_json(c));
  }
  return out.dump();
}

std::optional<std::string> min_fpf_json(int max_genus, int jobs) {
  const auto best = find_min_fpf(max_genus, jobs);
  if (!best) return std::nullopt;
  return class_json(*best).dump();
}

std::string torus_json(long long a, long long b, long long c, long long d) {
  const auto tc = torus::classify({a, b, c, d});
  if (!tc) throw std::invalid_argument("matrix has infinite order");
  return io::to_json(io::TorusCertificateDocument{*tc, torus::find_curve(*tc), std::nullopt}).dump();
}

std::string render(Triple p, int order, Triple a, int depth, bool curves, int generator, std::optional<int> size) {
  const Instance inst = make_instance(p, order, a);
  const auto cx = build_complex(inst.sig, inst.hom);
  const auto poly = hyp::build_reference_polygon(inst.sig);
  std::vector<CombinatorialCurve> drawn;
  if (curves) {
    const auto alpha = build_alpha(cx).curve;
    drawn = {alpha, map_curve(cx, alpha, deck_action(cx, generator))};
  }
  RenderStyle style;
  if (size) style.size = *size;
  return render_svg(cx, poly, drawn, depth, style);
}

std::string reproduce_json(const std::string& example, int genus) {
  ReproReport report;
  if (example == "3.2") {
    report = reproduce_fixed_point_free_example();
  } else if (example == "3.1") {
    report = reproduce_rotation_example(genus);
  } else {
    throw std::invalid_argument("unknown example " + example);
  }
  io::Json checks = io::Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"claim", c.claim}, {"observed", c.observed}, {"ok", c.ok}});
  }
  return io::Json{{"example", report.example}, {"ok", report.ok()}, {"checks", checks}}.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the turnover package";
  m.attr("__version__") = io::tool_version();

  // args = (message, reason code)
  static PyObject* invalid = py::exception<InvalidInstance>(m, "InvalidInstance", PyExc_ValueError).release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidInstance& e) {
      PyErr_SetObject(invalid, py::make_tuple(e.what(), std::string(reason_code(e.reason()))).ptr());
    }
  });

  m.def("validate", &validate, py::arg("signature"), py::arg("order"), py::arg("images"));
  m.def("certify", &certify_json, py::arg("signature"), py::arg("order"), py::arg("images"),
        py::arg("all_generators") = true, py::arg("with_geometry") = false);
  m.def("complex", &complex_json, py::arg("signature"), py::arg("order"), py::arg("images"));
  m.def("enumerate", &enumerate_json, py::arg("max_order") = py::none(), py::arg("max_genus") = py::none(),
        py::arg("fpf_only") = false, py::arg("jobs") = 0);
  m.def("min_fpf", &min_fpf_json, py::arg("max_genus"), py::arg("jobs") = 0);
  m.def("torus", &torus_json, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));
  m.def("render", &render, py::arg("signature"), py::arg("order"), py::arg("images"), py::arg("depth") = 1,
        py::arg("curves") = false, py::arg("generator") = 1, py::arg("size") = py::none());
  m.def("reproduce", &reproduce_json, py::arg("example"), py::arg("genus") = 2);
}
