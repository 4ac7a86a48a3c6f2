#include "nonroot/cli.hpp"
#include "nonroot/errors.hpp"
#include "nonroot/json_io.hpp"
#include "nonroot/example_suite.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace nonroot;

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("not valid JSON: ") + e.what());
  }
}

// Everything crosses the boundary as JSON text; the Python package decodes it.
std::string certify_json(const std::string& text) {
  const Json j = parse(text);
  switch (detect_kind(j)) {
    case MapKind::endo:
    case MapKind::ray: {
      const LabeledEndofunction f = decode_endo(j);
      return encode(certify_finite(f.map), &f).dump();
    }
    case MapKind::interval:
      return encode(certify_pl(decode_interval(j))).dump();
    case MapKind::circle:
      return encode(certify_circle(decode_circle(j))).dump();
  }
  return "null";
}

std::string find_root_json(const std::vector<Point>& table, std::size_t order, std::uint64_t budget, bool all) {
  RootQuery q{Endofunction(table), order, all ? SearchMode::count_all : SearchMode::first_witness, budget};
  return encode(find_root(q)).dump();
}

std::string construct_json(const std::string& text, const std::string& epsilon) {
  const Json j = parse(text);
  const Rational eps = parse_rational(epsilon);
  if (detect_kind(j) == MapKind::circle) {
    const AdmissibleCircleMap h = decode_circle(j);
    const CircleConstruction built = construct_non_iterate(h, eps);
    Json checks = Json::array();
    for (const auto& c : check_trace(h, built.trace)) checks.push_back({{"name", c.name}, {"passed", c.passed}});
    return Json{{"f", encode(built.map)},
                {"certificate", encode(built.certificate)},
                {"trace", encode(built.trace)},
                {"checks", checks},
                {"within_epsilon", sup_distance_circle(built.map, h).less_than(eps)}}
        .dump();
  }
  const PLMapInterval h = decode_interval(j);
  const IntervalConstruction built = construct_non_iterate_interval(h, eps);
  return Json{{"f", encode(built.map)},
              {"certificate", encode(built.certificate)},
              {"trace", encode(built)},
              {"within_epsilon", sup_distance(built.map, h) < eps}}
      .dump();
}

bool ray_square_equals(const std::string& f_text, const std::string& g_text) {
  const RayMap f = decode_ray_map(parse(f_text));
  const RayMap g = decode_ray_map(parse(g_text));
  return ray_equal(ray_compose(g, g), f);
}

py::tuple chord(const std::string& angular) {
  const ComparableReal c = ComparableReal::chord_of(parse_rational(angular));
  const auto exact = c.exact();
  return py::make_tuple(exact ? py::object(py::str(to_string(*exact))) : py::object(py::none()), c.approx());
}

std::string verify_paper_json(const std::string& corpus, std::uint64_t seed) {
  SuiteOptions so;
  so.corpus_dir = corpus;
  so.seed = seed;
  Json arr = Json::array();
  for (const auto& r : verify_paper(so)) arr.push_back({{"anchor", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  return arr.dump();
}

std::string ex4_json() {
  Json arr = Json::array();
  for (const auto& c : block_verify_ex4().checks)
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return arr.dump();
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "native core of the nonroot package";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<AdmissibilityError>(m, "AdmissibilityError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ConstructionFailure>(m, "ConstructionFailure", PyExc_RuntimeError);
  py::register_exception<Indeterminate>(m, "Indeterminate", PyExc_ArithmeticError);

  m.def("certify_json", &certify_json, py::arg("map_json"));
  m.def("find_root_json", &find_root_json, py::arg("table"), py::arg("order") = 2,
        py::arg("budget") = kDefaultSearchBudget, py::arg("all") = false);
  m.def("verify_root", [](const std::vector<Point>& f, const std::vector<Point>& g, std::size_t order) {
    return verify_root(Endofunction(f), Endofunction(g), order);
  }, py::arg("f"), py::arg("g"), py::arg("order") = 2);
  m.def("construct_json", &construct_json, py::arg("map_json"), py::arg("epsilon"));
  m.def("ray_square_equals", &ray_square_equals, py::arg("f_json"), py::arg("g_json"));
  m.def("chord", &chord, py::arg("angular_distance"));
  m.def("verify_paper_json", &verify_paper_json, py::arg("corpus"), py::arg("seed") = SuiteOptions{}.seed);
  m.def("ex4_json", &ex4_json);
  m.def("run_cli", &run_cli, py::arg("args"));
}
