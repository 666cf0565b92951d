#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "qalg/cli.hpp"
#include "qalg/error.hpp"
#include "qalg/nondis.hpp"
#include "qalg/qdsl.hpp"
#include "qalg/ray_category.hpp"
#include "qalg/report.hpp"
#include "qalg/version.hpp"

namespace py = pybind11;

namespace {

qalg::AlgebraPtr algebra(const std::string& text, std::size_t max_dim) {
  return std::make_shared<const qalg::PathAlgebra>(
      qalg::build_path_algebra(qalg::parse_algebra(text), max_dim));
}

std::string algebra_info(const std::string& text, std::size_t max_dim) {
  const auto a = algebra(text, max_dim);
  const auto verdict = qalg::is_distributive(*a);
  qalg::Json homs = qalg::Json::array();
  for (std::size_t e = 0; e < a->vertex_count(); ++e) {
    qalg::Json row = qalg::Json::array();
    for (std::size_t f = 0; f < a->vertex_count(); ++f) row.push_back(qalg::hom_space(*a, e, f).size());
    homs.push_back(std::move(row));
  }
  qalg::Json out{{"dim", a->dim()},
                 {"nilpotency_index", a->nilpotency_index()},
                 {"vertices", a->presentation().vertices},
                 {"hom_dims", std::move(homs)},
                 {"distributive", verdict.distributive}};
  out["witness"] = verdict.witness ? qalg::to_json(*a, *verdict.witness) : qalg::Json(nullptr);
  return out.dump();
}

std::string indecomposable(const std::string& text, std::size_t m, std::size_t max_dim) {
  const auto a = algebra(text, max_dim);
  const auto x = qalg::indecomposable_of_dimension(a, m);
  qalg::Json out = qalg::to_json(x.module);
  out["certificate"] = qalg::to_json(x.certificate);
  out["relations_ok"] = x.violations.empty();
  out["source"] = x.source;
  out["n"] = x.n;
  return out.dump();
}

qalg::RayCategory category(const std::string& text, bool raycat) {
  if (raycat) return qalg::RayCategory(qalg::parse_ray_category(text));
  return qalg::ray_category_of(qalg::build_path_algebra(qalg::parse_algebra(text)));
}

std::string ray_category(const std::string& text, bool raycat) {
  return qalg::summary_json(category(text, raycat)).dump();
}

std::string crowns(const std::string& text, bool raycat, std::size_t max_n) {
  const auto p = category(text, raycat);
  qalg::Json out = qalg::Json::array();
  for (const auto& c : qalg::find_crowns(p, max_n)) out.push_back(qalg::to_json(p, c));
  return out.dump();
}

std::tuple<int, std::string, std::string> cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qalg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = qalg::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_qalg, m) {
  m.doc() = "Quiver algebras with exact rational arithmetic";
  m.attr("__version__") = std::string(qalg::kVersion);

  py::register_exception<qalg::Error>(m, "QalgError", PyExc_ValueError);

  constexpr std::size_t kMax = qalg::PathAlgebra::kDefaultMaxDim;
  m.def("algebra_info", &algebra_info, py::arg("text"), py::arg("max_dim") = kMax);
  m.def("indecomposable", &indecomposable, py::arg("text"), py::arg("m"), py::arg("max_dim") = kMax,
        py::call_guard<py::gil_scoped_release>());
  m.def("ray_category", &ray_category, py::arg("text"), py::arg("raycat") = false);
  m.def("crowns", &crowns, py::arg("text"), py::arg("raycat") = false, py::arg("max_n") = 6);
  m.def("cli", &cli, py::arg("args"), py::call_guard<py::gil_scoped_release>());
}
