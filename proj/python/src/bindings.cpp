// Thin bindings: results cross the boundary as canonical JSON text and are
// decoded on the Python side.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "laumon/errors.hpp"
#include "laumon/qtoda.hpp"
#include "laumon/suites.hpp"
#include "laumon/whittaker.hpp"

namespace py = pybind11;
using namespace laumon;

namespace {

std::string points_json(int n, const Degree& d) {
  check_degree(n, d);
  Json out = Json::array();
  for (const auto& p : enumerate(n, d)) out.push_back(to_json(p));
  return out.dump();
}

std::string characters_json(int n, const std::vector<std::vector<int>>& rows) {
  FixedPoint p(n, rows);
  VermaRing ring(n);
  Json out;
  out["tangent"] = to_json(tangent_char(ring, p), ring.space());
  out["oracle"] = to_json(flag_tangent_oracle(ring, flag_of(p)), ring.space());
  out["det_rgamma"] = to_json(ring.poly(det_rgamma_weight(ring, p)), ring.space());
  return out.dump();
}

std::string suite_json(const std::string& name, int n, int box, std::uint64_t seed, int trials,
                       const std::string& convention, std::optional<int> i) {
  SuiteConfig cfg;
  cfg.n = n;
  cfg.box = box;
  cfg.seed = seed;
  cfg.trials = trials;
  cfg.orientation = parse_orientation(convention);
  cfg.i = i;
  SuiteReport rep;
  {
    py::gil_scoped_release release;
    rep = run_suite(name, cfg, Budget::from_env());
  }
  Json out;
  out["records"] = Json::array();
  for (const auto& r : rep.records) out["records"].push_back(to_json(r));
  out["data"] = rep.data;
  Tally t = rep.tally();
  out["pass"] = t.pass;
  out["fail"] = t.fail;
  out["skipped"] = t.skipped;
  out["out_of_budget"] = rep.out_of_budget;
  return out.dump();
}

std::string whittaker_json(int n, const Degree& d, const std::string& convention) {
  check_degree(n, d);
  VermaModule m(n, parse_orientation(convention));
  const auto& vs = m.ring().space();
  auto [pairing, via_rgamma] = pair_kw(m, d);
  Json out;
  out["k"] = to_json(whittaker_k(m, d), vs);
  out["w"] = to_json(whittaker_w(m, d), vs);
  out["pairing"] = to_json(pairing, vs);
  out["rgamma"] = to_json(rgamma_char(m, structure_sheaf_vector(m, d)), vs);
  out["pairing_matches"] = sym::eq_exact(pairing, via_rgamma);
  return out.dump();
}

std::string toda_json(int n, int box) {
  VermaModule m(n);
  return calibrate_toda(m, box).to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact fixed-point computations on Laumon spaces";
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<DegeneracyError>(m, "DegeneracyError", PyExc_ArithmeticError);

  m.def("kostant_count", &kostant_count, py::arg("n"), py::arg("degree"),
        "Number of Kostant partitions of sum d_i alpha_i.");
  m.def("enumerate_json", &points_json, py::arg("n"), py::arg("degree"));
  m.def("characters_json", &characters_json, py::arg("n"), py::arg("rows"));
  m.def("suite_json", &suite_json, py::arg("name"), py::arg("n"), py::arg("box"),
        py::arg("seed") = 1, py::arg("trials") = 5, py::arg("convention") = "A",
        py::arg("i") = py::none());
  m.def("whittaker_json", &whittaker_json, py::arg("n"), py::arg("degree"),
        py::arg("convention") = "A");
  m.def("toda_calibration_json", &toda_json, py::arg("n"), py::arg("box"));
  m.def("suite_names", &suite_names);
}
