#include <pybind11/pybind11.h>

#include "dofic/report.hpp"

namespace py = pybind11;

namespace {

dofic::AntennaConfig cfg(int m1, int m2, int n1, int n2) {
  return dofic::validate(m1, m2, n1, n2);
}

std::string region_json(int m1, int m2, int n1, int n2, const std::string& csi) {
  return dofic::region_report(cfg(m1, m2, n1, n2), dofic::parse_regime(csi)).dump();
}

std::string classify_json(int m1, int m2, int n1, int n2) {
  return dofic::classify_report(cfg(m1, m2, n1, n2)).dump();
}

std::string simulate_json(int m1, int m2, int n1, int n2, const std::string& corner, int trials,
                          std::uint64_t seed, int inflate_d1) {
  return dofic::simulate_report(cfg(m1, m2, n1, n2), corner, trials, seed, inflate_d1).dump();
}

std::string verify_json(int m1, int m2, int n1, int n2, int trials, std::uint64_t seed) {
  return dofic::verify_report_json(cfg(m1, m2, n1, n2), trials, seed).dump();
}

std::string sweep_json(int max_antennas, const std::string& check, int trials, std::uint64_t seed,
                       unsigned threads) {
  dofic::SweepOptions opts;
  opts.max_antennas = max_antennas;
  opts.check = check;
  opts.trials = trials;
  opts.seed = seed;
  opts.threads = threads;
  return dofic::sweep_report(opts).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact DoF-region engine for the 2-user MIMO interference channel";

  m.def("region_json", &region_json, py::arg("m1"), py::arg("m2"), py::arg("n1"), py::arg("n2"),
        py::arg("csi") = "delayed",
        "Region report (bounds, active bounds, vertices) as a JSON string.");
  m.def("classify_json", &classify_json, py::arg("m1"), py::arg("m2"), py::arg("n1"),
        py::arg("n2"), "Case label, corner points and regime comparison as a JSON string.");
  m.def("simulate_json", &simulate_json, py::arg("m1"), py::arg("m2"), py::arg("n1"),
        py::arg("n2"), py::arg("corner") = "all", py::arg("trials") = 20, py::arg("seed") = 1,
        py::arg("inflate_d1") = 0, "Seeded corner-scheme simulation as a JSON string.");
  m.def("verify_json", &verify_json, py::arg("m1"), py::arg("m2"), py::arg("n1"), py::arg("n2"),
        py::arg("trials") = 5, py::arg("seed") = 1,
        "Achievability-versus-outer-region verification as a JSON string.");
  m.def("sweep_json", &sweep_json, py::arg("max_antennas") = 4, py::arg("check") = "taxonomy",
        py::arg("trials") = 5, py::arg("seed") = 1, py::arg("threads") = 0,
        "Exhaustive sweep over canonical configs as a JSON string.");

  py::register_exception<dofic::NonPositiveAntennaCount>(m, "NonPositiveAntennaCount",
                                                         PyExc_ValueError);
  py::register_exception<dofic::CornerUndefinedForCase>(m, "CornerUndefinedForCase",
                                                        PyExc_ValueError);
  py::register_exception<dofic::InfeasibleParameters>(m, "InfeasibleParameters", PyExc_ValueError);
  py::register_exception<dofic::PartitionInfeasible>(m, "PartitionInfeasible", PyExc_ValueError);

#ifdef DOFIC_VERSION
  m.attr("__version__") = DOFIC_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
