#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "zpe/cli.hpp"
#include "zpe/discrete_spectrum.hpp"
#include "zpe/historical.hpp"
#include "zpe/montecarlo.hpp"
#include "zpe/phase_space.hpp"
#include "zpe/spectrum.hpp"
#include "zpe/statistical_ensemble.hpp"
#include "zpe/variance_law.hpp"
#include "zpe/verify.hpp"
#include "zpe/version.hpp"

namespace py = pybind11;
using namespace zpe;

namespace {

py::dict batch_dict(const SampleBatch& b) {
  py::dict d;
  d["label"] = b.label;
  d["n"] = b.n;
  d["mean"] = b.mean;
  d["variance"] = b.variance;
  d["std_error"] = b.std_error;
  d["seed"] = b.seed;
  d["stream_id"] = b.stream_id;
  return d;
}

// argv-style entry so scripts get exactly the CLI behaviour; returns (status, stdout, stderr)
py::tuple run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"zpe"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return py::make_tuple(status, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_zpe, m) {
  m.doc() = "Harmonic oscillator thermodynamics with zero-point energy";
  m.attr("__version__") = kVersion;

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  m.def("planck_mean_energy", &planck_mean_energy, py::arg("e0"), py::arg("beta"));
  m.def("thermal_mean_energy", &thermal_mean_energy, py::arg("e0"), py::arg("beta"));
  m.def("wien_approximation", &wien_approximation, py::arg("e0"), py::arg("beta"));
  m.def("partition_function", &partition_function, py::arg("e0"), py::arg("beta"));
  m.def("log_partition_function", &log_partition_function, py::arg("e0"), py::arg("beta"));
  m.def("entropy", &entropy, py::arg("e0"), py::arg("beta"), py::arg("k") = 1.0);
  m.def("energy_variance", &energy_variance, py::arg("e0"), py::arg("beta"));
  m.def("heat_capacity", &heat_capacity, py::arg("e0"), py::arg("beta"), py::arg("k") = 1.0);

  py::class_<VarianceAnsatz>(m, "VarianceAnsatz")
      .def(py::init<double, double, double>(), py::arg("a0"), py::arg("a1"), py::arg("a2"))
      .def_static("with_root", &VarianceAnsatz::with_root, py::arg("e0"), py::arg("a1"), py::arg("a2"))
      .def_property_readonly("a0", &VarianceAnsatz::a0)
      .def_property_readonly("a1", &VarianceAnsatz::a1)
      .def_property_readonly("a2", &VarianceAnsatz::a2)
      .def_property_readonly("q", &VarianceAnsatz::q)
      .def("roots", &VarianceAnsatz::roots);
  m.def("solve_mean_energy", &solve_mean_energy, py::arg("ansatz"), py::arg("beta"));
  m.def("wien_consistency_residual", &wien_consistency_residual, py::arg("ansatz"), py::arg("e0"),
        py::arg("beta"));

  m.def(
      "level_weights",
      [](double e0, double beta) {
        const auto spectrum = DiscreteSpectrum::build(e0, beta);
        return std::vector<double>(spectrum.weights().begin(), spectrum.weights().end());
      },
      py::arg("e0"), py::arg("beta"));

  m.def(
      "decompose_fluctuations",
      [](double e0, double beta) {
        const auto d = decompose_fluctuations(e0, beta);
        py::dict out;
        out["u_total"] = d.u_total;
        out["u_thermal"] = d.u_thermal;
        out["var_total"] = d.var_total;
        out["var_thermal"] = d.var_thermal;
        out["var_zero_point"] = d.var_zero_point;
        out["covariance"] = d.covariance;
        return out;
      },
      py::arg("e0"), py::arg("beta"));

  m.def(
      "uncertainty_product",
      [](double omega, double beta, double hbar, double mass) {
        return uncertainty_product(OscillatorModel(omega, hbar, 1.0, mass), beta);
      },
      py::arg("omega"), py::arg("beta"), py::arg("hbar") = 1.0, py::arg("mass") = 1.0);

  m.def("reconstruct_planck_from_interpolation", &reconstruct_planck_from_interpolation, py::arg("e0"),
        py::arg("beta"), py::arg("k") = 1.0);
  m.def("crossover_temperature", &crossover_temperature, py::arg("e0"));

  m.def(
      "draw_discrete_levels",
      [](double e0, double beta, std::size_t n, std::uint64_t seed, std::uint64_t stream) {
        return draw_discrete_levels(e0, beta, n, {seed, stream});
      },
      py::arg("e0"), py::arg("beta"), py::arg("n"), py::arg("seed"), py::arg("stream") = 0);
  m.def(
      "sample_ws",
      [](double u, std::size_t n, std::uint64_t seed, std::uint64_t stream) {
        return batch_dict(sample_ws(u, n, {seed, stream}));
      },
      py::arg("u"), py::arg("n"), py::arg("seed"), py::arg("stream") = 0);
  m.def(
      "draw_mode_interference",
      [](std::size_t modes, std::size_t n, std::uint64_t seed, std::uint64_t stream) {
        py::gil_scoped_release release;
        return draw_mode_interference(modes, n, {seed, stream});
      },
      py::arg("modes"), py::arg("n"), py::arg("seed"), py::arg("stream") = 0);

  m.def("run_cli", &run_cli, py::arg("args"), "Run the zpe command line; returns (status, stdout, stderr).");
}
