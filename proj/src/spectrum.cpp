#include "zpe/spectrum.hpp"

#include <cmath>
#include <limits>

#include "zpe/error.hpp"
#include "zpe/hyperbolic.hpp"

namespace zpe {

using detail::require_non_negative;
using detail::require_positive;

OscillatorModel::OscillatorModel(double omega, double hbar, double k, double mass)
    : omega_(omega), hbar_(hbar), k_(k), mass_(mass) {
  require_positive(omega, "omega");
  require_positive(hbar, "hbar");
  require_positive(k, "k");
  require_positive(mass, "mass");
}

double zero_point_energy(const OscillatorModel& model) {
  return 0.5 * model.hbar() * model.omega();
}

double planck_mean_energy(double e0, double beta) {
  require_positive(beta, "beta");
  require_non_negative(e0, "e0");
  if (e0 == 0.0) return 1.0 / beta;
  return e0 + e0 * detail::coth_minus_one(e0 * beta);
}

double thermal_mean_energy(double e0, double beta) {
  require_positive(beta, "beta");
  require_positive(e0, "e0");
  return 2.0 * e0 / std::expm1(2.0 * e0 * beta);
}

double wien_approximation(double e0, double beta) {
  require_positive(beta, "beta");
  require_positive(e0, "e0");
  return 2.0 * e0 * std::exp(-2.0 * e0 * beta);
}

double wien_relative_error(double e0, double beta) {
  require_positive(beta, "beta");
  require_positive(e0, "e0");
  return std::exp(-2.0 * e0 * beta);
}

double log_partition_function(double e0, double beta) {
  require_positive(beta, "beta");
  require_non_negative(e0, "e0");
  if (e0 == 0.0) return -std::log(beta);
  // ln E0 - ln sinh(x) = ln(2 E0) - ln(2 sinh x)
  return std::log(2.0 * e0) - detail::log_two_sinh(e0 * beta);
}

double partition_function(double e0, double beta) {
  return std::exp(log_partition_function(e0, beta));
}

double entropy(double e0, double beta, double k) {
  require_positive(beta, "beta");
  require_positive(e0, "e0");
  require_positive(k, "k");
  const double x = e0 * beta;
  // -ln(2 sinh x) + x coth x = -ln(1 - e^{-2x}) + x (coth x - 1)
  return k * (-std::log(-std::expm1(-2.0 * x)) + x * detail::coth_minus_one(x));
}

double energy_variance(double e0, double beta) {
  require_positive(beta, "beta");
  require_non_negative(e0, "e0");
  if (e0 == 0.0) {
    // U^2 exactly, not 1/beta^2 rounded differently
    const double u = 1.0 / beta;
    return u * u;
  }
  return e0 * e0 * detail::csch_squared(e0 * beta);
}

double heat_capacity(double e0, double beta, double k) {
  require_positive(k, "k");
  return k * beta * beta * energy_variance(e0, beta);
}

double wien_scaling_check(const OscillatorModel& model, double scale, double beta) {
  require_positive(scale, "scale");
  require_positive(beta, "beta");
  const double omega = model.omega();
  const double e0 = zero_point_energy(model);
  const OscillatorModel scaled(scale * omega, model.hbar(), model.k(), model.mass());
  // T -> s T means beta -> beta / s.
  const double scaled_u = planck_mean_energy(zero_point_energy(scaled), beta / scale);
  return std::abs(scaled_u / scaled.omega() - planck_mean_energy(e0, beta) / omega);
}

ThermoPoint thermo_point(double e0, double beta, double k) {
  ThermoPoint p;
  p.beta = beta;
  p.u = planck_mean_energy(e0, beta);
  p.sigma2 = energy_variance(e0, beta);
  p.cv = heat_capacity(e0, beta, k);
  p.s = e0 > 0.0 ? entropy(e0, beta, k) : std::numeric_limits<double>::quiet_NaN();
  p.z = partition_function(e0, beta);
  return p;
}

}  // namespace zpe
