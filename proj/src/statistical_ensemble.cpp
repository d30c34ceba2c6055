#include "zpe/statistical_ensemble.hpp"

#include <cmath>

#include "zpe/error.hpp"
#include "zpe/spectrum.hpp"

namespace zpe {

double ws_density(double e, double u) {
  detail::require_positive(u, "u");
  if (e < 0.0) return 0.0;
  return std::exp(-e / u) / u;
}

FluctuationDecomposition decompose_fluctuations(double e0, double beta) {
  detail::require_non_negative(e0, "e0");
  detail::require_positive(beta, "beta");
  FluctuationDecomposition d;
  d.e0 = e0;
  d.u_thermal = e0 > 0.0 ? thermal_mean_energy(e0, beta) : 1.0 / beta;
  d.u_total = d.u_thermal + e0;
  d.var_total = d.u_total * d.u_total;
  d.var_thermal = d.u_thermal * d.u_thermal + 2.0 * e0 * d.u_thermal;
  d.var_zero_point = e0 * e0;
  d.covariance = 0.5 * (d.var_total - d.var_thermal - d.var_zero_point);
  return d;
}

double statistical_entropy(double u, double k) {
  detail::require_positive(u, "u");
  return k * std::log(u) + k;
}

double statistical_temperature_inverse(double u, double k) {
  detail::require_positive(u, "u");
  return k / u;
}

}  // namespace zpe
