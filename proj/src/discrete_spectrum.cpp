#include "zpe/discrete_spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "zpe/spectrum.hpp"

namespace zpe {

DiscreteSpectrum DiscreteSpectrum::build(double e0, double beta, double tail_tol) {
  detail::require_positive(e0, "e0");
  detail::require_positive(beta, "beta");
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
    throw DomainError("tail_tol must lie in (0, 1), got " + std::to_string(tail_tol));
  }
  const double x = e0 * beta;
  // r^{n_max+1} < tail_tol with ln r = -2x.
  const double needed = std::floor(-std::log(tail_tol) / (2.0 * x));
  if (!(needed <= static_cast<double>(kMaxLevelIndex))) {
    throw ResourceError("E0*beta = " + std::to_string(x) + " needs more than " +
                        std::to_string(kMaxLevelIndex) +
                        " levels for tail_tol = " + std::to_string(tail_tol) +
                        "; use the classical (e0 = 0) branch");
  }
  const auto n_max = static_cast<std::size_t>(needed);

  std::vector<double> levels(n_max + 1);
  std::vector<double> weights(n_max + 1);
  const double one_minus_r = -std::expm1(-2.0 * x);
  CompensatedSum geometric;  // sum of r^n
  CompensatedSum total;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto nd = static_cast<double>(n);
    levels[n] = (2.0 * nd + 1.0) * e0;
    const double r_n = std::exp(-2.0 * x * nd);
    geometric.add(r_n);
    weights[n] = one_minus_r * r_n;
    total.add(weights[n]);
  }
  const double norm = total.value();
  for (double& w : weights) w /= norm;
  const double log_z = -x + std::log(geometric.value());
  return DiscreteSpectrum(e0, beta, std::move(levels), std::move(weights), log_z);
}

double shannon_entropy(const DiscreteSpectrum& spectrum) {
  CompensatedSum acc;
  for (double w : spectrum.weights()) {
    if (w > 0.0) acc.add(-w * std::log(w));
  }
  return acc.value();
}

double mean_occupation(double e0, double beta) {
  detail::require_positive(e0, "e0");
  detail::require_positive(beta, "beta");
  return 1.0 / std::expm1(2.0 * e0 * beta);
}

namespace {

double level_sum_log_zg(double e0, double beta) {
  return DiscreteSpectrum::build(e0, beta).log_partition_function();
}

double level_sum_mean_energy(double e0, double beta) {
  return -central_derivative([e0](double b) { return level_sum_log_zg(e0, b); }, beta,
                             default_beta_step(beta));
}

}  // namespace

double implied_log_g_mean(double e0, double beta) {
  const double u = level_sum_mean_energy(e0, beta);
  return level_sum_log_zg(e0, beta) + beta * u - entropy(e0, beta);
}

double verify_lng_constancy(double e0, std::span<const double> betas) {
  if (betas.empty()) throw DomainError("verify_lng_constancy needs at least one beta");
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    const double v = implied_log_g_mean(e0, betas[i]);
    lo = i == 0 ? v : std::min(lo, v);
    hi = i == 0 ? v : std::max(hi, v);
  }
  return hi - lo;
}

double potential_slope_deviation(double e0, std::span<const double> betas) {
  const double omega = 2.0 * e0;  // hbar = 1
  double worst = 0.0;
  for (double beta : betas) {
    const double slope = -level_sum_mean_energy(e0, beta) / omega;  // dphi/dz with z = omega beta
    const double expected = -planck_mean_energy(e0, beta) / omega;
    worst = std::max(worst, relative_difference(slope, expected));
  }
  return worst;
}

}  // namespace zpe
