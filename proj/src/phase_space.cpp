#include "zpe/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zpe/error.hpp"
#include "zpe/statistical_ensemble.hpp"

namespace zpe {

PhaseSpaceGaussian::PhaseSpaceGaussian(double mass, double omega, double u)
    : mass_(mass), omega_(omega), u_(u) {
  detail::require_positive(mass, "mass");
  detail::require_positive(omega, "omega");
  detail::require_positive(u, "u");
}

PhaseSpaceGaussian PhaseSpaceGaussian::equilibrium(const OscillatorModel& model, double beta) {
  return PhaseSpaceGaussian(model.mass(), model.omega(),
                            planck_mean_energy(zero_point_energy(model), beta));
}

double PhaseSpaceGaussian::energy(double p, double q) const {
  return 0.5 * p * p / mass_ + 0.5 * mass_ * omega_ * omega_ * q * q;
}

double wigner_density(double p, double q, const PhaseSpaceGaussian& g) {
  const double u = g.u();
  return g.omega() / (2.0 * std::numbers::pi * u) * std::exp(-g.energy(p, q) / u);
}

double uncertainty_product(const OscillatorModel& model, double beta) {
  return uncertainty_product(PhaseSpaceGaussian::equilibrium(model, beta));
}

double uncertainty_product(const PhaseSpaceGaussian& g) { return g.var_p() * g.var_q(); }

namespace {

struct PhasePoint {
  double p;
  double q;
};

// Action-angle parametrisation of the energy shell H = e.
PhasePoint on_shell(const PhaseSpaceGaussian& g, double e, double theta) {
  const double m = g.mass();
  const double w = g.omega();
  return {std::sqrt(2.0 * m * e) * std::cos(theta), std::sqrt(2.0 * e / (m * w * w)) * std::sin(theta)};
}

double jacobian(const PhaseSpaceGaussian& g, double e, double theta) {
  // The polar parametrisation is singular at e = 0, so the shell is probed no
  // closer than 1e-3 U to the origin.
  const double ej = std::max(e, 1e-3 * g.u());
  const double he = 1e-5 * ej;
  const double ht = 1e-5;
  const auto a = on_shell(g, ej + he, theta);
  const auto b = on_shell(g, ej - he, theta);
  const auto c = on_shell(g, ej, theta + ht);
  const auto d = on_shell(g, ej, theta - ht);
  const double dp_de = (a.p - b.p) / (2.0 * he);
  const double dq_de = (a.q - b.q) / (2.0 * he);
  const double dp_dt = (c.p - d.p) / (2.0 * ht);
  const double dq_dt = (c.q - d.q) / (2.0 * ht);
  return std::abs(dp_de * dq_dt - dq_de * dp_dt);
}

}  // namespace

double energy_density_from_wigner(const PhaseSpaceGaussian& g, double e,
                                  std::size_t angle_points) {
  detail::require_non_negative(e, "e");
  if (angle_points < 2) throw DomainError("angle_points must be >= 2");
  const double step = 2.0 * std::numbers::pi / static_cast<double>(angle_points);
  double acc = 0.0;
  for (std::size_t i = 0; i < angle_points; ++i) {
    const double theta = step * static_cast<double>(i);
    const auto pt = on_shell(g, e, theta);
    acc += wigner_density(pt.p, pt.q, g) * jacobian(g, e, theta);
  }
  return acc * step;
}

double energy_marginal_consistency(const PhaseSpaceGaussian& g, double e_max,
                                   std::size_t grid_points) {
  detail::require_positive(e_max, "e_max");
  if (grid_points < 2) throw DomainError("grid_points must be >= 2");
  double worst = 0.0;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double e = e_max * static_cast<double>(i) / static_cast<double>(grid_points - 1);
    worst = std::max(worst, std::abs(energy_density_from_wigner(g, e) - ws_density(e, g.u())));
  }
  return worst;
}

}  // namespace zpe
