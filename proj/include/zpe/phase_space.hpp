#pragma once

#include <cstddef>

#include "zpe/spectrum.hpp"

namespace zpe {

/// Equilibrium Wigner density of one oscillator: a product of zero-mean
/// normals in p and q with var_p = m U and var_q = U / (m omega^2).
class PhaseSpaceGaussian {
 public:
  PhaseSpaceGaussian(double mass, double omega, double u);

  /// Gaussian at the Planck mean energy for `model` at `beta`.
  static PhaseSpaceGaussian equilibrium(const OscillatorModel& model, double beta);

  double mass() const { return mass_; }
  double omega() const { return omega_; }
  double u() const { return u_; }
  double var_p() const { return mass_ * u_; }
  double var_q() const { return u_ / (mass_ * omega_ * omega_); }

  /// H(p, q) = p^2 / 2m + m omega^2 q^2 / 2.
  double energy(double p, double q) const;

 private:
  double mass_;
  double omega_;
  double u_;
};

/// (omega / 2 pi U) exp(-(p^2 + m^2 omega^2 q^2) / (2 m U)).
double wigner_density(double p, double q, const PhaseSpaceGaussian& g);

/// var_q var_p = U^2 / omega^2 with U the Planck mean energy of `model`.
double uncertainty_product(const OscillatorModel& model, double beta);

/// var_q var_p of an arbitrary Gaussian (e.g. a classical one with U = 1/beta).
double uncertainty_product(const PhaseSpaceGaussian& g);

/// Energy density obtained by integrating the Wigner density over the
/// ellipse H(p, q) = E. The map (E, theta) -> (p, q) has its Jacobian taken
/// by finite differences, and the angle integral uses the periodic
/// trapezoid rule on `angle_points` nodes.
double energy_density_from_wigner(const PhaseSpaceGaussian& g, double e,
                                  std::size_t angle_points = 2048);

/// Max |energy_density_from_wigner - ws_density| over `grid_points` energies
/// evenly spaced on [0, e_max].
double energy_marginal_consistency(const PhaseSpaceGaussian& g, double e_max = 10.0,
                                   std::size_t grid_points = 101);

}  // namespace zpe
