#pragma once

// Closed-form equilibrium thermodynamics of a single harmonic oscillator with
// zero-point energy E0 = hbar*omega/2. Units: beta is the inverse temperature
// with Boltzmann's constant absorbed (beta = 1/(kT)); k only scales entropies
// and heat capacities.

namespace zpe {

/// Fixed parameters of one oscillator species. All fields strictly positive.
class OscillatorModel {
 public:
  explicit OscillatorModel(double omega, double hbar = 1.0, double k = 1.0, double mass = 1.0);

  double omega() const { return omega_; }
  double hbar() const { return hbar_; }
  double k() const { return k_; }
  double mass() const { return mass_; }

 private:
  double omega_;
  double hbar_;
  double k_;
  double mass_;
};

/// One equilibrium state at inverse temperature beta.
struct ThermoPoint {
  double beta = 0.0;
  double u = 0.0;       // mean energy
  double sigma2 = 0.0;  // energy variance
  double cv = 0.0;      // heat capacity
  double s = 0.0;       // entropy, S(T=0) = 0
  double z = 0.0;       // partition function Z_g
};

/// hbar*omega/2.
double zero_point_energy(const OscillatorModel& model);

/// U = E0 coth(E0 beta); the e0 = 0 branch is equipartition 1/beta.
double planck_mean_energy(double e0, double beta);

/// U_T = 2 E0 / (e^{2 E0 beta} - 1), the mean energy without the zero-point term.
double thermal_mean_energy(double e0, double beta);

/// 2 E0 e^{-2 E0 beta}, the low-temperature exponential law.
double wien_approximation(double e0, double beta);

/// (U_T - U_wien) / U_T, which is exactly e^{-2 E0 beta}.
double wien_relative_error(double e0, double beta);

/// Z_g = E0 / sinh(E0 beta), or 1/beta when e0 = 0. Underflows to 0 for
/// E0 beta beyond ~710; use log_partition_function there.
double partition_function(double e0, double beta);

/// ln Z_g evaluated without forming sinh.
double log_partition_function(double e0, double beta);

/// S = k [ -ln(2 sinh E0 beta) + E0 beta coth(E0 beta) ]. Requires e0 > 0.
double entropy(double e0, double beta, double k = 1.0);

/// sigma_E^2 = U^2 - E0^2 = E0^2 csch^2(E0 beta); 1/beta^2 when e0 = 0.
double energy_variance(double e0, double beta);

/// C_V = k beta^2 sigma_E^2.
double heat_capacity(double e0, double beta, double k = 1.0);

/// |U(s omega, s T)/(s omega) - U(omega, T)/omega| for the Planck law with
/// E0 = hbar omega / 2. Zero when U has the form omega f(omega/T).
double wien_scaling_check(const OscillatorModel& model, double scale, double beta);

/// All spectrum quantities at one beta. For e0 = 0 the entropy has no
/// S(T=0) = 0 normalisation and `s` is NaN.
ThermoPoint thermo_point(double e0, double beta, double k = 1.0);

}  // namespace zpe
