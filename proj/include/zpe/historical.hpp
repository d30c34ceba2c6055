#pragma once

// Planck's interpolation route to the thermal spectrum and Einstein's
// wave/particle reading of the resulting energy fluctuations.

#include <span>
#include <vector>

namespace zpe {

/// Reference thermal energy (in units of e0) at which dS/dU_T is anchored to
/// the Wien-regime closed form -(k / 2 E0) ln(U_T / 2 E0).
inline constexpr double kInterpolationAnchor = 1e-12;

/// d2S/dU_T^2 = -k / (U_T^2 + 2 E0 U_T). Rejects u_t <= 0.
double planck_d2s(double u_t, double e0, double k = 1.0);

/// dS/dU_T obtained by integrating planck_d2s from the anchor to u_t.
double interpolated_entropy_slope(double u_t, double e0, double k = 1.0);

/// Solves interpolated_entropy_slope(U_T) = k beta (that is, 1/T) for U_T.
/// Throws NumericError if the root cannot be bracketed or does not converge.
double reconstruct_planck_from_interpolation(double e0, double beta, double k = 1.0);

/// Einstein's thermal fluctuation U_T^2 + 2 E0 U_T split into its wave and
/// particle terms.
struct EinsteinFluctuation {
  double wave = 0.0;      // U_T^2
  double particle = 0.0;  // 2 E0 U_T
  double total() const { return wave + particle; }
};

EinsteinFluctuation einstein_fluctuation(double u_t, double e0);

/// beta at which the wave and particle terms are equal (U_T = 2 E0), found by
/// root-finding on the thermal mean energy. Smaller beta is wave-dominated.
double crossover_temperature(double e0);

struct InterpolationCurve {
  double e0 = 0.0;
  std::vector<double> u_grid;
  std::vector<double> d2s_values;
  std::vector<double> beta_of_u;
};

/// Entropy curvature and reconstructed inverse temperature along `u_grid`
/// (which must be strictly increasing and positive). k = 1.
InterpolationCurve build_interpolation_curve(double e0, std::span<const double> u_grid);

}  // namespace zpe
