#pragma once

// Statistical (beyond-thermodynamic) description: the energy of one member of
// the ensemble is exponentially distributed about U, so its total variance is
// U^2 rather than the thermal -dU/dbeta.

namespace zpe {

/// Variances of the split E = E_T + E_0 (thermal plus zero-point part).
struct FluctuationDecomposition {
  double u_total = 0.0;
  double u_thermal = 0.0;
  double e0 = 0.0;
  double var_total = 0.0;       // U^2
  double var_thermal = 0.0;     // U_T^2 + 2 E0 U_T
  double var_zero_point = 0.0;  // E0^2
  double covariance = 0.0;      // (var_total - var_thermal - var_zero_point) / 2
};

/// W_s(E) = e^{-E/U} / U on E >= 0; zero for negative energies.
double ws_density(double e, double u);

FluctuationDecomposition decompose_fluctuations(double e0, double beta);

/// S_s = k ln U + k, the entropy of W_s.
double statistical_entropy(double u, double k = 1.0);

/// dS_s/dU = k / U.
double statistical_temperature_inverse(double u, double k = 1.0);

}  // namespace zpe
