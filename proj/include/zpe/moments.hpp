#pragma once

// Energy moments <E^r> over the discrete spectrum and the derivative
// identities they satisfy:
//   <E^{r+1}> = <E><E^r> - d<E^r>/dbeta
//   -d<G>/dbeta = <E G> - <E><G>
// Derivatives are Richardson-extrapolated central differences with
// h = 1e-4 beta.

#include <functional>
#include <vector>

namespace zpe {

inline constexpr int kMaxMomentOrder = 12;

struct MomentTable {
  double e0 = 0.0;
  double beta = 0.0;
  std::vector<int> orders;
  std::vector<double> values;
};

/// sum_n w_n E_n^r. Throws std::out_of_range for r outside [0, 12].
double energy_moment(double e0, double beta, int r);

/// <E^0> .. <E^max_order> from one spectrum build.
MomentTable moment_table(double e0, double beta, int max_order);

/// <E^{r+1}> - (<E><E^r> - d<E^r>/dbeta), r in [1, 11].
double recurrence_residual(double e0, double beta, int r);

/// recurrence_residual divided by the larger magnitude of its two sides.
double recurrence_relative_residual(double e0, double beta, int r);

/// [-d<G>/dbeta] - [<E G> - <E><G>]. Averages are taken about G(E_0), so a
/// constant g gives exactly 0.
double covariance_identity_residual(double e0, double beta,
                                    const std::function<double(double)>& g);

}  // namespace zpe
