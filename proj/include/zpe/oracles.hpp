#pragma once

// Independent reference computations used by the verification suite and the
// tests. Nothing here calls the closed forms it is meant to check.

#include <functional>
#include <span>
#include <vector>

#include "zpe/variance_law.hpp"

namespace zpe::oracle {

/// Sum of e^{-beta E_n} over E_n = (2n+1) E0, stopped once a term drops below
/// cutoff times the running sum. Returned as a log to survive large beta.
double level_sum_log_partition(double e0, double beta, double cutoff = 1e-17);

/// sum f(E_n) e^{-beta E_n} / sum e^{-beta E_n}, same truncation rule.
double level_sum_average(double e0, double beta, const std::function<double(double)>& f,
                         double cutoff = 1e-17);

/// Normalised level weights, same truncation rule.
std::vector<double> level_sum_weights(double e0, double beta, double cutoff = 1e-17);

/// -sum w ln w.
double shannon_entropy(std::span<const double> weights);

/// Integrates dU/dbeta = -(a0 + a1 U + a2 U^2) with an adaptive Dormand-Prince
/// 5(4) pair from beta0 = 1e-6, U(beta0) = 1/(a2 beta0) - a1/(2 a2), and
/// reports U at each requested beta (ascending, all > beta0).
std::vector<double> ode_mean_energy(const VarianceAnsatz& ansatz, std::span<const double> betas,
                                    double rel_tol = 1e-10, double abs_tol = 1e-12);

/// Adaptive Gauss-Kronrod on [a, b] (b may be +infinity).
double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-12);

/// Nested adaptive Gauss-Kronrod over the rectangle [ax, bx] x [ay, by].
double integrate_2d(const std::function<double(double, double)>& f, double ax, double bx,
                    double ay, double by, double tol = 1e-11);

/// Plain bisection for a sign change of f on [lo, hi].
double bisect(const std::function<double(double)>& f, double lo, double hi, double rel_tol = 1e-15);

}  // namespace zpe::oracle
