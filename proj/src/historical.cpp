#include "zpe/historical.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdint>
#include <string>

#include "zpe/error.hpp"
#include "zpe/spectrum.hpp"

namespace zpe {

namespace {

constexpr int kMaxBracketExpansions = 200;

// Root of f on [lo, hi] (f(lo), f(hi) of opposite sign) to ~1e-15 relative.
template <class F>
double solve_bracketed(F f, double lo, double hi, const char* what) {
  std::uintmax_t iterations = 200;
  const auto tol = boost::math::tools::eps_tolerance<double>(50);
  const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, tol, iterations);
  if (iterations >= 200) {
    throw NumericError(std::string(what) + ": root finder did not converge in [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return 0.5 * (a + b);
}

}  // namespace

double planck_d2s(double u_t, double e0, double k) {
  if (!(u_t > 0.0)) {
    throw DomainError("d2S/dU_T^2 is singular at u_t = " + std::to_string(u_t));
  }
  detail::require_non_negative(e0, "e0");
  return -k / (u_t * u_t + 2.0 * e0 * u_t);
}

double interpolated_entropy_slope(double u_t, double e0, double k) {
  detail::require_positive(u_t, "u_t");
  detail::require_positive(e0, "e0");
  const double u_ref = kInterpolationAnchor * e0;
  const double anchor = -k / (2.0 * e0) * std::log(u_ref / (2.0 * e0));
  // Integrate in t = ln u, where the integrand u * d2S/dU^2 = -k / (u + 2 E0) is smooth.
  const auto integrand = [&](double t) {
    const double u = std::exp(t);
    return u * planck_d2s(u, e0, k);
  };
  double error = 0.0;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, std::log(u_ref), std::log(u_t), 12, 1e-14, &error);
  return anchor + integral;
}

double reconstruct_planck_from_interpolation(double e0, double beta, double k) {
  detail::require_positive(e0, "e0");
  detail::require_positive(beta, "beta");
  const double target = k * beta;
  // dS/dU_T is decreasing in U_T; search in t = ln U_T.
  const auto f = [&](double t) { return interpolated_entropy_slope(std::exp(t), e0, k) - target; };
  // Both the Wien law and equipartition give a starting point on the right scale.
  double guess = std::log(std::min(1.0 / beta, 2.0 * e0 * std::exp(-2.0 * e0 * beta)));
  if (!std::isfinite(guess)) guess = std::log(e0) - 2.0 * e0 * beta;
  double lo = guess - 1.0;
  double hi = guess + 1.0;
  int expansions = 0;
  while (f(lo) < 0.0) {
    lo -= 2.0 * (hi - lo);
    if (++expansions > kMaxBracketExpansions) {
      throw NumericError("no lower bracket for U_T at beta=" + std::to_string(beta));
    }
  }
  while (f(hi) > 0.0) {
    hi += 2.0 * (hi - lo);
    if (++expansions > kMaxBracketExpansions) {
      throw NumericError("no upper bracket for U_T at beta=" + std::to_string(beta));
    }
  }
  return std::exp(solve_bracketed(f, lo, hi, "reconstruct_planck_from_interpolation"));
}

EinsteinFluctuation einstein_fluctuation(double u_t, double e0) {
  detail::require_non_negative(u_t, "u_t");
  detail::require_non_negative(e0, "e0");
  return {u_t * u_t, 2.0 * e0 * u_t};
}

double crossover_temperature(double e0) {
  detail::require_positive(e0, "e0");
  const auto f = [e0](double beta) { return thermal_mean_energy(e0, beta) - 2.0 * e0; };
  // U_T/E0 runs from 1/(E0 beta) down to 2 e^{-2 E0 beta}, so the crossing
  // lies in E0 beta in [0.1, 1].
  return solve_bracketed(f, 0.1 / e0, 1.0 / e0, "crossover_temperature");
}

InterpolationCurve build_interpolation_curve(double e0, std::span<const double> u_grid) {
  InterpolationCurve curve;
  curve.e0 = e0;
  double previous = 0.0;
  for (double u : u_grid) {
    if (!(u > previous)) throw DomainError("u_grid must be positive and strictly increasing");
    previous = u;
    curve.u_grid.push_back(u);
    curve.d2s_values.push_back(planck_d2s(u, e0));
    curve.beta_of_u.push_back(interpolated_entropy_slope(u, e0));
  }
  return curve;
}

}  // namespace zpe
