#include "zpe/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "zpe/discrete_spectrum.hpp"
#include "zpe/numerics.hpp"

namespace zpe {

namespace {

void check_order(int r, int lo, int hi) {
  if (r < lo || r > hi) {
    throw std::out_of_range("moment order " + std::to_string(r) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

double moment_step(double beta) { return 1e-4 * beta; }

// <G> accumulated as G(E_0) + sum w_n (G(E_n) - G(E_0)).
double shifted_average(const DiscreteSpectrum& spectrum, const std::function<double(double)>& g) {
  const double pivot = g(spectrum.levels().front());
  return pivot + discrete_average(spectrum, [&](double e) { return g(e) - pivot; });
}

struct RecurrenceSides {
  double lhs;
  double rhs;
};

RecurrenceSides recurrence_sides(double e0, double beta, int r) {
  check_order(r, 1, kMaxMomentOrder - 1);
  const auto table = moment_table(e0, beta, r + 1);
  const double derivative = central_derivative(
      [&](double b) { return energy_moment(e0, b, r); }, beta, moment_step(beta));
  return {table.values[r + 1], table.values[1] * table.values[r] - derivative};
}

}  // namespace

double energy_moment(double e0, double beta, int r) {
  check_order(r, 0, kMaxMomentOrder);
  const auto spectrum = DiscreteSpectrum::build(e0, beta);
  return discrete_average(spectrum, [r](double e) { return std::pow(e, r); });
}

MomentTable moment_table(double e0, double beta, int max_order) {
  check_order(max_order, 0, kMaxMomentOrder);
  const auto spectrum = DiscreteSpectrum::build(e0, beta);
  MomentTable table{e0, beta, {}, {}};
  for (int r = 0; r <= max_order; ++r) {
    table.orders.push_back(r);
    table.values.push_back(discrete_average(spectrum, [r](double e) { return std::pow(e, r); }));
  }
  return table;
}

double recurrence_residual(double e0, double beta, int r) {
  const auto sides = recurrence_sides(e0, beta, r);
  return sides.lhs - sides.rhs;
}

double recurrence_relative_residual(double e0, double beta, int r) {
  const auto sides = recurrence_sides(e0, beta, r);
  return relative_difference(sides.lhs, sides.rhs);
}

double covariance_identity_residual(double e0, double beta,
                                    const std::function<double(double)>& g) {
  const auto spectrum = DiscreteSpectrum::build(e0, beta);
  const double mean_e = discrete_average(spectrum, [](double e) { return e; });
  const double mean_g = shifted_average(spectrum, g);
  const double covariance =
      discrete_average(spectrum, [&](double e) { return (e - mean_e) * (g(e) - mean_g); });
  const double derivative = central_derivative(
      [&](double b) { return shifted_average(DiscreteSpectrum::build(e0, b), g); }, beta,
      moment_step(beta));
  return -derivative - covariance;
}

}  // namespace zpe
