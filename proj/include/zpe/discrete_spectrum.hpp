#pragma once

// Discrete-level realisation of the equilibrium distribution: levels
// E_n = (2n+1) E0 with geometric weights w_n proportional to e^{-beta E_n}.
// The delta-comb state density is only ever used through these level sums.

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zpe/error.hpp"
#include "zpe/numerics.hpp"

namespace zpe {

inline constexpr double kDefaultTailTolerance = 1e-15;
inline constexpr std::size_t kMaxLevelIndex = 10'000'000;

/// Immutable truncated spectrum at one inverse temperature.
class DiscreteSpectrum {
 public:
  /// Keeps levels 0..n_max with the geometric tail r^{n_max+1} < tail_tol,
  /// r = e^{-2 E0 beta}. Throws ResourceError when that needs n_max > 1e7
  /// (E0 beta below ~2e-6); use the classical branch there.
  static DiscreteSpectrum build(double e0, double beta, double tail_tol = kDefaultTailTolerance);

  double e0() const { return e0_; }
  double beta() const { return beta_; }
  std::size_t n_max() const { return levels_.size() - 1; }
  std::span<const double> levels() const { return levels_; }
  /// Normalised over the retained levels.
  std::span<const double> weights() const { return weights_; }
  /// Truncated sum Z of e^{-beta E_n}; approximates 1/(2 sinh E0 beta).
  double dimensionless_partition() const { return std::exp(log_z_); }
  double log_dimensionless_partition() const { return log_z_; }
  /// Z_g = 2 E0 Z.
  double partition_function() const { return 2.0 * e0_ * dimensionless_partition(); }
  double log_partition_function() const { return std::log(2.0 * e0_) + log_z_; }

 private:
  DiscreteSpectrum(double e0, double beta, std::vector<double> levels, std::vector<double> weights,
                   double log_z)
      : e0_(e0),
        beta_(beta),
        levels_(std::move(levels)),
        weights_(std::move(weights)),
        log_z_(log_z) {}

  double e0_;
  double beta_;
  std::vector<double> levels_;
  std::vector<double> weights_;
  double log_z_;
};

/// sum_n w_n f(E_n). A non-finite f(E_n) raises NumericError naming the level.
template <class F>
double discrete_average(const DiscreteSpectrum& spectrum, F&& f) {
  CompensatedSum acc;
  const auto levels = spectrum.levels();
  const auto weights = spectrum.weights();
  for (std::size_t n = 0; n < levels.size(); ++n) {
    const double value = f(levels[n]);
    if (!std::isfinite(value)) {
      throw NumericError("non-finite function value at level n=" + std::to_string(n) +
                         " (E_n=" + std::to_string(levels[n]) + ")");
    }
    acc.add(weights[n] * value);
  }
  return acc.value();
}

/// -sum_n w_n ln w_n over the retained levels.
double shannon_entropy(const DiscreteSpectrum& spectrum);

/// nbar = 1 / (e^{2 E0 beta} - 1); 2 E0 nbar is the thermal mean energy.
double mean_occupation(double e0, double beta);

/// Mean of ln g implied at one beta by S = k ln Z_g - k mean(ln g) + beta U,
/// with Z_g from the level sum and U = -omega k dphi/dz taken by finite
/// differences of ln Z_g (phi = ln Z_g up to the constant). Units k = hbar = 1.
double implied_log_g_mean(double e0, double beta);

/// Spread (max - min) of implied_log_g_mean over `betas`: the mean of ln g is
/// beta-independent, so this is ~0. Requires a non-empty list.
double verify_lng_constancy(double e0, std::span<const double> betas);

/// Largest relative deviation of dphi/dz (finite difference of ln Z_g from the
/// level sum) from -U/(omega k) over `betas`. Units k = hbar = 1, omega = 2 E0.
double potential_slope_deviation(double e0, std::span<const double> betas);

}  // namespace zpe
