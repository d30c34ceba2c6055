#pragma once

// Seeded samplers for the discrete-level, exponential (W_s) and phase-space
// distributions, and the random-phase mode-interference experiment.
//
// Reproducibility: every sampler splits its n draws into fixed-size chunks;
// chunk c draws from a generator seeded by (seed, stream_id, c) only, and
// chunks are written back in index order. Output is therefore identical for
// any number of worker threads. Uniforms and normals are built from raw
// 64-bit words (no std:: distributions, whose output is implementation
// defined).

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zpe/phase_space.hpp"

namespace zpe {

struct RngContract {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

/// One independent generator per (seed, stream_id, substream). Not shareable
/// across threads; create one per chain.
class RandomStream {
 public:
  explicit RandomStream(const RngContract& rng, std::uint64_t substream = 0);

  std::uint64_t next_bits() { return engine_(); }
  /// [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// (0, 1], safe for logarithms.
  double uniform_open() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }
  /// Two independent standard normals (Box-Muller).
  std::pair<double, double> normal_pair();

 private:
  std::mt19937_64 engine_;
};

/// Summary of one batch of i.i.d. draws. For n = 1 the variance and standard
/// error are undefined and reported as NaN.
struct SampleBatch {
  std::string label;
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased, n - 1 denominator
  double std_error = 0.0;  // sqrt(variance / n)
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  bool degenerate() const { return n < 2; }
};

SampleBatch summarize(std::string label, std::span<const double> values, const RngContract& rng);

/// Pooled summary of two batches of the same distribution (Chan et al.).
/// Labels and seeds are taken from `a`.
SampleBatch merge_batches(const SampleBatch& a, const SampleBatch& b);

/// Level energies E_n = (2n+1) E0 with n geometric, P(n) = (1-r) r^n,
/// r = e^{-2 E0 beta}, drawn by inverse CDF.
std::vector<double> draw_discrete_levels(double e0, double beta, std::size_t n,
                                         const RngContract& rng);
SampleBatch sample_discrete_levels(double e0, double beta, std::size_t n, const RngContract& rng);

/// Exponential energies with mean u by inverse transform.
std::vector<double> draw_ws(double u, std::size_t n, const RngContract& rng);
SampleBatch sample_ws(double u, std::size_t n, const RngContract& rng);

struct PhaseSpaceDraws {
  std::vector<double> p;
  std::vector<double> q;
  std::vector<double> energy;
};

PhaseSpaceDraws draw_phase_space(const PhaseSpaceGaussian& g, std::size_t n,
                                 const RngContract& rng);
/// Batch over the energies H(p, q) of independent Gaussian (p, q) draws.
SampleBatch sample_phase_space(const PhaseSpaceGaussian& g, std::size_t n, const RngContract& rng);

/// |sum of n_modes unit phasors with independent uniform phases|^2 / n_modes.
std::vector<double> draw_mode_interference(std::size_t n_modes, std::size_t n_samples,
                                           const RngContract& rng);
SampleBatch mode_interference_experiment(std::size_t n_modes, std::size_t n_samples,
                                         const RngContract& rng);

/// Kolmogorov survival function Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} e^{-2 j^2 lambda^2}.
double kolmogorov_survival(double lambda);

/// Asymptotic critical value lambda_alpha with Q(lambda_alpha) = alpha.
double kolmogorov_critical_value(double alpha);

struct KsResult {
  double statistic = 0.0;       // sup |F_n - F|
  double critical_value = 0.0;  // lambda_alpha / sqrt(n)
  double p_value = 0.0;         // asymptotic
  bool passed = false;          // statistic < critical_value
};

/// One-sample KS test of `samples` against the exponential law with `mean`.
KsResult ks_test_exponential(std::span<const double> samples, double mean, double alpha = 0.01);

}  // namespace zpe
