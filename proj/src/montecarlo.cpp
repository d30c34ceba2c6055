#include "zpe/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "zpe/error.hpp"
#include "zpe/numerics.hpp"

namespace zpe {

namespace {

constexpr std::size_t kChunkSize = std::size_t{1} << 16;

std::uint32_t low_word(std::uint64_t v) { return static_cast<std::uint32_t>(v); }
std::uint32_t high_word(std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); }

void require_count(std::size_t n) {
  if (n == 0) throw DomainError("sample count must be >= 1");
}

// Fills out[0..n) chunk by chunk; fill(stream, first, last) writes one chunk.
template <class Fill>
void fill_chunked(std::size_t n, const RngContract& rng, Fill fill) {
  const std::size_t chunks = (n + kChunkSize - 1) / kChunkSize;
  const auto work = [&](std::size_t worker, std::size_t workers) {
    for (std::size_t c = worker; c < chunks; c += workers) {
      RandomStream stream(rng, c);
      fill(stream, c * kChunkSize, std::min(n, (c + 1) * kChunkSize));
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(chunks, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    work(0, 1);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w, workers);
  work(0, workers);
}

}  // namespace

RandomStream::RandomStream(const RngContract& rng, std::uint64_t substream) {
  std::seed_seq seq{low_word(rng.seed),      high_word(rng.seed),     low_word(rng.stream_id),
                    high_word(rng.stream_id), low_word(substream),     high_word(substream)};
  engine_.seed(seq);
}

std::pair<double, double> RandomStream::normal_pair() {
  const double radius = std::sqrt(-2.0 * std::log(uniform_open()));
  const double angle = 2.0 * std::numbers::pi * uniform();
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

SampleBatch summarize(std::string label, std::span<const double> values, const RngContract& rng) {
  require_count(values.size());
  SampleBatch batch;
  batch.label = std::move(label);
  batch.n = values.size();
  batch.seed = rng.seed;
  batch.stream_id = rng.stream_id;
  CompensatedSum sum;
  for (double v : values) sum.add(v);
  batch.mean = sum.value() / static_cast<double>(batch.n);
  if (batch.degenerate()) {
    batch.variance = std::numeric_limits<double>::quiet_NaN();
    batch.std_error = std::numeric_limits<double>::quiet_NaN();
    return batch;
  }
  CompensatedSum squares;
  for (double v : values) squares.add((v - batch.mean) * (v - batch.mean));
  batch.variance = squares.value() / static_cast<double>(batch.n - 1);
  batch.std_error = std::sqrt(batch.variance / static_cast<double>(batch.n));
  return batch;
}

SampleBatch merge_batches(const SampleBatch& a, const SampleBatch& b) {
  SampleBatch out = a;
  const auto na = static_cast<double>(a.n);
  const auto nb = static_cast<double>(b.n);
  const double n = na + nb;
  const double delta = b.mean - a.mean;
  const double m2a = a.degenerate() ? 0.0 : a.variance * (na - 1.0);
  const double m2b = b.degenerate() ? 0.0 : b.variance * (nb - 1.0);
  out.n = a.n + b.n;
  out.mean = a.mean + delta * nb / n;
  out.variance = (m2a + m2b + delta * delta * na * nb / n) / (n - 1.0);
  out.std_error = std::sqrt(out.variance / n);
  return out;
}

std::vector<double> draw_discrete_levels(double e0, double beta, std::size_t n,
                                         const RngContract& rng) {
  detail::require_positive(e0, "e0");
  detail::require_positive(beta, "beta");
  require_count(n);
  const double log_ratio = -2.0 * e0 * beta;  // ln r
  std::vector<double> out(n);
  fill_chunked(n, rng, [&](RandomStream& stream, std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) {
      // P(level >= m) = r^m  <=>  level = floor(ln u / ln r), u in (0, 1].
      const double level = std::floor(std::log(stream.uniform_open()) / log_ratio);
      out[i] = (2.0 * level + 1.0) * e0;
    }
  });
  return out;
}

SampleBatch sample_discrete_levels(double e0, double beta, std::size_t n, const RngContract& rng) {
  return summarize("discrete_levels", draw_discrete_levels(e0, beta, n, rng), rng);
}

std::vector<double> draw_ws(double u, std::size_t n, const RngContract& rng) {
  detail::require_positive(u, "u");
  require_count(n);
  std::vector<double> out(n);
  fill_chunked(n, rng, [&](RandomStream& stream, std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) out[i] = -u * std::log(stream.uniform_open());
  });
  return out;
}

SampleBatch sample_ws(double u, std::size_t n, const RngContract& rng) {
  return summarize("ws_exponential", draw_ws(u, n, rng), rng);
}

PhaseSpaceDraws draw_phase_space(const PhaseSpaceGaussian& g, std::size_t n,
                                 const RngContract& rng) {
  require_count(n);
  PhaseSpaceDraws draws{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
  const double sd_p = std::sqrt(g.var_p());
  const double sd_q = std::sqrt(g.var_q());
  fill_chunked(n, rng, [&](RandomStream& stream, std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) {
      const auto [zp, zq] = stream.normal_pair();
      draws.p[i] = sd_p * zp;
      draws.q[i] = sd_q * zq;
      draws.energy[i] = g.energy(draws.p[i], draws.q[i]);
    }
  });
  return draws;
}

SampleBatch sample_phase_space(const PhaseSpaceGaussian& g, std::size_t n, const RngContract& rng) {
  return summarize("phase_space_energy", draw_phase_space(g, n, rng).energy, rng);
}

std::vector<double> draw_mode_interference(std::size_t n_modes, std::size_t n_samples,
                                           const RngContract& rng) {
  if (n_modes < 2) throw DomainError("mode interference needs n_modes >= 2");
  require_count(n_samples);
  std::vector<double> out(n_samples);
  fill_chunked(n_samples, rng, [&](RandomStream& stream, std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) {
      double re = 0.0;
      double im = 0.0;
      for (std::size_t m = 0; m < n_modes;) {
        // (x, y) uniform in the unit disc; the doubled angle of (x, y) is a
        // uniform phase, and its cosine and sine are rational in x and y.
        const std::uint64_t bits = stream.next_bits();
        const double x = static_cast<double>(low_word(bits)) * 0x1.0p-31 - 1.0;
        const double y = static_cast<double>(high_word(bits)) * 0x1.0p-31 - 1.0;
        const double r2 = x * x + y * y;
        if (r2 > 1.0 || r2 == 0.0) continue;
        re += (x * x - y * y) / r2;
        im += 2.0 * x * y / r2;
        ++m;
      }
      out[i] = (re * re + im * im) / static_cast<double>(n_modes);
    }
  });
  return out;
}

SampleBatch mode_interference_experiment(std::size_t n_modes, std::size_t n_samples,
                                         const RngContract& rng) {
  return summarize("mode_interference", draw_mode_interference(n_modes, n_samples, rng), rng);
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 1.0) {
    // 1 - Q = sqrt(2 pi) / lambda * sum_{j>=1} e^{-(2j-1)^2 pi^2 / (8 lambda^2)}
    double acc = 0.0;
    for (int j = 1; j <= 50; ++j) {
      const double odd = 2.0 * j - 1.0;
      const double term =
          std::exp(-odd * odd * std::numbers::pi * std::numbers::pi / (8.0 * lambda * lambda));
      acc += term;
      if (term < 1e-18 * acc) break;
    }
    return std::clamp(1.0 - std::sqrt(2.0 * std::numbers::pi) / lambda * acc, 0.0, 1.0);
  }
  double acc = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    acc += (j % 2 == 1 ? term : -term);
    if (term < 1e-18) break;
  }
  return std::clamp(2.0 * acc, 0.0, 1.0);
}

double kolmogorov_critical_value(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  double lo = 0.0;
  double hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (kolmogorov_survival(mid) > alpha ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

KsResult ks_test_exponential(std::span<const double> samples, double mean, double alpha) {
  require_count(samples.size());
  detail::require_positive(mean, "mean");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double cdf = sorted[i] > 0.0 ? -std::expm1(-sorted[i] / mean) : 0.0;
    d = std::max({d, static_cast<double>(i + 1) / n - cdf, cdf - static_cast<double>(i) / n});
  }
  KsResult result;
  result.statistic = d;
  result.critical_value = kolmogorov_critical_value(alpha) / std::sqrt(n);
  result.p_value = kolmogorov_survival(std::sqrt(n) * d);
  result.passed = d < result.critical_value;
  return result;
}

}  // namespace zpe
