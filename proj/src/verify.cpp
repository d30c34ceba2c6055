#include "zpe/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <span>

#include "zpe/discrete_spectrum.hpp"
#include "zpe/historical.hpp"
#include "zpe/hyperbolic.hpp"
#include "zpe/moments.hpp"
#include "zpe/montecarlo.hpp"
#include "zpe/numerics.hpp"
#include "zpe/oracles.hpp"
#include "zpe/phase_space.hpp"
#include "zpe/spectrum.hpp"
#include "zpe/statistical_ensemble.hpp"
#include "zpe/variance_law.hpp"

namespace zpe {

namespace {

constexpr double kE0Set[] = {0.5, 1.0, 2.0};

class Suite {
 public:
  void at_most(const char* module, const char* name, double residual, double tolerance) {
    add(module, name, residual, tolerance, Bound::at_most);
  }
  void at_least(const char* module, const char* name, double residual, double tolerance) {
    add(module, name, residual, tolerance, Bound::at_least);
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  void add(const char* module, const char* name, double residual, double tolerance, Bound bound) {
    const bool ok = bound == Bound::at_most ? residual <= tolerance : residual >= tolerance;
    results_.push_back({module, name, residual, tolerance, bound, ok && std::isfinite(residual)});
  }
  std::vector<CheckResult> results_;
};

// -dU/dbeta through the thermal part, which keeps full relative precision
// where U - E0 is below the resolution of U.
double fd_variance(double e0, double beta) {
  if (e0 == 0.0) {
    return -central_derivative([](double b) { return 1.0 / b; }, beta, default_beta_step(beta));
  }
  return -central_derivative([e0](double b) { return thermal_mean_energy(e0, b); }, beta,
                             default_beta_step(beta));
}

std::vector<VarianceAnsatz> random_ansatz_set(std::uint64_t seed, int count) {
  RandomStream stream(RngContract{seed, 0x5eed}, 0);
  std::vector<VarianceAnsatz> out;
  for (int i = 0; i < count; ++i) {
    const double e0 = 0.1 + 1.9 * stream.uniform();
    const double a2 = 0.5 + 1.5 * stream.uniform();
    // a1 >= -2 a2 e0 keeps e0 the largest root; every fifth triple sits on q = 0.
    const double a1 = i % 5 == 4 ? -2.0 * a2 * e0 : -2.0 * a2 * e0 + (1.0 + 2.0 * a2 * e0) * stream.uniform();
    out.push_back(VarianceAnsatz::with_root(e0, a1, a2));
  }
  return out;
}

double density_entropy(const std::function<double(double)>& f, double upper) {
  return oracle::integrate(
      [&](double e) {
        const double v = f(e);
        return v > 0.0 ? -v * std::log(v) : 0.0;
      },
      0.0, upper, 1e-12);
}

double z_score(double estimate, double expected, double std_error) {
  return std::abs(estimate - expected) / std_error;
}

void spectrum_checks(Suite& suite) {
  const auto grid = make_grid(1e-3, 1e3, 40, true);
  double planck = 0.0, dlnz = 0.0, monotone = 0.0, entropy_consistency = 0.0, cv = 0.0;
  for (double e0 : kE0Set) {
    double previous = INFINITY;
    for (double beta : grid) {
      const double u = planck_mean_energy(e0, beta);
      planck = std::max(planck, relative_difference(
          u, oracle::level_sum_average(e0, beta, [](double e) { return e; })));
      const double slope = -central_derivative(
          [e0](double b) { return log_partition_function(e0, b); }, beta, default_beta_step(beta));
      dlnz = std::max(dlnz, relative_difference(slope, u));
      // U - E0 keeps full precision; it only stops decreasing once it underflows.
      const double u_t = thermal_mean_energy(e0, beta);
      if (!(u_t < previous) && u_t > 0.0) monotone += 1.0;
      if (u < e0) monotone += 1.0;
      previous = u_t;
      const double s = entropy(e0, beta);
      entropy_consistency = std::max(
          entropy_consistency, std::abs(s - (oracle::level_sum_log_partition(e0, beta) + beta * u)));
      cv = std::max(cv, relative_difference(heat_capacity(e0, beta), beta * beta * fd_variance(e0, beta)));
    }
  }
  suite.at_most("spectrum", "planck_law_matches_level_sum", planck, 1e-10);
  suite.at_most("spectrum", "minus_dlnZ_dbeta_equals_U", dlnz, 1e-6);
  suite.at_most("spectrum", "U_decreasing_and_at_least_E0_violations", monotone, 0.0);
  suite.at_most("spectrum", "entropy_equals_lnZ_plus_beta_U", entropy_consistency, 1e-10);
  suite.at_most("spectrum", "heat_capacity_matches_fd", cv, 1e-6);

  double equipartition = 0.0;
  for (double e0 : kE0Set) {
    equipartition = std::max(equipartition, std::abs(planck_mean_energy(e0, 1e-6) * 1e-6 - 1.0));
  }
  suite.at_most("spectrum", "equipartition_limit_beta_1e-6", equipartition, 1e-10);

  double scaling = 0.0;
  for (double omega : {0.5, 1.0, 3.0}) {
    for (double scale : {0.25, 2.0, 10.0}) {
      for (double beta : {0.1, 1.0, 7.0}) {
        scaling = std::max(scaling, wien_scaling_check(OscillatorModel(omega), scale, beta));
      }
    }
  }
  suite.at_most("spectrum", "wien_displacement_scaling", scaling, 1e-12);
}

void variance_law_checks(Suite& suite, std::uint64_t seed) {
  const auto betas = make_grid(0.05, 20.0, 30, true);
  const auto ansatz_set = random_ansatz_set(seed, 20);
  double ode = 0.0, physical = INFINITY, fd = 0.0, dispersion = 0.0;
  for (const auto& ansatz : ansatz_set) {
    const auto reference = oracle::ode_mean_energy(ansatz, betas);
    const double root = ansatz.roots().second;
    for (std::size_t i = 0; i < betas.size(); ++i) {
      const double u = solve_mean_energy(ansatz, betas[i]);
      ode = std::max(ode, relative_difference(u, reference[i]));
      physical = std::min(physical, (u - root) / std::max({1.0, std::abs(u), std::abs(root)}));
      if (betas[i] <= 2.0) {
        const double slope = -central_derivative(
            [&](double b) { return solve_mean_energy(ansatz, b); }, betas[i],
            default_beta_step(betas[i]));
        fd = std::max(fd, relative_difference(slope, variance_from_u(ansatz, u)));
        if (ansatz.q() > 0.0) {
          dispersion = std::max(dispersion, relative_difference(dispersion_vs_beta(ansatz, betas[i]),
                                                                variance_from_u(ansatz, u)));
        }
      }
    }
  }
  suite.at_most("variance_law", "closed_form_matches_ode_20_random_triples", ode, 1e-8);
  suite.at_most("variance_law", "minus_dU_dbeta_equals_sigma2_of_U", fd, 1e-6);
  suite.at_most("variance_law", "dispersion_vs_beta_matches_sigma2_of_U", dispersion, 1e-10);
  suite.at_least("variance_law", "U_at_least_largest_root", physical, -1e-12);

  double parity = 0.0;
  for (double e0 : kE0Set) {
    const auto ansatz = derive_planck_ansatz(e0);
    for (double u : {0.1, 0.7, 1.3, 4.0, 25.0}) {
      parity = std::max(parity, std::abs(variance_from_u(ansatz, -u) - variance_from_u(ansatz, u)));
    }
  }
  suite.at_most("variance_law", "even_parity_when_a1_zero", parity, 0.0);

  const auto wien_betas = make_grid(0.1, 10.0, 25, true);
  double even = 0.0, odd = INFINITY;
  for (double beta : wien_betas) {
    for (double e0 : kE0Set) {
      even = std::max(even, std::abs(wien_consistency_residual(derive_planck_ansatz(e0), e0, beta)));
    }
    odd = std::min(odd, std::abs(wien_consistency_residual(VarianceAnsatz::with_root(1.0, 0.5, 1.0),
                                                           1.0, beta)));
  }
  suite.at_most("variance_law", "wien_residual_vanishes_for_a1_zero", even, 1e-10);
  suite.at_least("variance_law", "wien_residual_nonzero_for_a1_half", odd, 1e-3);

  double anchor = 0.0;
  for (double e0 : kE0Set) {
    anchor = std::max(anchor, std::abs(solve_mean_energy(derive_planck_ansatz(e0), 1e-6) * 1e-6 - 1.0));
  }
  suite.at_most("variance_law", "high_T_anchor_U_beta_to_1", anchor, 1e-4);
}

void discrete_checks(Suite& suite) {
  const auto grid = make_grid(1e-2, 1e2, 25, true);
  double mean = 0.0, second = 0.0, shannon = 0.0, split = 0.0, norm = 0.0;
  for (double e0 : kE0Set) {
    for (double beta : grid) {
      const auto spectrum = DiscreteSpectrum::build(e0, beta);
      const double u = planck_mean_energy(e0, beta);
      mean = std::max(mean, relative_difference(discrete_average(spectrum, [](double e) { return e; }), u));
      second = std::max(second, relative_difference(discrete_average(spectrum, [](double e) { return e * e; }),
                                                    u * u + energy_variance(e0, beta)));
      shannon = std::max(shannon, std::abs(shannon_entropy(spectrum) - entropy(e0, beta)));
      split = std::max(split, relative_difference(spectrum.partition_function(), partition_function(e0, beta)));
      CompensatedSum total;
      for (double w : spectrum.weights()) total.add(w);
      norm = std::max(norm, std::abs(total.value() - 1.0));
    }
  }
  suite.at_most("discrete_spectrum", "level_average_matches_U", mean, 1e-10);
  suite.at_most("discrete_spectrum", "level_average_E2_matches_U2_plus_sigma2", second, 1e-10);
  suite.at_most("discrete_spectrum", "shannon_entropy_matches_S", shannon, 1e-10);
  suite.at_most("discrete_spectrum", "Zg_equals_2E0_Z", split, 1e-12);
  suite.at_most("discrete_spectrum", "weights_sum_to_one", norm, 1e-12);

  double ratio = 0.0;
  for (double e0 : kE0Set) {
    for (double beta : {0.3, 1.0, 3.0}) {
      const auto spectrum = DiscreteSpectrum::build(e0, beta);
      const auto w = spectrum.weights();
      const double expected = std::exp(2.0 * e0 * beta);
      for (std::size_t n = 0; n + 1 < std::min<std::size_t>(w.size(), 30); ++n) {
        ratio = std::max(ratio, relative_difference(w[n] / w[n + 1], expected));
      }
    }
  }
  suite.at_most("discrete_spectrum", "geometric_weight_ratio", ratio, 1e-12);

  const double betas[] = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
  double constancy = 0.0, slope = 0.0;
  for (double e0 : kE0Set) {
    constancy = std::max(constancy, verify_lng_constancy(e0, betas));
    slope = std::max(slope, potential_slope_deviation(e0, betas));
  }
  suite.at_most("discrete_spectrum", "mean_ln_g_constant_in_beta", constancy, 1e-8);
  suite.at_most("discrete_spectrum", "potential_slope_equals_minus_U_over_omega_k", slope, 1e-8);
}

void moment_checks(Suite& suite) {
  double recurrence = 0.0;
  double monotone = 0.0;
  for (double e0 : kE0Set) {
    for (double beta : {0.3, 1.0, 3.0}) {
      for (int r = 1; r <= 6; ++r) {
        recurrence = std::max(recurrence, recurrence_relative_residual(e0, beta, r));
      }
    }
    const auto hot = moment_table(e0, 0.5, 6);
    const auto cold = moment_table(e0, 1.0, 6);
    for (int r = 1; r <= 6; ++r) {
      if (!(hot.values[r] > cold.values[r])) monotone += 1.0;
    }
  }
  suite.at_most("moments", "recurrence_r1_to_6", recurrence, 1e-5);
  suite.at_most("moments", "moments_increase_with_temperature_violations", monotone, 0.0);

  const auto frozen = moment_table(1.0, 50.0, 2);
  suite.at_most("moments", "variance_at_beta_50_below_1e-40",
                frozen.values[2] - frozen.values[1] * frozen.values[1], 1e-40);

  double covariance = 0.0;
  for (double e0 : kE0Set) {
    covariance = std::max(covariance, std::abs(covariance_identity_residual(
                                          e0, 1.0, [](double e) { return std::exp(-e); })));
  }
  suite.at_most("moments", "covariance_identity_exp_minus_E", covariance, 1e-6);
}

void statistical_checks(Suite& suite) {
  const auto grid = make_grid(1e-2, 1e2, 25, true);
  double gamma = 0.0, thermal = 0.0;
  for (double e0 : kE0Set) {
    for (double beta : grid) {
      const auto d = decompose_fluctuations(e0, beta);
      gamma = std::max(gamma, std::abs(d.covariance) / d.var_total);
      thermal = std::max(thermal, relative_difference(d.var_thermal, fd_variance(e0, beta)));
    }
  }
  suite.at_most("statistical_ensemble", "covariance_of_thermal_and_zero_point_vanishes", gamma, 1e-12);
  suite.at_most("statistical_ensemble", "thermal_variance_matches_minus_dU_dbeta", thermal, 1e-6);

  double frozen = 0.0;
  for (double e0 : kE0Set) {
    frozen = std::max(frozen, std::abs(decompose_fluctuations(e0, 100.0).var_total / (e0 * e0) - 1.0));
  }
  suite.at_most("statistical_ensemble", "zero_T_total_variance_is_E0_squared", frozen, 1e-12);

  double moments = 0.0, margin = INFINITY;
  for (double u : {0.5, 1.0, 3.0}) {
    const auto w = [u](double e) { return ws_density(e, u); };
    const double upper = 50.0 * u;
    moments = std::max({moments, std::abs(oracle::integrate(w, 0.0, upper) - 1.0),
                        std::abs(oracle::integrate([&](double e) { return e * w(e); }, 0.0, upper) / u - 1.0),
                        std::abs(oracle::integrate([&](double e) { return e * e * w(e); }, 0.0, upper) /
                                     (2.0 * u * u) - 1.0)});
    const double s_ws = density_entropy(w, upper);
    moments = std::max(moments, std::abs(s_ws - statistical_entropy(u)));
    const double s_uniform = density_entropy([u](double e) { return e <= 2.0 * u ? 0.5 / u : 0.0; }, 2.0 * u);
    const double sigma = u * std::sqrt(std::numbers::pi / 2.0);  // half-normal with mean u
    const double s_half_normal = density_entropy(
        [sigma](double e) {
          return std::sqrt(2.0 / std::numbers::pi) / sigma * std::exp(-e * e / (2.0 * sigma * sigma));
        },
        12.0 * sigma);
    margin = std::min(margin, s_ws - std::max(s_uniform, s_half_normal));
  }
  suite.at_most("statistical_ensemble", "ws_density_moments_and_entropy_by_quadrature", moments, 1e-9);
  suite.at_least("statistical_ensemble", "ws_entropy_exceeds_same_mean_alternatives", margin, 1e-3);
}

void phase_space_checks(Suite& suite) {
  const PhaseSpaceGaussian g(1.0, 2.0, 1.5);
  double factor = 0.0;
  for (double p : {-2.0, -0.3, 0.0, 0.8, 3.0}) {
    for (double q : {-1.0, 0.0, 0.2, 1.4}) {
      const double np = std::exp(-p * p / (2.0 * g.var_p())) / std::sqrt(2.0 * std::numbers::pi * g.var_p());
      const double nq = std::exp(-q * q / (2.0 * g.var_q())) / std::sqrt(2.0 * std::numbers::pi * g.var_q());
      factor = std::max(factor, relative_difference(wigner_density(p, q, g), np * nq));
    }
  }
  suite.at_most("phase_space", "wigner_factorises_into_gaussian_marginals", factor, 1e-12);

  const double sp = 8.0 * std::sqrt(g.var_p());
  const double sq = 8.0 * std::sqrt(g.var_q());
  const double mass = oracle::integrate_2d([&](double p, double q) { return wigner_density(p, q, g); },
                                           -sp, sp, -sq, sq);
  // Mass outside the 8-sigma box is below 2 erfc(8/sqrt 2) ~ 2.5e-15.
  suite.at_most("phase_space", "wigner_normalised_by_2d_quadrature", std::abs(mass - 1.0), 1e-9);

  double bound = INFINITY, monotone = 0.0;
  const OscillatorModel model(2.0);
  double previous = INFINITY;
  for (double beta : make_grid(1e-2, 1e2, 40, true)) {
    const double product = uncertainty_product(model, beta);
    bound = std::min(bound, product - 0.25 * model.hbar() * model.hbar());
    if (!(product < previous) && beta < 15.0) monotone += 1.0;
    previous = product;
  }
  suite.at_least("phase_space", "heisenberg_product_minus_hbar2_over_4", bound, -1e-15);
  suite.at_most("phase_space", "heisenberg_product_decreasing_violations", monotone, 0.0);
  suite.at_most("phase_space", "heisenberg_equality_at_beta_100",
                std::abs(uncertainty_product(model, 100.0) - 0.25), 1e-12);

  const double marginal = std::max(energy_marginal_consistency(PhaseSpaceGaussian(1.0, 1.0, 1.0)),
                                   energy_marginal_consistency(PhaseSpaceGaussian(2.0, 3.0, 0.7)));
  suite.at_most("phase_space", "energy_marginal_equals_ws_density", marginal, 1e-8);
}

void historical_checks(Suite& suite) {
  const auto grid = make_grid(0.1, 10.0, 20, true);
  double fidelity = 0.0, einstein = 0.0, three_way = 0.0;
  for (double e0 : kE0Set) {
    for (double beta : grid) {
      const double u_t = thermal_mean_energy(e0, beta);
      fidelity = std::max(fidelity, relative_difference(reconstruct_planck_from_interpolation(e0, beta), u_t));
      einstein = std::max(einstein, relative_difference(einstein_fluctuation(u_t, e0).total(),
                                                        fd_variance(e0, beta)));
      if (beta <= 3.0) {
        const double from_law = variance_from_u(derive_planck_ansatz(e0), u_t + e0);
        const double from_split = decompose_fluctuations(e0, beta).var_thermal;
        const double from_einstein = einstein_fluctuation(u_t, e0).total();
        three_way = std::max({three_way, relative_difference(from_law, from_split),
                              relative_difference(from_law, from_einstein),
                              relative_difference(from_split, from_einstein)});
      }
    }
  }
  suite.at_most("historical", "interpolation_reconstructs_thermal_law", fidelity, 1e-8);
  suite.at_most("historical", "einstein_fluctuation_matches_minus_dU_dbeta", einstein, 1e-6);
  suite.at_most("historical", "three_way_variance_agreement", three_way, 1e-10);

  double shape = 0.0;
  for (double e0 : kE0Set) {
    const auto u_grid = make_grid(1e-3 * e0, 1e3 * e0, 30, true);
    const auto curve = build_interpolation_curve(e0, u_grid);
    for (std::size_t i = 0; i < u_grid.size(); ++i) {
      if (!(curve.d2s_values[i] < 0.0)) shape += 1.0;
      if (i > 0 && !(curve.beta_of_u[i] < curve.beta_of_u[i - 1])) shape += 1.0;
    }
  }
  suite.at_most("historical", "entropy_concave_and_beta_decreasing_violations", shape, 0.0);

  double crossover = 0.0;
  for (double e0 : kE0Set) {
    const double reference = oracle::bisect(
        [e0](double b) { return 2.0 * e0 / (std::exp(2.0 * e0 * b) - 1.0) - 2.0 * e0; }, 1e-3, 10.0);
    crossover = std::max(crossover, relative_difference(crossover_temperature(e0), reference));
  }
  suite.at_most("historical", "crossover_matches_bisection", crossover, 1e-12);
}

void montecarlo_checks(Suite& suite, const VerifyOptions& options) {
  const std::size_t n = options.samples;
  const RngContract rng{options.seed, 0};
  const double coth1 = detail::coth(1.0);

  {
    const auto batch = sample_discrete_levels(1.0, 1.0, n, rng);
    const double var = energy_variance(1.0, 1.0);
    const double mu4 = oracle::level_sum_average(1.0, 1.0, [&](double e) { return std::pow(e - coth1, 4); });
    suite.at_most("montecarlo", "discrete_levels_mean_z", z_score(batch.mean, coth1, batch.std_error), 4.0);
    suite.at_most("montecarlo", "discrete_levels_variance_z",
                  z_score(batch.variance, var, std::sqrt((mu4 - var * var) / static_cast<double>(n))), 4.0);
  }
  {
    const auto draws = draw_discrete_levels(1.0, 0.2, n, RngContract{options.seed, 1});
    std::vector<double> counts(10, 0.0);
    for (double e : draws) {
      const auto level = static_cast<std::size_t>(std::lround((e - 1.0) / 2.0));
      if (level < counts.size()) counts[level] += 1.0;
    }
    const double r = std::exp(-0.4);
    double worst = 0.0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      const double w = (1.0 - r) * std::pow(r, static_cast<double>(k));
      const double expected = w * static_cast<double>(n);
      worst = std::max(worst, std::abs(counts[k] - expected) / std::sqrt(expected * (1.0 - w)));
    }
    suite.at_most("montecarlo", "level_histogram_first_10_levels_max_z", worst, 4.0);
  }
  {
    const auto batch = sample_ws(coth1, n, RngContract{options.seed, 2});
    const double u2 = coth1 * coth1;
    suite.at_most("montecarlo", "ws_mean_z", z_score(batch.mean, coth1, batch.std_error), 4.0);
    suite.at_most("montecarlo", "ws_variance_z",
                  z_score(batch.variance, u2, u2 * std::sqrt(8.0 / static_cast<double>(n))), 4.0);
  }
  {
    const auto g = PhaseSpaceGaussian::equilibrium(OscillatorModel(2.0), 1.0);
    const auto draws = draw_phase_space(g, n, RngContract{options.seed, 3});
    const auto energy = summarize("energy", draws.energy, rng);
    const auto q = summarize("q", draws.q, rng);
    const double u = g.u();
    suite.at_most("montecarlo", "phase_space_energy_mean_z", z_score(energy.mean, u, energy.std_error), 4.0);
    suite.at_most("montecarlo", "phase_space_energy_variance_z",
                  z_score(energy.variance, u * u, u * u * std::sqrt(8.0 / static_cast<double>(n))), 4.0);
    suite.at_most("montecarlo", "phase_space_var_q_z",
                  z_score(q.variance, g.var_q(), g.var_q() * std::sqrt(2.0 / static_cast<double>(n))), 4.0);
  }
  {
    const auto energies = draw_mode_interference(options.modes, options.interference_samples,
                                                 RngContract{options.seed, 4});
    const auto batch = summarize("mode_interference", energies, rng);
    suite.at_most("montecarlo", "mode_interference_mean_z", z_score(batch.mean, 1.0, batch.std_error), 4.0);
    suite.at_least("montecarlo", "mode_interference_ks_p_value", ks_test_exponential(energies, 1.0).p_value,
                   0.01);
  }
  {
    const std::size_t small = std::min<std::size_t>(n, 100'000);
    const auto a = draw_ws(1.0, small, RngContract{options.seed, 5});
    const auto b = draw_ws(1.0, small, RngContract{options.seed, 5});
    const auto c = draw_ws(1.0, small, RngContract{options.seed, 6});
    double differing = 0.0;
    for (std::size_t i = 0; i < small; ++i) differing += a[i] != b[i] ? 1.0 : 0.0;
    suite.at_most("montecarlo", "same_seed_draws_differing", differing, 0.0);
    const auto sa = summarize("a", a, rng);
    const auto sc = summarize("c", c, rng);
    double cross = 0.0;
    for (std::size_t i = 0; i < small; ++i) cross += (a[i] - sa.mean) * (c[i] - sc.mean);
    const double corr = cross / (static_cast<double>(small - 1) * std::sqrt(sa.variance * sc.variance));
    suite.at_most("montecarlo", "distinct_stream_correlation_times_sqrt_n",
                  std::abs(corr) * std::sqrt(static_cast<double>(small)), 4.0);
  }
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  Suite suite;
  spectrum_checks(suite);
  variance_law_checks(suite, options.seed);
  discrete_checks(suite);
  moment_checks(suite);
  statistical_checks(suite);
  phase_space_checks(suite);
  historical_checks(suite);
  montecarlo_checks(suite, options);
  return suite.take();
}

Table verification_table(const std::vector<CheckResult>& results) {
  Table table{{"module", "invariant", "residual", "bound", "tolerance", "passed"}, {}};
  for (const auto& r : results) {
    table.add_row({r.module, r.invariant, r.residual, std::string(r.bound == Bound::at_most ? "<=" : ">="),
                   r.tolerance, r.passed});
  }
  return table;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace zpe
