#include "zpe/cli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "zpe/discrete_spectrum.hpp"
#include "zpe/error.hpp"
#include "zpe/historical.hpp"
#include "zpe/moments.hpp"
#include "zpe/montecarlo.hpp"
#include "zpe/numerics.hpp"
#include "zpe/phase_space.hpp"
#include "zpe/spectrum.hpp"
#include "zpe/statistical_ensemble.hpp"
#include "zpe/variance_law.hpp"
#include "zpe/verify.hpp"
#include "zpe/version.hpp"

namespace zpe::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> table{
      {"spectrum", Command::spectrum},   {"variance", Command::variance},
      {"discrete", Command::discrete},   {"moments", Command::moments},
      {"statistical", Command::statistical}, {"wigner", Command::wigner},
      {"historical", Command::historical}, {"mc", Command::mc},
      {"verify", Command::verify}};
  return table;
}

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

VarianceAnsatz ansatz_of(const RunConfig& c) {
  if (!c.a0 && !c.a1 && !c.a2) return derive_planck_ansatz(c.e0);
  return VarianceAnsatz(c.a0.value_or(0.0), c.a1.value_or(0.0), c.a2.value_or(1.0));
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

// Seeds above 2^63 would wrap as int64; keep those as text.
Cell seed_cell(std::uint64_t seed) {
  if (seed <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    return static_cast<std::int64_t>(seed);
  }
  return std::to_string(seed);
}

std::size_t interference_samples(std::size_t samples) { return std::max<std::size_t>(2, samples / 10); }

Table spectrum_table(const RunConfig& c) {
  Table t{{"beta", "U", "U_T", "sigma2", "C_V", "S", "Z"}, {}};
  for (double beta : c.beta_grid.values()) {
    const auto p = thermo_point(c.e0, beta, c.k);
    const double u_t = c.e0 > 0.0 ? thermal_mean_energy(c.e0, beta) : p.u;
    t.add_row({beta, p.u, u_t, p.sigma2, p.cv, p.s, p.z});
  }
  return t;
}

Table variance_table(const RunConfig& c) {
  const auto ansatz = ansatz_of(c);
  const auto law = equilibrium_law(ansatz);
  Table t{{"beta", "U", "sigma2_of_U", "dispersion_vs_beta", "wien_residual"}, {}};
  for (double beta : c.beta_grid.values()) {
    const double u = solve_mean_energy(ansatz, beta);
    const double residual =
        ansatz.q() > 0.0 && law.e0 > 0.0 ? wien_consistency_residual(ansatz, law.e0, beta) : kNaN;
    t.add_row({beta, u, variance_from_u(ansatz, u), dispersion_vs_beta(ansatz, beta), residual});
  }
  return t;
}

Table discrete_table(const RunConfig& c) {
  Table t{{"beta", "n_max", "Z", "U_levels", "U", "mean_occupation", "shannon_entropy", "S"}, {}};
  for (double beta : c.beta_grid.values()) {
    const auto spectrum = DiscreteSpectrum::build(c.e0, beta);
    t.add_row({beta, as_int(spectrum.n_max()), spectrum.dimensionless_partition(),
               discrete_average(spectrum, [](double e) { return e; }), planck_mean_energy(c.e0, beta),
               mean_occupation(c.e0, beta), shannon_entropy(spectrum), entropy(c.e0, beta)});
  }
  return t;
}

Table moments_table(const RunConfig& c) {
  Table t{{"beta", "r", "moment", "recurrence_relative_residual"}, {}};
  for (double beta : c.beta_grid.values()) {
    const auto table = moment_table(c.e0, beta, c.max_order);
    for (std::size_t i = 0; i < table.orders.size(); ++i) {
      const int r = table.orders[i];
      const double residual =
          r >= 1 && r < kMaxMomentOrder ? recurrence_relative_residual(c.e0, beta, r) : kNaN;
      t.add_row({beta, std::int64_t{r}, table.values[i], residual});
    }
  }
  return t;
}

Table statistical_table(const RunConfig& c) {
  Table t{{"beta", "u_total", "u_thermal", "var_total", "var_thermal", "var_zero_point", "covariance",
           "S_thermal", "S_statistical", "dSs_dU"},
          {}};
  for (double beta : c.beta_grid.values()) {
    const auto d = decompose_fluctuations(c.e0, beta);
    const double s = c.e0 > 0.0 ? entropy(c.e0, beta, c.k) : kNaN;
    t.add_row({beta, d.u_total, d.u_thermal, d.var_total, d.var_thermal, d.var_zero_point, d.covariance,
               s, statistical_entropy(d.u_total, c.k), statistical_temperature_inverse(d.u_total, c.k)});
  }
  return t;
}

Table wigner_table(const RunConfig& c) {
  const OscillatorModel model(c.omega, c.hbar, c.k, c.mass);
  Table t{{"beta", "U", "var_p", "var_q", "uncertainty_product", "heisenberg_margin",
           "energy_marginal_residual"},
          {}};
  for (double beta : c.beta_grid.values()) {
    const auto g = PhaseSpaceGaussian::equilibrium(model, beta);
    const double product = uncertainty_product(g);
    t.add_row({beta, g.u(), g.var_p(), g.var_q(), product, product - 0.25 * c.hbar * c.hbar,
               energy_marginal_consistency(g, 10.0 * g.u())});
  }
  return t;
}

Table historical_table(const RunConfig& c) {
  Table t{{"beta", "U_T", "U_T_interpolation", "relative_error", "U_wien", "wave_term", "particle_term",
           "d2S_dU2", "regime"},
          {}};
  const double crossover = crossover_temperature(c.e0);
  for (double beta : c.beta_grid.values()) {
    const double u_t = thermal_mean_energy(c.e0, beta);
    const double rebuilt = reconstruct_planck_from_interpolation(c.e0, beta, c.k);
    const auto fluct = einstein_fluctuation(u_t, c.e0);
    t.add_row({beta, u_t, rebuilt, relative_difference(rebuilt, u_t), wien_approximation(c.e0, beta),
               fluct.wave, fluct.particle, planck_d2s(u_t, c.e0, c.k),
               std::string(beta < crossover ? "wave" : "particle")});
  }
  return t;
}

Table mc_table(const RunConfig& c) {
  Table t{{"label", "beta", "n", "mean", "variance", "std_error", "expected_mean", "expected_variance",
           "mean_z", "seed", "stream_id"},
          {}};
  const OscillatorModel model(c.omega, c.hbar, c.k, c.mass);
  const auto add = [&](const SampleBatch& b, double beta, double mean, double variance) {
    t.add_row({b.label, beta, as_int(b.n), b.mean, b.variance, b.std_error, mean, variance,
               std::abs(b.mean - mean) / b.std_error, seed_cell(b.seed),
               static_cast<std::int64_t>(b.stream_id)});
  };
  std::uint64_t stream = 0;
  for (double beta : c.beta_grid.values()) {
    const double u = planck_mean_energy(c.e0, beta);
    add(sample_discrete_levels(c.e0, beta, c.samples, {c.seed, stream++}), beta, u,
        energy_variance(c.e0, beta));
    add(sample_ws(u, c.samples, {c.seed, stream++}), beta, u, u * u);
    const auto g = PhaseSpaceGaussian::equilibrium(model, beta);
    add(sample_phase_space(g, c.samples, {c.seed, stream++}), beta, g.u(), g.u() * g.u());
  }
  // each interference sample sums `modes` phasors, so it runs at a tenth of the count
  const double modes = static_cast<double>(c.modes);
  add(mode_interference_experiment(c.modes, interference_samples(c.samples), {c.seed, stream}), kNaN,
      1.0, 1.0 - 1.0 / modes);
  return t;
}

}  // namespace

std::vector<double> BetaGrid::values() const { return make_grid(min, max, count, logarithmic); }

std::string command_name(Command command) {
  for (const auto& [name, value] : command_table()) {
    if (value == command) return name;
  }
  return "unknown";
}

void validate(const RunConfig& c) {
  const auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) throw UsageError(std::string(name) + " must be > 0");
  };
  positive(c.beta_grid.min, "--beta-min");
  positive(c.beta_grid.max, "--beta-max");
  if (c.beta_grid.max < c.beta_grid.min) throw UsageError("--beta-max must be >= --beta-min");
  if (c.beta_grid.count < 1) throw UsageError("--beta-count must be >= 1");
  if (!(c.e0 >= 0.0)) throw UsageError("--e0 must be >= 0");
  positive(c.omega, "--omega");
  positive(c.hbar, "--hbar");
  positive(c.k, "--k");
  positive(c.mass, "--mass");
  if (c.samples < 1) throw UsageError("--samples must be >= 1");
  if (c.modes < 2) throw UsageError("--modes must be >= 2");
  if (c.max_order < 0 || c.max_order > kMaxMomentOrder) throw UsageError("--max-order must lie in [0, 12]");
  const bool needs_zero_point = c.command == Command::discrete || c.command == Command::moments ||
                                c.command == Command::historical || c.command == Command::mc;
  if (needs_zero_point && c.e0 == 0.0) {
    throw UsageError(command_name(c.command) + " requires --e0 > 0");
  }
}

Table build_table(const RunConfig& c, bool& passed) {
  passed = true;
  switch (c.command) {
    case Command::spectrum: return spectrum_table(c);
    case Command::variance: return variance_table(c);
    case Command::discrete: return discrete_table(c);
    case Command::moments: return moments_table(c);
    case Command::statistical: return statistical_table(c);
    case Command::wigner: return wigner_table(c);
    case Command::historical: return historical_table(c);
    case Command::mc: return mc_table(c);
    case Command::verify: {
      VerifyOptions options;
      options.seed = c.seed;
      options.samples = c.samples;
      options.interference_samples = interference_samples(c.samples);
      options.modes = c.modes;
      const auto results = run_verification(options);
      passed = all_passed(results);
      return verification_table(results);
    }
  }
  throw UsageError("unknown command");
}

nlohmann::ordered_json config_echo(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = command_name(c.command);
  j["e0"] = c.e0;
  j["omega"] = c.omega;
  j["hbar"] = c.hbar;
  j["k"] = c.k;
  j["mass"] = c.mass;
  j["beta_min"] = c.beta_grid.min;
  j["beta_max"] = c.beta_grid.max;
  j["beta_count"] = c.beta_grid.count;
  j["beta_log"] = c.beta_grid.logarithmic;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["modes"] = c.modes;
  j["max_order"] = c.max_order;
  j["a0"] = c.a0 ? nlohmann::ordered_json(*c.a0) : nlohmann::ordered_json(nullptr);
  j["a1"] = c.a1 ? nlohmann::ordered_json(*c.a1) : nlohmann::ordered_json(nullptr);
  j["a2"] = c.a2 ? nlohmann::ordered_json(*c.a2) : nlohmann::ordered_json(nullptr);
  j["format"] = c.format == OutputFormat::csv ? "csv" : "json";
  j["out"] = c.output_path;
  return j;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    bool passed = true;
    const auto table = build_table(config, passed);
    nlohmann::ordered_json meta;
    meta["version"] = kVersion;
    meta["seed"] = config.seed;
    meta["config"] = config_echo(config);
    emit_report(table, config.format, config.output_path, meta, out);
    if (!passed) {
      err << "verification failed\n";
      return kExitVerificationFailed;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n' << "parameters: " << config_echo(config).dump() << '\n';
    return kExitNumeric;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thermodynamics of the harmonic oscillator with zero-point energy", "zpe"};
  RunConfig config;
  std::string command;
  std::string format = "csv";
  std::optional<double> e0;
  std::optional<double> omega;
  std::optional<double> beta;
  std::optional<double> a0, a1, a2;

  std::vector<std::string> names;
  for (const auto& [name, value] : command_table()) names.push_back(name);
  app.add_option("command", command, "spectrum|variance|discrete|moments|statistical|wigner|historical|mc|verify")
      ->required()
      ->check(CLI::IsMember(names));
  app.add_option("--e0", e0, "zero-point energy (default hbar*omega/2, or 1)");
  app.add_option("--omega", omega, "angular frequency (default 2*e0/hbar)");
  app.add_option("--hbar", config.hbar, "action constant");
  app.add_option("--k", config.k, "Boltzmann constant");
  app.add_option("--mass", config.mass, "oscillator mass");
  app.add_option("--beta-min", config.beta_grid.min, "smallest inverse temperature");
  app.add_option("--beta-max", config.beta_grid.max, "largest inverse temperature");
  app.add_option("--beta-count", config.beta_grid.count, "number of grid points");
  app.add_flag("--beta-log,!--beta-linear", config.beta_grid.logarithmic, "logarithmic (default) or linear grid");
  app.add_option("--beta", beta, "single inverse temperature (overrides the grid)");
  app.add_option("--seed", config.seed, "64-bit seed")->envname("ZPE_SEED");
  app.add_option("--samples", config.samples, "Monte Carlo sample count");
  app.add_option("--modes", config.modes, "modes in the interference experiment");
  app.add_option("--max-order", config.max_order, "highest moment order for `moments`");
  app.add_option("--a0", a0, "variance ansatz a0 (variance command)");
  app.add_option("--a1", a1, "variance ansatz a1 (variance command)");
  app.add_option("--a2", a2, "variance ansatz a2 (variance command)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", config.output_path, "output file, - for standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  config.command = command_table().at(command);
  config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  config.a0 = a0;
  config.a1 = a1;
  config.a2 = a2;
  if (beta) {
    config.beta_grid.min = *beta;
    config.beta_grid.max = *beta;
    config.beta_grid.count = 1;
  }
  if (e0 && omega) {
    if (std::abs(*e0 - 0.5 * config.hbar * *omega) > 1e-12 * std::max(1.0, *e0)) {
      err << "usage error: --e0 must equal hbar*omega/2 when both are given\n";
      return kExitUsage;
    }
    config.e0 = *e0;
    config.omega = *omega;
  } else if (omega) {
    config.omega = *omega;
    config.e0 = 0.5 * config.hbar * *omega;
  } else {
    config.e0 = e0.value_or(1.0);
    if (config.e0 > 0.0) config.omega = 2.0 * config.e0 / config.hbar;
  }
  return run(config, out, err);
}

}  // namespace zpe::cli
