#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zpe/report.hpp"

namespace zpe::cli {

enum class Command { spectrum, variance, discrete, moments, statistical, wigner, historical, mc, verify };

struct BetaGrid {
  double min = 0.01;
  double max = 100.0;
  std::size_t count = 50;
  bool logarithmic = true;

  std::vector<double> values() const;
};

struct RunConfig {
  Command command = Command::spectrum;
  double e0 = 1.0;
  double omega = 2.0;
  double hbar = 1.0;
  double k = 1.0;
  double mass = 1.0;
  BetaGrid beta_grid;
  std::uint64_t seed = 42;
  std::size_t samples = 1'000'000;
  std::size_t modes = 1000;
  int max_order = 6;
  // Variance ansatz for `variance`; defaults to the Planck ansatz of e0.
  std::optional<double> a0;
  std::optional<double> a1;
  std::optional<double> a2;
  OutputFormat format = OutputFormat::csv;
  std::string output_path = "-";
};

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

std::string command_name(Command command);

/// Rejects inconsistent or out-of-range settings (exit status 2 material).
void validate(const RunConfig& config);

/// The rows a command produces. `passed` is cleared when `verify` finds a
/// failing invariant.
Table build_table(const RunConfig& config, bool& passed);

/// Echo of every setting, written into the JSON `meta` block.
nlohmann::ordered_json config_echo(const RunConfig& config);

/// Runs one command; returns the exit status. Reports go to config.output_path
/// (or `out` for "-"); diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11), falls back to ZPE_SEED for the seed, and runs.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zpe::cli
