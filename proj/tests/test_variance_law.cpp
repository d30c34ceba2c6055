#include <cmath>

#include "doctest.h"
#include "zpe/error.hpp"
#include "zpe/numerics.hpp"
#include "zpe/oracles.hpp"
#include "zpe/spectrum.hpp"
#include "zpe/variance_law.hpp"

using namespace zpe;
using doctest::Approx;

TEST_CASE("Planck ansatz reproduces the closed form") {
  for (double e0 : {0.5, 1.0, 2.0}) {
    const auto ansatz = derive_planck_ansatz(e0);
    CHECK(ansatz.a0() == -e0 * e0);
    CHECK(ansatz.q() == Approx(4.0 * e0 * e0));
    for (double beta : {0.01, 0.3, 1.0, 7.0}) {
      CHECK(relative_difference(solve_mean_energy(ansatz, beta), planck_mean_energy(e0, beta)) < 1e-14);
    }
    const auto law = equilibrium_law(ansatz);
    CHECK(law.kind == LawKind::planck_family);
    CHECK(law.e0 == Approx(e0));
  }
}

TEST_CASE("q = 0 gives equipartition") {
  const VarianceAnsatz ansatz(0.0, 0.0, 1.0);
  CHECK(equilibrium_law(ansatz).kind == LawKind::equipartition);
  CHECK(solve_mean_energy(ansatz, 4.0) == 0.25);
  CHECK(dispersion_vs_beta(ansatz, 4.0) == 0.0625);
}

TEST_CASE("shifted root") {
  // a0 = -2, a1 = 1, a2 = 1: q = 9, roots -2 and 1
  const auto ansatz = VarianceAnsatz::with_root(1.0, 1.0, 1.0);
  CHECK(ansatz.a0() == -2.0);
  CHECK(ansatz.q() == 9.0);
  CHECK(ansatz.roots().first == Approx(-2.0));
  CHECK(ansatz.roots().second == Approx(1.0));
  CHECK(solve_mean_energy(ansatz, 1.0) == Approx(1.1571870894737679).epsilon(1e-14));
  // (sqrt5/2) coth(sqrt5/2) - 1/2
  CHECK(solve_mean_energy(VarianceAnsatz(-1.0, 1.0, 1.0), 1.0) == Approx(0.88561925389688065).epsilon(1e-14));
}

TEST_CASE("closed form against adaptive integration") {
  const auto betas = make_grid(0.05, 20.0, 25, true);
  for (const auto& ansatz : {VarianceAnsatz::with_root(1.0, 0.5, 1.0), VarianceAnsatz::with_root(0.3, 2.0, 0.7),
                             VarianceAnsatz(0.0, 0.0, 2.0), VarianceAnsatz(1.0, -2.0, 1.0)}) {
    const auto reference = oracle::ode_mean_energy(ansatz, betas);
    for (std::size_t i = 0; i < betas.size(); ++i) {
      CHECK(relative_difference(solve_mean_energy(ansatz, betas[i]), reference[i]) < 1e-8);
    }
  }
}

TEST_CASE("sigma^2(U) = -dU/dbeta = dispersion") {
  const auto ansatz = VarianceAnsatz::with_root(1.0, 0.5, 1.5);
  for (double beta : {0.05, 0.5, 1.0, 2.0}) {
    const double u = solve_mean_energy(ansatz, beta);
    const double slope =
        -central_derivative([&](double b) { return solve_mean_energy(ansatz, b); }, beta, default_beta_step(beta));
    CHECK(relative_difference(slope, variance_from_u(ansatz, u)) < 1e-7);
    CHECK(relative_difference(dispersion_vs_beta(ansatz, beta), variance_from_u(ansatz, u)) < 1e-10);
  }
}

TEST_CASE("Wien residual: zero only without the linear term") {
  for (double beta : make_grid(0.1, 10.0, 40, true)) {
    CHECK(std::abs(wien_consistency_residual(derive_planck_ansatz(1.0), 1.0, beta)) < 1e-10);
  }
  const auto tilted = VarianceAnsatz::with_root(1.0, 0.5, 1.0);
  CHECK(wien_consistency_residual(tilted, 1.0, 1.0) == Approx(-0.19776062482798735).epsilon(1e-12));
  CHECK(wien_consistency_residual(tilted, 1.0, 2.0) == Approx(-0.25042112168744284).epsilon(1e-12));
}

TEST_CASE("Wien residual against a finite-difference scaling test") {
  // U = E0 f(E0 beta) iff E0 dU/dE0 - beta dU/dbeta - U = 0; the residual is
  // that quantity times -sinh^2(x) / (E0^2 beta).
  const double a1 = 0.5, a2 = 1.0;
  for (double e0 : {1.0, 2.0}) {
    for (double beta : {0.3, 1.0, 2.0}) {
      const auto u = [&](double e, double b) { return solve_mean_energy(VarianceAnsatz::with_root(e, a1, a2), b); };
      const double d_e0 = central_derivative([&](double e) { return u(e, beta); }, e0, 1e-4 * e0);
      const double d_beta = central_derivative([&](double b) { return u(e0, b); }, beta, 1e-4 * beta);
      const double scaling = e0 * d_e0 - beta * d_beta - u(e0, beta);
      const double x = a2 * (e0 + a1 / (2.0 * a2)) * beta;
      const double predicted = -std::sinh(x) * std::sinh(x) / (e0 * e0 * beta) * scaling;
      CHECK(relative_difference(predicted, wien_consistency_residual(VarianceAnsatz::with_root(e0, a1, a2), e0, beta)) <
            1e-6);
    }
  }
}

TEST_CASE("ansatz validation") {
  CHECK_THROWS_AS(VarianceAnsatz(1.0, 0.0, 1.0), DomainError);
  CHECK_NOTHROW(VarianceAnsatz(0.25, 1.0, 1.0 + 1e-15));
  CHECK_THROWS_AS(solve_mean_energy(derive_planck_ansatz(1.0), -1.0), DomainError);
}
