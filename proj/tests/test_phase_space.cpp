#include <cmath>
#include <numbers>

#include "doctest.h"
#include "zpe/error.hpp"
#include "zpe/numerics.hpp"
#include "zpe/oracles.hpp"
#include "zpe/phase_space.hpp"
#include "zpe/statistical_ensemble.hpp"

using namespace zpe;
using doctest::Approx;

TEST_CASE("equilibrium Gaussian") {
  const OscillatorModel model(2.0);
  const auto g = PhaseSpaceGaussian::equilibrium(model, 1.0);
  CHECK(g.u() == Approx(1.3130352854993313).epsilon(1e-15));
  CHECK(g.var_p() == Approx(g.u()));
  CHECK(g.var_q() == Approx(g.u() / 4.0));
  CHECK(uncertainty_product(model, 1.0) == Approx(0.43101541524157762).epsilon(1e-14));
  CHECK(g.energy(1.0, 0.5) == Approx(1.0));
}

TEST_CASE("density normalisation") {
  const PhaseSpaceGaussian g(1.5, 2.0, 0.8);
  const double norm = oracle::integrate_2d([&](double p, double q) { return wigner_density(p, q, g); }, -12.0, 12.0,
                                           -8.0, 8.0);
  CHECK(norm == Approx(1.0).epsilon(1e-9));
  CHECK(wigner_density(0.0, 0.0, g) == Approx(2.0 / (2.0 * std::numbers::pi * 0.8)));
}

TEST_CASE("Heisenberg bound") {
  const OscillatorModel model(3.0, 0.7);
  const double bound = 0.25 * 0.7 * 0.7;
  double previous = INFINITY;
  for (double beta : make_grid(0.01, 100.0, 50, true)) {
    const double product = uncertainty_product(model, beta);
    CHECK(product - bound >= -1e-15);
    CHECK(product <= previous);
    previous = product;
  }
  CHECK(std::abs(uncertainty_product(model, 100.0) - bound) < 1e-12);
  // a classical Gaussian violates it at low temperature
  CHECK(uncertainty_product(PhaseSpaceGaussian(1.0, 3.0, 1.0 / 100.0)) < bound);
}

TEST_CASE("energy marginal is the exponential density") {
  const auto g = PhaseSpaceGaussian::equilibrium(OscillatorModel(2.0), 0.5);
  for (double e : {0.0, 0.3, 1.0, 4.0}) {
    CHECK(energy_density_from_wigner(g, e) == Approx(ws_density(e, g.u())).epsilon(1e-8));
  }
  CHECK(energy_marginal_consistency(g) < 1e-8);
}

TEST_CASE("invalid Gaussian") {
  CHECK_THROWS_AS(PhaseSpaceGaussian(1.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(PhaseSpaceGaussian(-1.0, 1.0, 1.0), DomainError);
}
