#include <cmath>

#include "doctest.h"
#include "zpe/error.hpp"
#include "zpe/numerics.hpp"
#include "zpe/oracles.hpp"
#include "zpe/spectrum.hpp"
#include "zpe/statistical_ensemble.hpp"

using namespace zpe;
using doctest::Approx;

TEST_CASE("exponential density") {
  CHECK(ws_density(-1.0, 2.0) == 0.0);
  CHECK(ws_density(0.0, 2.0) == 0.5);
  CHECK(oracle::integrate([](double e) { return ws_density(e, 1.7); }, 0.0, INFINITY) == Approx(1.0).epsilon(1e-10));
  CHECK(oracle::integrate([](double e) { return e * ws_density(e, 1.7); }, 0.0, INFINITY) ==
        Approx(1.7).epsilon(1e-10));
  CHECK_THROWS_AS(ws_density(1.0, 0.0), DomainError);
}

TEST_CASE("variance decomposition") {
  for (double beta : make_grid(0.01, 100.0, 50, true)) {
    const auto d = decompose_fluctuations(1.0, beta);
    CHECK(d.u_total == Approx(d.u_thermal + 1.0).epsilon(1e-15));
    CHECK(std::abs(d.var_total - d.var_thermal - d.var_zero_point - 2.0 * d.covariance) <= 1e-12 * d.var_total);
    CHECK(std::abs(d.covariance) < 1e-12 * d.var_total);
    CHECK(d.var_zero_point == 1.0);
  }
  const auto cold = decompose_fluctuations(1.0, 100.0);
  CHECK(cold.var_total == 1.0);
}

TEST_CASE("classical limit") {
  const auto d = decompose_fluctuations(0.0, 0.5);
  CHECK(d.var_total == d.u_total * d.u_total);
  CHECK(d.var_total == energy_variance(0.0, 0.5));
  CHECK(d.var_zero_point == 0.0);
}

TEST_CASE("statistical entropy and temperature") {
  CHECK(statistical_entropy(1.0) == 1.0);
  CHECK(statistical_entropy(std::exp(1.0), 2.0) == Approx(4.0));
  const double u = planck_mean_energy(1.0, 1.0);
  CHECK(statistical_temperature_inverse(u) == Approx(0.76159415595576489).epsilon(1e-15));
  // the mean energy relation S_s' = 1/U differs from the thermal beta
  CHECK(statistical_temperature_inverse(u) < 1.0);
}
