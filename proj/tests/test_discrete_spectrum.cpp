#include <cmath>
#include <vector>

#include "doctest.h"
#include "zpe/discrete_spectrum.hpp"
#include "zpe/error.hpp"
#include "zpe/numerics.hpp"
#include "zpe/oracles.hpp"
#include "zpe/spectrum.hpp"

using namespace zpe;
using doctest::Approx;

TEST_CASE("levels and weights at e0 = beta = 1") {
  const auto spectrum = DiscreteSpectrum::build(1.0, 1.0);
  CHECK(spectrum.levels()[0] == 1.0);
  CHECK(spectrum.levels()[3] == 7.0);
  CHECK(spectrum.weights()[0] == Approx(0.86466471676338731).epsilon(1e-14));
  CHECK(spectrum.weights()[1] / spectrum.weights()[0] == Approx(std::exp(-2.0)).epsilon(1e-13));
  CHECK(spectrum.dimensionless_partition() == Approx(0.42545906411966077).epsilon(1e-14));
  CHECK(spectrum.partition_function() == Approx(partition_function(1.0, 1.0)).epsilon(1e-14));
  CompensatedSum total;
  for (double w : spectrum.weights()) total.add(w);
  CHECK(total.value() == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("level averages") {
  const auto spectrum = DiscreteSpectrum::build(1.0, 1.0);
  CHECK(discrete_average(spectrum, [](double e) { return e; }) == Approx(1.3130352854993313).epsilon(1e-14));
  CHECK(discrete_average(spectrum, [](double e) { return e * e; }) == Approx(2.4481233219326209).epsilon(1e-12));
  CHECK(mean_occupation(1.0, 1.0) == Approx(0.15651764274966565).epsilon(1e-15));
  CHECK_THROWS_AS(discrete_average(spectrum, [](double e) { return e > 2.0 ? NAN : e; }), NumericError);
}

TEST_CASE("Shannon entropy equals the thermodynamic entropy") {
  for (double e0 : {0.5, 1.0, 2.0}) {
    for (double beta : make_grid(0.01, 100.0, 30, true)) {
      const auto spectrum = DiscreteSpectrum::build(e0, beta);
      CHECK(std::abs(shannon_entropy(spectrum) - entropy(e0, beta)) < 1e-10);
      CHECK(std::abs(oracle::shannon_entropy(oracle::level_sum_weights(e0, beta)) - entropy(e0, beta)) < 1e-10);
    }
  }
}

TEST_CASE("truncation") {
  const auto spectrum = DiscreteSpectrum::build(1.0, 0.01);
  CHECK(spectrum.n_max() == 1726);
  CHECK(DiscreteSpectrum::build(1.0, 100.0).n_max() == 0);
  CHECK_THROWS_AS(DiscreteSpectrum::build(1.0, 1e-9), ResourceError);
  CHECK_THROWS_AS(DiscreteSpectrum::build(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(DiscreteSpectrum::build(1.0, 1.0, 2.0), DomainError);
}

TEST_CASE("implied mean ln g does not depend on temperature") {
  const std::vector<double> betas = make_grid(0.05, 10.0, 20, true);
  CHECK(verify_lng_constancy(1.0, betas) < 1e-8);
  CHECK(potential_slope_deviation(1.0, betas) < 1e-8);
  // with Z_g = 2 E0 Z the comb's implied mean ln g is ln(2 E0)
  CHECK(implied_log_g_mean(1.0, 1.0) == Approx(std::log(2.0)).epsilon(1e-8));
  CHECK(implied_log_g_mean(1.0, 0.2) == Approx(std::log(2.0)).epsilon(1e-8));
  CHECK(std::abs(implied_log_g_mean(0.5, 3.0)) < 1e-8);
}
