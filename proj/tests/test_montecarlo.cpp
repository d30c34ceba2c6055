#include <cmath>
#include <vector>

#include "doctest.h"
#include "zpe/error.hpp"
#include "zpe/montecarlo.hpp"
#include "zpe/spectrum.hpp"

using namespace zpe;
using doctest::Approx;

namespace {
double z_score(const SampleBatch& b, double expected) { return std::abs(b.mean - expected) / b.std_error; }
}  // namespace

TEST_CASE("streams are reproducible and distinct") {
  RandomStream a({42, 0}), b({42, 0}), c({42, 1}), d({43, 0});
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_bits();
    CHECK(x == b.next_bits());
    CHECK(x != c.next_bits());
    CHECK(x != d.next_bits());
  }
  RandomStream u({1, 2});
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform_open();
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("draws do not depend on how they are chunked") {
  const auto big = draw_ws(1.0, 200'000, {5, 3});
  const auto small = draw_ws(1.0, 70'000, {5, 3});
  for (std::size_t i = 0; i < small.size(); ++i) REQUIRE(big[i] == small[i]);
}

TEST_CASE("summaries") {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  const auto s = summarize("x", v, {9, 1});
  CHECK(s.mean == 2.5);
  CHECK(s.variance == Approx(5.0 / 3.0));
  CHECK(s.std_error == Approx(std::sqrt(5.0 / 12.0)));
  const std::vector<double> one{7.0};
  const auto lone = summarize("x", one, {9, 1});
  CHECK(lone.degenerate());
  CHECK(std::isnan(lone.variance));
  const std::vector<double> lo{1.0, 2.0}, hi{3.0, 4.0};
  const auto merged = merge_batches(summarize("x", lo, {9, 1}), summarize("x", hi, {9, 1}));
  CHECK(merged.n == 4);
  CHECK(merged.mean == Approx(s.mean));
  CHECK(merged.variance == Approx(s.variance));
  CHECK_THROWS_AS(summarize("x", std::vector<double>{}, {9, 1}), DomainError);
}

TEST_CASE("samplers reproduce closed-form moments") {
  const std::size_t n = 200'000;
  const double u = planck_mean_energy(1.0, 1.0);
  const auto levels = sample_discrete_levels(1.0, 1.0, n, {11, 0});
  CHECK(z_score(levels, u) < 4.0);
  CHECK(levels.variance == Approx(energy_variance(1.0, 1.0)).epsilon(0.02));
  const auto ws = sample_ws(u, n, {11, 1});
  CHECK(z_score(ws, u) < 4.0);
  CHECK(ws.variance == Approx(u * u).epsilon(0.03));
  const auto g = PhaseSpaceGaussian::equilibrium(OscillatorModel(2.0), 1.0);
  const auto ps = sample_phase_space(g, n, {11, 2});
  CHECK(z_score(ps, u) < 4.0);
  CHECK(ps.variance == Approx(u * u).epsilon(0.03));
}

TEST_CASE("discrete draws sit on the levels") {
  for (double e : draw_discrete_levels(0.5, 0.3, 1000, {2, 0})) {
    const double n = (e / 0.5 - 1.0) / 2.0;
    CHECK(n == std::round(n));
  }
}

TEST_CASE("mode interference is exponential") {
  const auto draws = draw_mode_interference(200, 20'000, {3, 0});
  const auto ks = ks_test_exponential(draws, 1.0);
  CHECK(ks.passed);
  CHECK(ks.p_value > 0.01);
  const auto batch = mode_interference_experiment(200, 20'000, {3, 0});
  CHECK(z_score(batch, 1.0) < 4.0);
}

TEST_CASE("KS test rejects the wrong mean") {
  const auto draws = draw_ws(1.0, 20'000, {4, 0});
  CHECK(ks_test_exponential(draws, 1.0).passed);
  CHECK_FALSE(ks_test_exponential(draws, 1.2).passed);
}

TEST_CASE("Kolmogorov distribution") {
  CHECK(kolmogorov_survival(1.0) == Approx(0.26999967167735456).epsilon(1e-12));
  CHECK(kolmogorov_survival(0.2) == Approx(1.0).epsilon(1e-12));
  CHECK(kolmogorov_survival(3.0) < 1e-7);
  CHECK(kolmogorov_critical_value(0.01) == Approx(1.6276).epsilon(1e-4));
  CHECK(kolmogorov_survival(kolmogorov_critical_value(0.05)) == Approx(0.05).epsilon(1e-9));
}

TEST_CASE("sampler arguments") {
  CHECK_THROWS_AS(draw_ws(-1.0, 10, {1, 0}), DomainError);
  CHECK_THROWS_AS(draw_discrete_levels(1.0, 0.0, 10, {1, 0}), DomainError);
  CHECK_THROWS_AS(draw_mode_interference(0, 10, {1, 0}), DomainError);
}
