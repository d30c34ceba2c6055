#include "zpe/oracles.hpp"

#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace zpe::oracle {

namespace {

constexpr int kMaxLevels = 50'000'000;

// Calls visit(E_n, e^{-beta (E_n - E_0)}) until the term is negligible.
template <class Visit>
void for_each_level(double e0, double beta, double cutoff, Visit visit) {
  double running = 0.0;
  for (int n = 0; n < kMaxLevels; ++n) {
    const double energy = (2.0 * n + 1.0) * e0;
    const double term = std::exp(-beta * (energy - e0));
    visit(energy, term);
    running += term;
    if (term < cutoff * running) return;
  }
  throw std::runtime_error("level sum did not converge");
}

}  // namespace

double level_sum_log_partition(double e0, double beta, double cutoff) {
  double sum = 0.0;
  for_each_level(e0, beta, cutoff, [&](double, double w) { sum += w; });
  return -beta * e0 + std::log(sum);
}

double level_sum_average(double e0, double beta, const std::function<double(double)>& f,
                         double cutoff) {
  double num = 0.0;
  double den = 0.0;
  for_each_level(e0, beta, cutoff, [&](double e, double w) {
    num += f(e) * w;
    den += w;
  });
  return num / den;
}

std::vector<double> level_sum_weights(double e0, double beta, double cutoff) {
  std::vector<double> w;
  double den = 0.0;
  for_each_level(e0, beta, cutoff, [&](double, double t) {
    w.push_back(t);
    den += t;
  });
  for (double& x : w) x /= den;
  return w;
}

double shannon_entropy(std::span<const double> weights) {
  double s = 0.0;
  for (double w : weights) {
    if (w > 0.0) s -= w * std::log(w);
  }
  return s;
}

std::vector<double> ode_mean_energy(const VarianceAnsatz& ansatz, std::span<const double> betas,
                                    double rel_tol, double abs_tol) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, 1>;
  const double a0 = ansatz.a0();
  const double a1 = ansatz.a1();
  const double a2 = ansatz.a2();
  const double beta0 = 1e-6;
  State u{1.0 / (a2 * beta0) - a1 / (2.0 * a2)};
  const auto rhs = [&](const State& x, State& dxdt, double) {
    dxdt[0] = -(a0 + a1 * x[0] + a2 * x[0] * x[0]);
  };
  std::vector<double> times{beta0};
  times.insert(times.end(), betas.begin(), betas.end());
  std::vector<double> out;
  out.reserve(betas.size());
  auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(abs_tol, rel_tol);
  odeint::integrate_times(stepper, rhs, u, times.begin(), times.end(), beta0 * 1e-3,
                          [&](const State& x, double t) {
                            if (t > beta0) out.push_back(x[0]);
                          });
  return out;
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 25, tol);
}

double integrate_2d(const std::function<double(double, double)>& f, double ax, double bx,
                    double ay, double by, double tol) {
  const auto inner = [&](double x) {
    return integrate([&](double y) { return f(x, y); }, ay, by, tol);
  };
  return integrate(inner, ax, bx, tol);
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double rel_tol) {
  double f_lo = f(lo);
  if (f_lo * f(hi) > 0.0) throw std::runtime_error("bisect: no sign change");
  for (int i = 0; i < 400 && (hi - lo) > rel_tol * std::abs(hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace zpe::oracle
