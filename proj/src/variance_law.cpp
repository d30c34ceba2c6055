#include "zpe/variance_law.hpp"

#include <cmath>
#include <string>

#include "zpe/error.hpp"
#include "zpe/hyperbolic.hpp"

namespace zpe {

namespace {

constexpr double kClassicalDiscriminant = 1e-14;

void require_physical(const VarianceAnsatz& ansatz) {
  if (!(ansatz.a2() > 0.0)) {
    throw DomainError("a2 must be > 0 (dispersion must increase with energy), got " +
                      std::to_string(ansatz.a2()));
  }
}

}  // namespace

VarianceAnsatz::VarianceAnsatz(double a0, double a1, double a2)
    : a0_(a0), a1_(a1), a2_(a2), q_(a1 * a1 - 4.0 * a0 * a2) {
  if (!std::isfinite(q_)) throw DomainError("ansatz coefficients must be finite");
  if (std::abs(q_) <= kClassicalDiscriminant) q_ = 0.0;
  if (q_ < 0.0) {
    throw DomainError("discriminant q = " + std::to_string(q_) +
                      " < 0 is excluded for real values of the energy");
  }
}

VarianceAnsatz VarianceAnsatz::with_root(double e0, double a1, double a2) {
  return VarianceAnsatz(-a2 * e0 * e0 - a1 * e0, a1, a2);
}

std::pair<double, double> VarianceAnsatz::roots() const {
  require_physical(*this);
  const double root_q = std::sqrt(q_);
  return {(-a1_ - root_q) / (2.0 * a2_), (-a1_ + root_q) / (2.0 * a2_)};
}

EquilibriumLaw equilibrium_law(const VarianceAnsatz& ansatz) {
  const double e0 = ansatz.roots().second;
  if (e0 < 0.0) {
    throw DomainError("largest root " + std::to_string(e0) + " is negative");
  }
  return {ansatz.q() == 0.0 ? LawKind::equipartition : LawKind::planck_family, e0};
}

double solve_mean_energy(const VarianceAnsatz& ansatz, double beta) {
  detail::require_positive(beta, "beta");
  require_physical(ansatz);
  const double a2 = ansatz.a2();
  const double shift = ansatz.a1() / (2.0 * a2);
  if (ansatz.q() == 0.0) return 1.0 / (a2 * beta) - shift;
  // (sqrt q / 2 a2) coth(sqrt q beta / 2) - a1/(2 a2)
  //   = e0 + (sqrt q / a2) / (e^{sqrt q beta} - 1)
  const double root_q = std::sqrt(ansatz.q());
  const double e0 = root_q / (2.0 * a2) - shift;
  return e0 + (root_q / a2) / std::expm1(root_q * beta);
}

double variance_from_u(const VarianceAnsatz& ansatz, double u) {
  return ansatz.a0() + ansatz.a1() * u + ansatz.a2() * u * u;
}

double dispersion_vs_beta(const VarianceAnsatz& ansatz, double beta) {
  detail::require_positive(beta, "beta");
  require_physical(ansatz);
  const double a2 = ansatz.a2();
  if (ansatz.q() == 0.0) return 1.0 / (a2 * beta * beta);
  const double q = ansatz.q();
  return q / (4.0 * a2) * detail::csch_squared(0.5 * std::sqrt(q) * beta);
}

double wien_consistency_residual(const VarianceAnsatz& ansatz, double e0, double beta) {
  detail::require_positive(beta, "beta");
  detail::require_positive(e0, "e0");
  require_physical(ansatz);
  if (!(ansatz.q() > 0.0)) throw DomainError("Wien-consistency residual requires q > 0");
  const double a2 = ansatz.a2();
  const double c = ansatz.a1() / (2.0 * a2);
  const double y = e0 + c;
  const double x = a2 * y * beta;
  const double lhs = a2 * e0 * y * beta + c * detail::half_sinh2_minus_sinh_sq(x);
  const double rhs = a2 * y * y * beta;
  return (lhs - rhs) / (a2 * e0 * e0 * beta);
}

VarianceAnsatz derive_planck_ansatz(double e0) {
  detail::require_non_negative(e0, "e0");
  return VarianceAnsatz(-e0 * e0, 0.0, 1.0);
}

}  // namespace zpe
