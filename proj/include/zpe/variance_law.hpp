#pragma once

// Mean energy from the quadratic variance law sigma^2(U) = a0 + a1 U + a2 U^2
// together with sigma^2 = -dU/dbeta.

#include <utility>

namespace zpe {

/// Coefficients of sigma^2(U) truncated at degree two. Construction rejects a
/// negative discriminant q = a1^2 - 4 a0 a2; |q| <= 1e-14 is snapped to 0.
class VarianceAnsatz {
 public:
  VarianceAnsatz(double a0, double a1, double a2);

  /// Ansatz whose largest root of sigma^2 = 0 is `e0`, i.e. a0 = -a2 e0^2 - a1 e0.
  static VarianceAnsatz with_root(double e0, double a1, double a2);

  double a0() const { return a0_; }
  double a1() const { return a1_; }
  double a2() const { return a2_; }
  double q() const { return q_; }

  /// Roots U_- <= U_+ of sigma^2(U) = 0. Requires a2 > 0.
  std::pair<double, double> roots() const;

 private:
  double a0_;
  double a1_;
  double a2_;
  double q_;
};

enum class LawKind { equipartition, planck_family };

struct EquilibriumLaw {
  LawKind kind;
  double e0;  // largest root of sigma^2(U) = 0
};

/// Classifies the ansatz; e0 is (-a1 + sqrt(q)) / (2 a2). Requires a2 > 0 and
/// a non-negative largest root.
EquilibriumLaw equilibrium_law(const VarianceAnsatz& ansatz);

/// U(beta) solving dU / sigma^2(U) = -dbeta with the 1/(a2 beta) high-T asymptote.
double solve_mean_energy(const VarianceAnsatz& ansatz, double beta);

/// a0 + a1 u + a2 u^2.
double variance_from_u(const VarianceAnsatz& ansatz, double u);

/// (q / 4 a2) csch^2(sqrt(q) beta / 2); falls back to 1/(a2 beta^2) when q = 0.
double dispersion_vs_beta(const VarianceAnsatz& ansatz, double beta);

/// LHS - RHS of the Wien-consistency condition for U(beta) from `ansatz`
/// with E0 proportional to omega, in units of a2 E0^2 beta. Vanishes at every
/// beta only for a1 = 0.
double wien_consistency_residual(const VarianceAnsatz& ansatz, double e0, double beta);

/// (a0, a1, a2) = (-e0^2, 0, 1).
VarianceAnsatz derive_planck_ansatz(double e0);

}  // namespace zpe
