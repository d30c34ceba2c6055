#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace zpe {

/// Step used for β-derivatives throughout: balances truncation and round-off
/// over β in [1e-3, 1e3].
inline double default_beta_step(double beta) { return std::max(1e-6, 1e-4 * beta); }

/// Central difference at step h and h/2 combined by one Richardson step,
/// leaving an O(h^4) truncation error.
template <class F>
double central_derivative(F&& f, double x, double h) {
  const double d_h = (f(x + h) - f(x - h)) / (2.0 * h);
  const double h2 = 0.5 * h;
  const double d_h2 = (f(x + h2) - f(x - h2)) / (2.0 * h2);
  return (4.0 * d_h2 - d_h) / 3.0;
}

/// |a - b| / max(|a|, |b|), zero when both vanish.
inline double relative_difference(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

/// `count` points from lo to hi inclusive, geometric or arithmetic spacing.
/// A single point is `lo`.
inline std::vector<double> make_grid(double lo, double hi, std::size_t count, bool logarithmic) {
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    out.push_back(logarithmic ? lo * std::pow(hi / lo, t) : lo + (hi - lo) * t);
  }
  if (count > 1) out.back() = hi;
  return out;
}

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace zpe
