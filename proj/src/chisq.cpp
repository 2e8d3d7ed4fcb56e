#include "qgprng/chisq.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace qgprng {

namespace {

constexpr int kMaxIterations = 100000;
constexpr double kEpsilon = 1e-15;
constexpr double kTiny = 1e-300;

// exp(-x + a ln x - ln Γ(a))
double prefactor(double a, double x) { return std::exp(-x + a * std::log(x) - log_gamma(a)); }

double lower_series(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int n = 0; n < kMaxIterations; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEpsilon) return sum * prefactor(a, x);
  }
  throw NonConvergence("incomplete gamma series did not converge for a=" + std::to_string(a) +
                       ", x=" + std::to_string(x));
}

double upper_continued_fraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEpsilon) return h * prefactor(a, x);
  }
  throw NonConvergence("incomplete gamma continued fraction did not converge for a=" +
                       std::to_string(a) + ", x=" + std::to_string(x));
}

}  // namespace

double log_gamma(double a) {
  if (!(a > 0.0)) throw std::domain_error("log_gamma: a must be positive");
  // Shift up to a >= 10, then Stirling's series through the x^-11 term.
  double shift = 0.0;
  while (a < 10.0) {
    shift += std::log(a);
    a += 1.0;
  }
  const double inv = 1.0 / a;
  const double inv2 = inv * inv;
  const double series =
      inv * (1.0 / 12 - inv2 * (1.0 / 360 - inv2 * (1.0 / 1260 - inv2 * (1.0 / 1680 - inv2 * (1.0 / 1188 - inv2 * 691.0 / 360360)))));
  return (a - 0.5) * std::log(a) - a + 0.5 * std::log(2.0 * std::numbers::pi) + series - shift;
}

double regularized_gamma_p(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("regularized_gamma_p: a must be positive");
  if (x < 0.0 || std::isnan(x)) throw std::domain_error("regularized_gamma_p: x must be >= 0");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < a + 1.0) return std::fmin(1.0, lower_series(a, x));
  return std::fmax(0.0, 1.0 - upper_continued_fraction(a, x));
}

double chisq_cdf(double statistic, unsigned df) {
  if (df == 0) throw std::domain_error("chisq_cdf: df must be positive");
  if (statistic < 0.0 || std::isnan(statistic)) throw std::domain_error("chisq_cdf: statistic must be >= 0");
  return regularized_gamma_p(0.5 * df, 0.5 * statistic);
}

}  // namespace qgprng
