#pragma once

#include <stdexcept>

namespace qgprng {

/// Thrown when a series or continued fraction fails to converge within its
/// iteration cap. Indicates a bug rather than bad input.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ln Γ(a) for a > 0. Thread-safe, unlike std::lgamma.
double log_gamma(double a);

/// Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0. Power
/// series below x = a + 1, Lentz continued fraction for Q = 1 - P above.
double regularized_gamma_p(double a, double x);

/// P(X <= statistic) for X ~ chi-square(df). Left-tail convention: a
/// suspiciously good fit gives p near 0, a bad fit p near 1.
double chisq_cdf(double statistic, unsigned df);

}  // namespace qgprng
