#ifndef TASKCE_STATS_HPP
#define TASKCE_STATS_HPP

#include "taskce/types.hpp"

namespace taskce {

struct CorrelationResult {
  Scalar r = 0;
  Scalar p = 1;
  Index n = 0;
};

/// Product-moment correlation with two-sided significance from the
/// t statistic r * sqrt((n-2)/(1-r^2)) on n-2 degrees of freedom.
/// Requires n >= 3 (TooFewPoints) and nonzero variance in both inputs
/// (CorrelationUndefined).
CorrelationResult pearson(const Vector& x, const Vector& y);

/// Least-squares line with the parameters needed to evaluate the 95%
/// confidence band of the mean response. The band half-width at x0 is
/// t_crit * s * sqrt(1/n + (x0 - x_mean)^2 / sxx), narrowest at x_mean.
struct LinearFit {
  Scalar slope = 0;
  Scalar intercept = 0;
  Scalar residual_std_error = 0;  // s, on n-2 degrees of freedom
  Scalar x_mean = 0;
  Scalar sxx = 0;
  Index n = 0;
  Scalar t_critical = 0;  // two-sided 95% quantile at n-2 dof

  Scalar predict(Scalar x0) const { return intercept + slope * x0; }
  Scalar band_half_width(Scalar x0) const;
};

LinearFit linear_fit(const Vector& x, const Vector& y);

/// Regularized incomplete beta I_x(a, b), evaluated by the continued
/// fraction with the modified Lentz scheme (tolerance 1e-12; switches to
/// the symmetric form for fast convergence). Accurate to ~1e-12 for the
/// (a, b) ranges used here.
Scalar regularized_incomplete_beta(Scalar a, Scalar b, Scalar x);

/// CDF of Student's t with dof degrees of freedom.
Scalar student_t_cdf(Scalar t, Scalar dof);

/// Inverse CDF by bisection on student_t_cdf; prob in (0, 1).
Scalar student_t_quantile(Scalar prob, Scalar dof);

}  // namespace taskce

#endif  // TASKCE_STATS_HPP
