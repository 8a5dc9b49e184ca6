#pragma once

namespace egodiv {

/// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

/// Student t with `df` degrees of freedom.
double student_t_cdf(double t, double df);
/// Two-tailed p-value P(|T| >= |t|).
double student_t_two_tailed(double t, double df);
/// Quantile: P(T <= q) = p, for 0 < p < 1.
double student_t_quantile(double p, double df);

/// Upper tail P(F >= f) of the F(df1, df2) distribution.
double f_upper_tail(double f, double df1, double df2);

}  // namespace egodiv
