// Apache License, Version 2.0, refer to LICENSE.txt
#ifndef RBTEST_SPECIAL_FUNCTIONS_HPP
#define RBTEST_SPECIAL_FUNCTIONS_HPP

namespace rbtest {

/// Standard normal CDF. Evaluated through erfc so both tails keep full
/// relative accuracy (absolute error well below 1e-12 everywhere).
double norm_cdf(double z);

/// Standard normal quantile, AS 241 (Wichura 1988), PPND16 precision.
/// Requires 0 < p < 1.
double norm_quantile(double p);

/// Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0.
/// Series expansion for x < a+1, Lentz continued fraction otherwise.
double lower_gamma_reg(double a, double x);

/// Regularized incomplete beta I_x(a, b) via continued fraction.
double incomplete_beta_reg(double a, double b, double x);

/// Student-t CDF with (possibly non-integer) df degrees of freedom.
double student_t_cdf(double x, double df);

/// Two-sided tail probability 2*P(T_df > |t|).
double student_t_two_sided_p(double t, double df);

}  // namespace rbtest

#endif
