// Apache License, Version 2.0, refer to LICENSE.txt
//
// Scalar reference kernels. Built with -ffp-contract=off so the SIMD
// variants can match them bit for bit.
#include <cmath>

#include "rbtest/kernels.hpp"

namespace rbtest::kern::scalar {

void dist_sq(const double* mu, std::size_t n, double mu1, double inv_two_sigma2,
             double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double d = mu[i] - mu1;
    out[i] = d * d * inv_two_sigma2;
  }
}

void dist_sq_hier(const double* mu, const double* sigma2, std::size_t n,
                  double mu1, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double d = mu[i] - mu1;
    out[i] = (d * d) / (2.0 * sigma2[i]);
  }
}

void beta_x_batch(const double* xbar, const double* s2, std::size_t n, double b0,
                  double c_s2, double c_shrink, double mu0, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double d = xbar[i] - mu0;
    out[i] = (b0 + c_s2 * s2[i]) + c_shrink * (d * d);
  }
}

std::size_t count_le(const double* x, std::size_t n, double t) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    c += (x[i] <= t) ? 1 : 0;
  }
  return c;
}

std::size_t count_ge(const double* x, std::size_t n, double t) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    c += (x[i] >= t) ? 1 : 0;
  }
  return c;
}

std::size_t count_abs_ge(const double* x, std::size_t n, double center,
                         double halfwidth) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    c += (std::fabs(x[i] - center) >= halfwidth) ? 1 : 0;
  }
  return c;
}

}  // namespace rbtest::kern::scalar
