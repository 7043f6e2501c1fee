// Apache License, Version 2.0, refer to LICENSE.txt
#ifndef RBTEST_KERNELS_HPP
#define RBTEST_KERNELS_HPP

#include <cstddef>

// Batch kernels for the Monte Carlo inner loops. Each operation has a scalar
// reference implementation and an AVX2 variant selected at runtime; the two
// are bit-identical (the kernel translation units are built with FP
// contraction off and use only correctly rounded operations), which the test
// suite checks on random inputs. Set RBTEST_KERNELS=scalar in the environment
// to pin the scalar path.
namespace rbtest::kern {

enum class Backend { scalar, avx2 };

Backend active_backend();

/// Force a backend (throws std::runtime_error if unsupported on this CPU).
void set_backend(Backend b);

/// out[i] = (mu[i] - mu1)^2 * inv_two_sigma2
void dist_sq(const double* mu, std::size_t n, double mu1, double inv_two_sigma2,
             double* out);

/// out[i] = (mu[i] - mu1)^2 / (2 * sigma2[i])
void dist_sq_hier(const double* mu, const double* sigma2, std::size_t n,
                  double mu1, double* out);

/// out[i] = b0 + c_s2 * s2[i] + c_shrink * (xbar[i] - mu0)^2
void beta_x_batch(const double* xbar, const double* s2, std::size_t n, double b0,
                  double c_s2, double c_shrink, double mu0, double* out);

std::size_t count_le(const double* x, std::size_t n, double t);
std::size_t count_ge(const double* x, std::size_t n, double t);

/// #{ i : |x[i] - center| >= halfwidth }
std::size_t count_abs_ge(const double* x, std::size_t n, double center,
                         double halfwidth);

// Scalar reference implementations, always available (equivalence tests).
namespace scalar {
void dist_sq(const double* mu, std::size_t n, double mu1, double inv_two_sigma2,
             double* out);
void dist_sq_hier(const double* mu, const double* sigma2, std::size_t n,
                  double mu1, double* out);
void beta_x_batch(const double* xbar, const double* s2, std::size_t n, double b0,
                  double c_s2, double c_shrink, double mu0, double* out);
std::size_t count_le(const double* x, std::size_t n, double t);
std::size_t count_ge(const double* x, std::size_t n, double t);
std::size_t count_abs_ge(const double* x, std::size_t n, double center,
                         double halfwidth);
}  // namespace scalar

}  // namespace rbtest::kern

#endif
