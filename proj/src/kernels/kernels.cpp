// Apache License, Version 2.0, refer to LICENSE.txt
//
// Runtime dispatch between the scalar reference kernels and the AVX2
// variants. The choice is made once, from CPU capabilities plus the
// RBTEST_KERNELS environment override.
#include "rbtest/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace rbtest::kern {

#if defined(__x86_64__) || defined(_M_X64)
#define RBTEST_HAVE_AVX2_VARIANT 1
namespace avx2 {
void dist_sq(const double*, std::size_t, double, double, double*);
void dist_sq_hier(const double*, const double*, std::size_t, double, double*);
void beta_x_batch(const double*, const double*, std::size_t, double, double,
                  double, double, double*);
std::size_t count_le(const double*, std::size_t, double);
std::size_t count_ge(const double*, std::size_t, double);
std::size_t count_abs_ge(const double*, std::size_t, double, double);
}  // namespace avx2
#endif

namespace {

bool avx2_usable() {
#if defined(RBTEST_HAVE_AVX2_VARIANT)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend pick_default() {
  if (const char* env = std::getenv("RBTEST_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_usable()) return Backend::avx2;
  }
  return avx2_usable() ? Backend::avx2 : Backend::scalar;
}

Backend g_backend = pick_default();

}  // namespace

Backend active_backend() { return g_backend; }

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_usable()) {
    throw std::runtime_error("kern::set_backend: AVX2 not available on this CPU");
  }
  g_backend = b;
}

#if defined(RBTEST_HAVE_AVX2_VARIANT)
#define RBTEST_DISPATCH(fn, ...)                                   \
  (g_backend == Backend::avx2 ? avx2::fn(__VA_ARGS__)              \
                              : scalar::fn(__VA_ARGS__))
#else
#define RBTEST_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void dist_sq(const double* mu, std::size_t n, double mu1, double inv_two_sigma2,
             double* out) {
  RBTEST_DISPATCH(dist_sq, mu, n, mu1, inv_two_sigma2, out);
}

void dist_sq_hier(const double* mu, const double* sigma2, std::size_t n,
                  double mu1, double* out) {
  RBTEST_DISPATCH(dist_sq_hier, mu, sigma2, n, mu1, out);
}

void beta_x_batch(const double* xbar, const double* s2, std::size_t n, double b0,
                  double c_s2, double c_shrink, double mu0, double* out) {
  RBTEST_DISPATCH(beta_x_batch, xbar, s2, n, b0, c_s2, c_shrink, mu0, out);
}

std::size_t count_le(const double* x, std::size_t n, double t) {
  return RBTEST_DISPATCH(count_le, x, n, t);
}

std::size_t count_ge(const double* x, std::size_t n, double t) {
  return RBTEST_DISPATCH(count_ge, x, n, t);
}

std::size_t count_abs_ge(const double* x, std::size_t n, double center,
                         double halfwidth) {
  return RBTEST_DISPATCH(count_abs_ge, x, n, center, halfwidth);
}

}  // namespace rbtest::kern
