// Apache License, Version 2.0, refer to LICENSE.txt
//
// AVX2 kernels. Only correctly rounded vector ops (add/sub/mul/div) are used
// and the file is built with -ffp-contract=off, so results are bit-identical
// to the scalar reference; tails under one vector width fall through to it.
#include "rbtest/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

#include <cstdint>

namespace rbtest::kern::avx2 {

namespace {
constexpr std::size_t W = 4;  // doubles per __m256d

inline std::size_t mask_popcount(__m256d cmp) {
  return static_cast<std::size_t>(__builtin_popcount(
      static_cast<unsigned>(_mm256_movemask_pd(cmp))));
}
}  // namespace

void dist_sq(const double* mu, std::size_t n, double mu1, double inv_two_sigma2,
             double* out) {
  const __m256d vmu1 = _mm256_set1_pd(mu1);
  const __m256d vs = _mm256_set1_pd(inv_two_sigma2);
  std::size_t i = 0;
  for (; i + W <= n; i += W) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(mu + i), vmu1);
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_mul_pd(d, d), vs));
  }
  scalar::dist_sq(mu + i, n - i, mu1, inv_two_sigma2, out + i);
}

void dist_sq_hier(const double* mu, const double* sigma2, std::size_t n,
                  double mu1, double* out) {
  const __m256d vmu1 = _mm256_set1_pd(mu1);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + W <= n; i += W) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(mu + i), vmu1);
    const __m256d denom = _mm256_mul_pd(two, _mm256_loadu_pd(sigma2 + i));
    _mm256_storeu_pd(out + i, _mm256_div_pd(_mm256_mul_pd(d, d), denom));
  }
  scalar::dist_sq_hier(mu + i, sigma2 + i, n - i, mu1, out + i);
}

void beta_x_batch(const double* xbar, const double* s2, std::size_t n, double b0,
                  double c_s2, double c_shrink, double mu0, double* out) {
  const __m256d vb0 = _mm256_set1_pd(b0);
  const __m256d vcs = _mm256_set1_pd(c_s2);
  const __m256d vcx = _mm256_set1_pd(c_shrink);
  const __m256d vmu0 = _mm256_set1_pd(mu0);
  std::size_t i = 0;
  for (; i + W <= n; i += W) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(xbar + i), vmu0);
    const __m256d a = _mm256_add_pd(vb0, _mm256_mul_pd(vcs, _mm256_loadu_pd(s2 + i)));
    _mm256_storeu_pd(out + i,
                     _mm256_add_pd(a, _mm256_mul_pd(vcx, _mm256_mul_pd(d, d))));
  }
  scalar::beta_x_batch(xbar + i, s2 + i, n - i, b0, c_s2, c_shrink, mu0, out + i);
}

std::size_t count_le(const double* x, std::size_t n, double t) {
  const __m256d vt = _mm256_set1_pd(t);
  std::size_t c = 0;
  std::size_t i = 0;
  for (; i + W <= n; i += W) {
    c += mask_popcount(_mm256_cmp_pd(_mm256_loadu_pd(x + i), vt, _CMP_LE_OQ));
  }
  return c + scalar::count_le(x + i, n - i, t);
}

std::size_t count_ge(const double* x, std::size_t n, double t) {
  const __m256d vt = _mm256_set1_pd(t);
  std::size_t c = 0;
  std::size_t i = 0;
  for (; i + W <= n; i += W) {
    c += mask_popcount(_mm256_cmp_pd(_mm256_loadu_pd(x + i), vt, _CMP_GE_OQ));
  }
  return c + scalar::count_ge(x + i, n - i, t);
}

std::size_t count_abs_ge(const double* x, std::size_t n, double center,
                         double halfwidth) {
  const __m256d vc = _mm256_set1_pd(center);
  const __m256d vh = _mm256_set1_pd(halfwidth);
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  std::size_t c = 0;
  std::size_t i = 0;
  for (; i + W <= n; i += W) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), vc);
    const __m256d ad = _mm256_andnot_pd(sign_mask, d);
    c += mask_popcount(_mm256_cmp_pd(ad, vh, _CMP_GE_OQ));
  }
  return c + scalar::count_abs_ge(x + i, n - i, center, halfwidth);
}

}  // namespace rbtest::kern::avx2

#endif  // __AVX2__
