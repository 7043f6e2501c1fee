// Apache License, Version 2.0, refer to LICENSE.txt
#include "rbtest/distributions.hpp"

#include <cmath>
#include <limits>

#include "rbtest/special_functions.hpp"

namespace rbtest {

double gamma_cdf(const GammaRateParams& params, double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw std::domain_error("gamma_cdf: x must be finite and >= 0");
  }
  return lower_gamma_reg(params.shape, params.rate * x);
}

namespace {

// Quantile of gamma(shape, rate = 1).
double gamma_quantile_unit(double a, double p) {
  // Wilson-Hilferty start, with a log-series fallback for small shapes where
  // the cube can go nonpositive.
  const double z = norm_quantile(p);
  double x = a * std::pow(1.0 - 1.0 / (9.0 * a) + z / (3.0 * std::sqrt(a)), 3);
  if (!(x > 0.0) || !std::isfinite(x)) {
    x = std::exp((std::log(p) + std::lgamma(a + 1.0)) / a);
  }

  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 200; ++it) {
    const double f = lower_gamma_reg(a, x) - p;
    if (f > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    const double logpdf = (a - 1.0) * std::log(x) - x - std::lgamma(a);
    double step = f / std::exp(logpdf);
    double next = x - step;
    if (!(next > lo && next < hi)) {
      next = std::isinf(hi) ? x * 2.0 : 0.5 * (lo + hi);
    }
    if (std::fabs(next - x) <= 1e-15 * x || std::fabs(f) < 1e-15) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

}  // namespace

double gamma_quantile(const GammaRateParams& params, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("gamma_quantile: p must lie in (0, 1)");
  }
  return gamma_quantile_unit(params.shape, p) / params.rate;
}

double kl_normal(const NormalParams& p, const NormalParams& q) {
  const double dm = p.mean - q.mean;
  return 0.5 * std::log(q.variance / p.variance) +
         (p.variance + dm * dm) / (2.0 * q.variance) - 0.5;
}

double sample_normal(RandomStream& stream, const NormalParams& params) {
  return params.mean + std::sqrt(params.variance) * norm_quantile(stream.next_open_double());
}

namespace {

// Marsaglia & Tsang (2000), valid for shape >= 1.
double sample_gamma_unit_ge1(RandomStream& stream, double shape) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double z = norm_quantile(stream.next_open_double());
    const double x = 1.0 + c * z;
    if (x <= 0.0) continue;
    const double v = x * x * x;
    const double u = stream.next_open_double();
    const double z2 = z * z;
    if (u < 1.0 - 0.0331 * z2 * z2) return d * v;
    if (std::log(u) < 0.5 * z2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

double sample_gamma_rate(RandomStream& stream, const GammaRateParams& params) {
  double g;
  if (params.shape >= 1.0) {
    g = sample_gamma_unit_ge1(stream, params.shape);
  } else {
    g = sample_gamma_unit_ge1(stream, params.shape + 1.0) *
        std::pow(stream.next_open_double(), 1.0 / params.shape);
  }
  return g / params.rate;
}

double sample_chi_square(RandomStream& stream, double df) {
  if (!(df > 0.0)) {
    throw std::domain_error("sample_chi_square: df must be > 0");
  }
  return sample_gamma_rate(stream, GammaRateParams(0.5 * df, 0.5));
}

GammaRateParams solve_two_quantile_gamma(double upper_target, double lower_target) {
  if (!(lower_target > 0.0) || !(upper_target > lower_target)) {
    throw std::domain_error(
        "solve_two_quantile_gamma: requires 0 < lower_target < upper_target");
  }
  const double target_log_ratio = std::log(upper_target / lower_target);

  // log q_0.9995(a,1) - log q_0.0005(a,1); strictly decreasing in a.
  const auto log_ratio = [](double a) {
    return std::log(gamma_quantile_unit(a, 0.9995)) -
           std::log(gamma_quantile_unit(a, 0.0005));
  };

  double lo = 1e-3, hi = 1e3;
  int guard = 0;
  while (log_ratio(lo) < target_log_ratio) {
    lo *= 0.25;
    if (++guard > 60) {
      throw ConvergenceError("solve_two_quantile_gamma: shape bracket not found",
                             log_ratio(lo) - target_log_ratio, 0.0);
    }
  }
  guard = 0;
  while (log_ratio(hi) > target_log_ratio) {
    hi *= 4.0;
    if (++guard > 60) {
      throw ConvergenceError("solve_two_quantile_gamma: shape bracket not found",
                             log_ratio(hi) - target_log_ratio, 0.0);
    }
  }
  for (int it = 0; it < 200 && hi / lo > 1.0 + 1e-13; ++it) {
    const double mid = std::sqrt(lo * hi);
    if (log_ratio(mid) > target_log_ratio) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double shape = std::sqrt(lo * hi);
  const double rate = gamma_quantile_unit(shape, 0.9995) / upper_target;
  const GammaRateParams out(shape, rate);

  const double ru = gamma_quantile(out, 0.9995) / upper_target - 1.0;
  const double rl = gamma_quantile(out, 0.0005) / lower_target - 1.0;
  if (std::fabs(ru) > 1e-6 || std::fabs(rl) > 1e-6) {
    throw ConvergenceError("solve_two_quantile_gamma: residual tolerance not met",
                           ru, rl);
  }
  return out;
}

}  // namespace rbtest
