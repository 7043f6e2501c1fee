// Apache License, Version 2.0, refer to LICENSE.txt
#ifndef RBTEST_MODEL_HPP
#define RBTEST_MODEL_HPP

#include <optional>
#include <span>

#include "rbtest/random.hpp"

namespace rbtest {

enum class Variant { known_variance, unknown_variance };

/// Sufficient statistics of the sample: n, x-bar and s^2 (divisor n-1).
struct DataSummary {
  int n = 0;
  double mean = 0.0;
  double sample_variance = 0.0;
  std::optional<double> known_sigma2;

  /// One-pass (Welford) reduction of raw observations.
  static DataSummary from_raw(std::span<const double> xs,
                              std::optional<double> known_sigma2 = std::nullopt);

  /// Throws std::invalid_argument on violated invariants.
  void validate() const;
};

/// Expert interval (a, b) holding the mean with virtual certainty gamma,
/// plus bounds s1 <= s2 on the half-length of the data spread interval
/// (unknown-variance case only).
struct ElicitationInput {
  double a = 0.0;
  double b = 0.0;
  double gamma = 0.999;
  double s1 = 0.0;
  double s2 = 0.0;

  void validate(Variant variant) const;
};

struct Hyperparameters {
  Variant variant = Variant::known_variance;
  double mu0 = 0.0;
  double lambda0 = 1.0;
  std::optional<double> alpha0;
  std::optional<double> beta0;

  void validate() const;
};

struct PosteriorSpec {
  Variant variant = Variant::known_variance;
  double mu_x = 0.0;
  // known variance
  double sigma_x2 = 0.0;
  // unknown variance
  double alpha_x = 0.0;
  double beta_x = 0.0;
  double lambda_x2 = 0.0;
};

/// mu0 = (a+b)/2, lambda0 = (b-a) / (2 sigma Phi^-1((1+gamma)/2)).
Hyperparameters elicit_known_variance(const ElicitationInput& input, double sigma);

/// mu0 = (a+b)/2, lambda0 = ((b-a)/2)/s2, and (alpha0, beta0) from the
/// two-quantile gamma solve with targets Phi^-1((1+gamma)/2)^2 / s_i^2.
Hyperparameters elicit_unknown_variance(const ElicitationInput& input);

PosteriorSpec posterior_known_variance(const Hyperparameters& hp,
                                       const DataSummary& data);

/// Conjugate normal-gamma update:
///   alpha_x = alpha0 + n/2
///   beta_x  = beta0 + (n-1)s^2/2 + n(xbar-mu0)^2 / (2(n lambda0^2 + 1))
///   mu_x    = (n + 1/lambda0^2)^-1 (mu0/lambda0^2 + n xbar)
///   lambda_x^2 = (n + 1/lambda0^2)^-1
PosteriorSpec posterior_unknown_variance(const Hyperparameters& hp,
                                         const DataSummary& data);

struct ParamDraw {
  double mu;
  double sigma2;
};

/// Known variance: mu ~ N(mu0, lambda0^2 sigma2) with sigma2 passed through.
/// Unknown: 1/sigma2 ~ gamma_rate(alpha0, beta0), then mu | sigma2.
ParamDraw sample_prior(RandomStream& stream, const Hyperparameters& hp,
                       std::optional<double> sigma2 = std::nullopt);

ParamDraw sample_posterior(RandomStream& stream, const PosteriorSpec& post);

}  // namespace rbtest

#endif
