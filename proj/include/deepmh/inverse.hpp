#pragma once

#include <cstdint>

#include "deepmh/net.hpp"

namespace deepmh {

/// Settings of the inner optimisation
///   x* = argmin_x'  lambda * ||x' - x||^2 + ||f(x') - y'||^2
/// solved by gradient descent started at x + N(0, sigma_n^2 I).
struct InverseConfig {
  double lambda = 1.0;
  double sigma_n = 0.1;
  double step_size = 0.1;
  int max_iters = 500;
  /// <= 0 selects 1e-6 * (1 + input_dim).
  double grad_tol = 0.0;
  std::uint64_t seed = 0;
};

/// Throws ValidationError on an invalid configuration.
void validate(const InverseConfig& cfg);
double effective_grad_tol(const InverseConfig& cfg, Eigen::Index input_dim);

struct EnergyResult {
  Vector x_star;
  /// ||x_star - x||^2.
  double energy = 0.0;
  /// ||f(x_star) - y'||^2.
  double target_residual = 0.0;
  /// Number of gradient evaluations (convergence checks) performed.
  int iters_used = 0;
  bool converged = false;
};

/// Input backpropagation. Non-converged results are returned with
/// converged == false; a non-finite objective throws OptimizationDiverged.
EnergyResult solve_inverse(const Network& net, const Vector& x, const Vector& y_prime,
                           const InverseConfig& cfg);

struct LikelihoodConfig {
  double beta = 1.0;
};

struct LogLikelihood {
  /// -beta * energy; the normalising constant is never formed.
  double log_lik = 0.0;
  EnergyResult result;
};

LogLikelihood log_likelihood(const Network& net, const Vector& x, const Vector& y_prime,
                             const InverseConfig& inv_cfg, const LikelihoodConfig& lik_cfg);

}  // namespace deepmh
