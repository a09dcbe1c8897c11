#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "deepmh/inverse.hpp"
#include "deepmh/prior.hpp"

namespace deepmh {

struct LikelihoodEvaluation {
  double log_lik = 0.0;
  double energy = 0.0;
  bool converged = true;
};

/// Unnormalised posterior over the chain's parameter vector.
///
/// Implementations must be safe to call concurrently from several chains.
class TargetDensity {
 public:
  virtual ~TargetDensity() = default;

  virtual Eigen::Index dim() const = 0;
  virtual double log_prior(const Vector& params) const = 0;
  /// May throw OptimizationDiverged; the chain treats that as a rejection.
  virtual LikelihoodEvaluation log_likelihood(const Vector& params,
                                              std::uint64_t seed) const = 0;
  virtual Vector draw_initial(std::mt19937_64& rng) const = 0;
  /// Maps chain parameters to the network's output space.
  virtual Vector to_output(const Vector& params) const { return params; }
};

/// Deep MH target for one test input x: input-backpropagation likelihood
/// times the prior. A PCA prior switches the parameterisation to (z, s) and
/// the likelihood is evaluated on shape_from_params(z, s).
class DeepMhTarget final : public TargetDensity {
 public:
  DeepMhTarget(std::shared_ptr<const Network> net, Vector x, InverseConfig inverse,
               LikelihoodConfig likelihood, PriorSpec prior);

  Eigen::Index dim() const override;
  double log_prior(const Vector& params) const override;
  LikelihoodEvaluation log_likelihood(const Vector& params, std::uint64_t seed) const override;
  Vector draw_initial(std::mt19937_64& rng) const override;
  Vector to_output(const Vector& params) const override;

  const Network& network() const { return *net_; }
  const Vector& input() const { return x_; }
  const PriorSpec& prior() const { return prior_; }

 private:
  std::shared_ptr<const Network> net_;
  Vector x_;
  InverseConfig inverse_;
  LikelihoodConfig likelihood_;
  PriorSpec prior_;
};

/// Contiguous run of parameters sharing one Gaussian proposal scale.
struct ProposalBlock {
  Eigen::Index size = 1;
  double sigma = 1.0;
};

/// Per-dimension sigma vector from blocks.
Vector expand_scales(std::span<const ProposalBlock> blocks);

struct ChainConfig {
  /// Recorded states, including the initial one.
  int n_steps = 1000;
  int burn_in = 0;
  /// Per-dimension proposal standard deviations.
  Vector proposal_sigma;
  std::uint64_t seed = 0;
  /// Explicit start; empty means a random draw from the prior.
  std::optional<Vector> init;
};

void validate(const ChainConfig& cfg, Eigen::Index dim);

struct ChainState {
  Vector current;
  double log_lik = 0.0;
  double log_prior = 0.0;
  double energy = 0.0;
  int step = 0;
  int n_accepted = 0;
  int inner_opt_failures = 0;
  int inner_nonconverged = 0;
};

/// current + N(0, diag(sigma^2)). Symmetric, so no Hastings correction.
Vector propose(const Vector& current, const Vector& sigma, std::mt19937_64& rng);

/// min(0, delta log-likelihood + delta log-prior); -inf for zero prior.
double log_accept_ratio(const ChainState& state, double log_lik_new, double log_prior_new);

/// Evaluates the initial state. Random starts are redrawn until the
/// likelihood is finite (up to 100 attempts).
ChainState initial_state(const ChainConfig& cfg, const TargetDensity& target,
                         std::mt19937_64& rng);

/// One Metropolis-Hastings transition. Each call consumes the proposal noise,
/// one inner-optimiser seed and one uniform from `rng`, accepted or not.
bool step(ChainState& state, const TargetDensity& target, const Vector& sigma,
          std::mt19937_64& rng);

struct ChainRecord {
  Matrix samples;                 // n_steps x dim, row 0 is the initial state
  std::vector<char> accept_flags; // accept_flags[0] is always 0
  std::vector<double> energies;   // energy of the state in each row
  /// Mean of accept_flags over rows max(1, burn_in) .. n_steps-1; 0 if empty.
  double acceptance_rate = 0.0;
  int burn_in = 0;
  int inner_opt_failures = 0;
  int inner_nonconverged = 0;
  std::uint64_t seed = 0;

  Matrix post_burn_in() const { return samples.bottomRows(samples.rows() - burn_in); }
};

ChainRecord run_chain(const ChainConfig& cfg, const TargetDensity& target);

struct PooledRun {
  std::vector<ChainRecord> chains;
  /// Post-burn-in samples of all chains, stacked in chain order.
  Matrix pool;
  std::vector<std::string> warnings;
};

/// Independent chains on OpenMP threads (`threads` <= 0: runtime default).
/// Output is identical to run_serial for the same configs.
PooledRun run_parallel(std::span<const ChainConfig> cfgs, const TargetDensity& target,
                       int threads = 0);
/// Serial reference implementation of run_parallel.
PooledRun run_serial(std::span<const ChainConfig> cfgs, const TargetDensity& target);

struct ChainDiagnostics {
  double acceptance_rate = 0.0;
  /// Running mean of each dimension over the full chain (trace-plot export).
  Matrix running_mean;
  /// Computed on post-burn-in samples.
  Vector lag1_autocorrelation;
  Vector ess;
  std::vector<std::string> warnings;
};

/// Sample autocorrelation at `lag` (biased estimator, divisor n).
double autocorrelation(std::span<const double> x, std::size_t lag);
/// Geyer initial-positive-sequence ESS. Constant input yields 1.
double effective_sample_size(std::span<const double> x);

ChainDiagnostics diagnostics(const ChainRecord& record);

struct TuneConfig {
  Vector base_sigma;
  double target_low = 0.35;
  double target_high = 0.45;
  int n_steps = 2000;
  int burn_in = 500;
  int chains = 1;
  int max_rounds = 20;
  std::uint64_t seed = 0;
  std::optional<Vector> init;
};

struct TuneResult {
  double multiplier = 1.0;
  Vector sigma;
  double acceptance_rate = 0.0;
  bool in_band = false;
  /// (multiplier, acceptance rate) per evaluated setting.
  std::vector<std::pair<double, double>> history;
};

/// Scales base_sigma by a common multiplier until the post-burn-in
/// acceptance rate of a seeded pilot run lands inside the target band.
TuneResult tune_proposal(const TargetDensity& target, const TuneConfig& cfg, int threads = 0);

}  // namespace deepmh
