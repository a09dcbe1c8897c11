#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deepmh/config.hpp"
#include "deepmh/prior.hpp"
#include "deepmh/sampler.hpp"

namespace deepmh {

/// Everything a command needs besides its config: the resolved output
/// directory, the master seed and the thread cap.
struct RunContext {
  Config config;
  std::filesystem::path out_dir;
  std::uint64_t seed = 0;
  int threads = 0;
  std::ostream* log = nullptr;
};

/// `seed_override` and `out_override` come from the command line and win
/// over `seed` and `output.dir` in the config.
RunContext make_context(Config config, std::optional<std::uint64_t> seed_override,
                        std::optional<std::filesystem::path> out_override, int threads,
                        std::ostream& log);

/// Independent 64-bit stream seed for (base, a, b) via splitmix64 mixing.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b);

void cmd_generate(const RunContext& ctx);
void cmd_train(const RunContext& ctx);
void cmd_pca_fit(const RunContext& ctx);
void cmd_sample(const RunContext& ctx);
void cmd_dropout(const RunContext& ctx);
void cmd_evaluate(const RunContext& ctx);
void cmd_tune(const RunContext& ctx);

const std::vector<std::string_view>& command_names();
/// Dispatches by name; unknown names raise ConfigError.
void run_command(std::string_view name, const RunContext& ctx);

/// Validated `task` key, if present.
std::optional<std::string> task_of(const Config& cfg);
/// Prior described by the `prior.*` keys for a network with `output_dim` outputs.
PriorSpec build_prior(const Config& cfg, Eigen::Index output_dim);
InverseConfig build_inverse(const Config& cfg);
/// Per-dimension proposal scales: `sampler.sigma`, or `sampler.sigma_z` and
/// `sampler.sigma_s` for a PCA prior.
Vector build_proposal_sigma(const Config& cfg, const PriorSpec& prior);

}  // namespace deepmh
