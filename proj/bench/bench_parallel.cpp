// Serial reference vs OpenMP kernel for independent chains and KDE grids.
// Thread count follows OMP_NUM_THREADS / DEEPMH_THREADS.

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <memory>
#include <random>
#include <vector>

#include "deepmh/eval.hpp"
#include "deepmh/net.hpp"
#include "deepmh/sampler.hpp"

using namespace deepmh;

namespace {

int thread_cap() {
  const char* env = std::getenv("DEEPMH_THREADS");
  return env ? std::atoi(env) : 0;
}

DeepMhTarget make_target() {
  const std::vector<int> widths{4, 32, 32, 2};
  auto net = std::make_shared<const Network>(Network::random(widths, Activation::tanh, Activation::identity, 7));
  InverseConfig inv;
  inv.sigma_n = 0.05;
  inv.max_iters = 50;
  return DeepMhTarget(net, Vector::Constant(4, 0.3), inv, LikelihoodConfig{50.0}, StandardGaussianPrior{2});
}

std::vector<ChainConfig> chain_configs(int chains) {
  std::vector<ChainConfig> cfgs(static_cast<std::size_t>(chains));
  for (int c = 0; c < chains; ++c) {
    auto& cfg = cfgs[static_cast<std::size_t>(c)];
    cfg.n_steps = 300;
    cfg.proposal_sigma = Vector::Constant(2, 0.3);
    cfg.seed = static_cast<std::uint64_t>(c) + 1;
  }
  return cfgs;
}

Matrix kde_samples(Eigen::Index n, Eigen::Index dim) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> d;
  Matrix m(n, dim);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = d(rng) + (i % 2 ? 2.0 : -2.0);
  return m;
}

void chains_serial(benchmark::State& state) {
  const auto target = make_target();
  const auto cfgs = chain_configs(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_serial(cfgs, target).pool.data());
}

void chains_parallel(benchmark::State& state) {
  const auto target = make_target();
  const auto cfgs = chain_configs(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_parallel(cfgs, target, thread_cap()).pool.data());
}

void kde_serial(benchmark::State& state) {
  const Matrix s = kde_samples(state.range(0), 2);
  const Vector h = silverman_bandwidths(s);
  const auto axes = default_axes(s, h, 101);
  for (auto _ : state) benchmark::DoNotOptimize(kde_grid_serial(s, axes, h).density.data());
}

void kde_parallel(benchmark::State& state) {
  const Matrix s = kde_samples(state.range(0), 2);
  const Vector h = silverman_bandwidths(s);
  const auto axes = default_axes(s, h, 101);
  for (auto _ : state) benchmark::DoNotOptimize(kde_grid(s, axes, h).density.data());
}

}  // namespace

BENCHMARK(chains_serial)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(chains_parallel)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(kde_serial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(kde_parallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
