#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace deepmh {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class Activation { identity, relu, tanh };

std::string_view to_string(Activation a);
Activation parse_activation(std::string_view name);

struct DenseLayer {
  Matrix weights;  // out x in
  Vector bias;     // out
  Activation activation = Activation::identity;
  /// Inverted-dropout rate applied to this layer's input during MC sampling.
  double dropout_rate = 0.0;

  Eigen::Index in_dim() const { return weights.cols(); }
  Eigen::Index out_dim() const { return weights.rows(); }
};

/// Immutable feed-forward regression network f(x | theta).
///
/// Construction validates the layer chain, so every Network in circulation
/// has consistent widths and finite weights. Instances are freely shared
/// across threads for forward / input_gradient.
class Network {
 public:
  explicit Network(std::vector<DenseLayer> layers);

  /// Xavier-uniform weights, zero biases. `widths` = {in, hidden..., out}.
  static Network random(std::span<const int> widths, Activation hidden,
                        Activation output, std::uint64_t seed);

  const std::vector<DenseLayer>& layers() const { return layers_; }
  Eigen::Index input_dim() const { return layers_.front().in_dim(); }
  Eigen::Index output_dim() const { return layers_.back().out_dim(); }

  friend bool operator==(const Network& a, const Network& b);

 private:
  std::vector<DenseLayer> layers_;
};

/// Deterministic inference (dropout disabled).
Vector forward(const Network& net, const Vector& x);

/// Scalar loss of the network output. Returns L(y) and writes dL/dy to `grad`.
using OutputLoss = std::function<double(const Vector& y, Vector& grad)>;

/// L(y) = ||y - target||^2.
OutputLoss squared_l2_to(Vector target);

struct LossGradient {
  double loss = 0.0;
  Vector gradient;  // d loss / d x, weights held fixed
};

/// Reverse-mode gradient of `loss(f(x))` with respect to the input.
LossGradient input_gradient(const Network& net, const Vector& x,
                            const OutputLoss& loss);

/// Rows are samples.
struct Dataset {
  Matrix inputs;
  Matrix targets;

  Eigen::Index size() const { return inputs.rows(); }
};

enum class TrainLoss { squared_l2 };

struct TrainConfig {
  double learning_rate = 0.01;
  int epochs = 100;
  int batch_size = 32;
  std::uint64_t seed = 0;
  TrainLoss loss = TrainLoss::squared_l2;
};

struct TrainResult {
  Network net;
  /// Entry 0 is the mean loss before any update, then one entry per epoch.
  std::vector<double> loss_curve;
};

/// Mean over samples of ||f(x) - y||^2.
double mean_squared_loss(const Network& net, const Dataset& data);

/// Minibatch SGD with a fixed learning rate and per-epoch seeded shuffling.
TrainResult train_sgd(const Network& net, const Dataset& data,
                      const TrainConfig& cfg);

/// `n` forward passes with independent inverted-dropout masks at `rate` on
/// every layer input. rate == 0 reproduces forward() exactly.
std::vector<Vector> dropout_sample(const Network& net, const Vector& x, int n,
                                   double rate, std::uint64_t seed);

/// Text model format `deepmh-model v1`.
std::string serialize_model(const Network& net);
Network parse_model(std::string_view text);
void save_model(const Network& net, const std::string& path);
Network load_model(const std::string& path);

}  // namespace deepmh
