#pragma once

#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include "deepmh/net.hpp"

namespace deepmh {

/// Axis-aligned box; lo < hi per dimension.
struct Box {
  Vector lo;
  Vector hi;

  Eigen::Index dim() const { return lo.size(); }
  bool contains(const Vector& v) const;
};

/// Probabilistic PCA shape model y = U diag(sqrt(S)) z + mu + tile(s, V).
/// Shapes are interleaved vertex coordinates (x0, y0, x1, y1, ...).
struct PcaPrior {
  Matrix basis;        // U: 2V x k, column-orthonormal
  Vector variances;    // S: k, positive
  Vector mean;         // mu: 2V
  Box shift_box;       // support of the uniform prior on s (2-D)

  Eigen::Index vertices() const { return mean.size() / 2; }
  Eigen::Index components() const { return basis.cols(); }
  /// k + 2: concatenated (z, s).
  Eigen::Index param_dim() const { return components() + 2; }
};

/// Fits mu, U, S on rows of `shapes` (n x 2V). S uses the n-1 divisor.
/// The shift box is left empty; callers attach one.
PcaPrior fit_pca(const Matrix& shapes, int k);

/// Numerical rank of the centred shape matrix.
int pca_rank(const Matrix& shapes);

/// Fraction of total centred variance captured by each retained component.
Vector retained_variance(const Matrix& shapes, const PcaPrior& prior);

Vector shape_from_params(const PcaPrior& prior, const Vector& z, const Vector& s);
/// Least-squares z for a given shift (inverse of shape_from_params on the span).
Vector project(const PcaPrior& prior, const Vector& shape, const Vector& s);

/// Central `fraction` of [0, extent]^2.
Box central_shift_box(double extent, double fraction = 0.6);

std::string serialize_pca(const PcaPrior& prior);
PcaPrior parse_pca(std::string_view text);
void save_pca(const PcaPrior& prior, const std::string& path);
PcaPrior load_pca(const std::string& path);

struct StandardGaussianPrior {
  Eigen::Index dim = 1;
};

struct UniformBoxPrior {
  Box box;
};

/// One-dimensional Gaussian-kernel density over `points`.
struct Kde1dPrior {
  double bandwidth = 1.0;
  Vector points;
};

struct PcaShapePrior {
  std::shared_ptr<const PcaPrior> model;
};

using PriorSpec =
    std::variant<StandardGaussianPrior, UniformBoxPrior, Kde1dPrior, PcaShapePrior>;

/// Dimension of the parameter vector the prior is defined on.
Eigen::Index param_dim(const PriorSpec& spec);
void validate(const PriorSpec& spec);

/// Unnormalised log-prior: constants that cancel in Metropolis-Hastings
/// ratios are dropped, except for the KDE, which is a proper density.
/// Returns -inf outside the support.
double log_prior(const PriorSpec& spec, const Vector& value);

/// Exact draw from the prior (used for random chain initialisation).
Vector draw_from_prior(const PriorSpec& spec, std::mt19937_64& rng);

/// Silverman's rule of thumb, 0.9 * min(sd, IQR / 1.34) * n^(-1/5).
double silverman_bandwidth(const Vector& samples);

}  // namespace deepmh
