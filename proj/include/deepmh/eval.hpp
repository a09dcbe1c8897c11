#pragma once

#include <span>
#include <string>
#include <vector>

#include "deepmh/net.hpp"

namespace deepmh {

struct PosteriorSummary {
  Eigen::Index n_samples = 0;
  Vector mean;
  Matrix covariance;  // divisor n - 1
  double trace = 0.0;
  Vector per_dim_std;
};

/// Rows of `samples` are draws. Needs at least two rows.
PosteriorSummary summarize(const Matrix& samples);

double rmse(const Vector& pred, const Vector& truth);

struct Correlation {
  double r = 0.0;
  double p = 1.0;
};

struct CorrelationOptions {
  /// Exact two-sided permutation p-value by full enumeration (n <= 10).
  bool exact_permutation = false;
};

/// Average ranks (1-based); ties share the mean of their positions.
Vector average_ranks(std::span<const double> v);

/// Product-moment correlation; p from the t approximation with n - 2 dof.
Correlation pearson(std::span<const double> u, std::span<const double> v,
                    const CorrelationOptions& opts = {});
/// Pearson correlation of average ranks; same p-value method.
Correlation spearman(std::span<const double> u, std::span<const double> v,
                     const CorrelationOptions& opts = {});

/// Two-sided p-value of r under Student-t(n - 2).
double t_test_pvalue(double r, std::size_t n);

struct UncErrRecord {
  std::string case_id;
  double uncertainty = 0.0;
  double error = 0.0;
};

struct CorrelationReport {
  std::size_t n = 0;
  Correlation spearman;
  Correlation pearson;

  std::string to_json() const;
  std::string to_csv() const;
};

CorrelationReport correlation_report(std::span<const UncErrRecord> records,
                                     const CorrelationOptions& opts = {});

/// Regular grid per axis: `points` nodes from lo to hi inclusive.
struct GridAxis {
  double lo = 0.0;
  double hi = 1.0;
  int points = 101;

  double spacing() const { return (hi - lo) / (points - 1); }
  double at(int i) const { return lo + spacing() * i; }
};

struct KdeGrid {
  std::vector<GridAxis> axes;
  Vector bandwidth;  // per dimension
  /// Row-major over axes: index = i0 * points1 + i1 for 2-D.
  Vector density;

  double cell_volume() const;
  /// Riemann mass, sum(density) * cell volume.
  double mass() const;
};

/// Per-dimension Silverman bandwidths.
Vector silverman_bandwidths(const Matrix& samples);

/// Axes spanning [min - pad * h, max + pad * h] per dimension.
std::vector<GridAxis> default_axes(const Matrix& samples, const Vector& bandwidth,
                                   int points, double pad = 5.0);

/// Product-Gaussian KDE on a grid (d in {1, 2}), parallel over grid nodes.
KdeGrid kde_grid(const Matrix& samples, std::vector<GridAxis> axes, Vector bandwidth);
/// Serial reference implementation of kde_grid.
KdeGrid kde_grid_serial(const Matrix& samples, std::vector<GridAxis> axes, Vector bandwidth);

/// Grid coordinates of local maxima of a 1-D grid whose density is at least
/// `min_relative_height` times the global maximum and whose topographic
/// prominence is at least `min_relative_prominence` times that maximum.
std::vector<double> find_modes_1d(const KdeGrid& grid, double min_relative_height = 0.01,
                                  double min_relative_prominence = 0.0);

/// Published uncertainty/error correlations of Deep MH on CT slice
/// localisation. Documentation only; desk-scale runs do not reproduce them.
namespace reference {
inline constexpr double kCtSpearmanR = 0.55;
inline constexpr double kCtSpearmanP = 1e-7;
inline constexpr double kCtPearsonR = 0.64;
inline constexpr double kCtPearsonP = 2e-9;
// Two published subset p-values read "8 x 10^2" and "5 x 10^2", which cannot
// be probabilities (10^-2 was probably meant). Not resolved here.
}  // namespace reference

}  // namespace deepmh
