#pragma once

#include <cstdint>
#include <string>

#include "deepmh/table.hpp"

namespace deepmh {

enum class SyntheticKind { bimodal_1d, heteroscedastic, ellipse_shapes };

SyntheticKind parse_synthetic_kind(std::string_view name);
std::string to_string(SyntheticKind kind);

struct SyntheticSpec {
  SyntheticKind kind = SyntheticKind::bimodal_1d;
  int n_train = 500;
  int n_test = 50;
  double noise_std = 0.05;
  std::uint64_t seed = 0;
  // ellipse_shapes only
  int vertices = 16;
  int factors = 3;     // radius, then cos/sin harmonics from order 2 up
  int probes = 8;      // noisy radius readings fed to the network
  double extent = 10.0;
};

void validate(const SyntheticSpec& spec);

/// Train and test tables with columns x0.. and y0.. .
struct SyntheticData {
  CaseTable train;
  CaseTable test;
};

/// bimodal_1d: x ~ U[-1, 1]; y = s (1 + x^2) + e with s = +-1 equiprobable for
///   |x| < 0.3 and s = +1 elsewhere.
/// heteroscedastic: x ~ U[-1, 1]; y = x + x^3 + e, e ~ N(0, (noise_std (0.05 + |x|)^3)^2).
/// ellipse_shapes: closed V-gons with radius r(t) = r0 + sum of harmonics of
///   order >= 2 around a centre drawn from the central 60% of [0, extent]^2.
///   x = (centre, noisy radii at `probes` angles); y = interleaved vertices.
SyntheticData generate(const SyntheticSpec& spec);

}  // namespace deepmh
