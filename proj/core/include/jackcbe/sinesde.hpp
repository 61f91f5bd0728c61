#pragma once

#include <cstdint>
#include <vector>

#include "jackcbe/pointproc.hpp"
#include "jackcbe/rng.hpp"

namespace jackcbe {

struct SDEConfig {
  double beta = 2.0;
  double t0 = 1e-4;
  /// Steps of the geometric grid t_k = t0^{1 - k/steps}.
  int steps = 2000;
  /// If positive, steps longer than this are split evenly.
  double max_dt = 0.0;
  std::vector<double> x_grid;
  /// Largest allowed monotone repair, as a fraction of the grid span.
  double repair_tolerance = 1e-3;

  void validate() const;
  std::vector<double> time_grid() const;
};

/// Knots k*spacing inside [a, b], together with a and b themselves. Windows
/// that share a spacing share their interior knots.
std::vector<double> anchored_grid(Window w, double spacing);

struct MonotonePath {
  std::vector<double> x_grid;
  std::vector<double> u;               ///< X_x(1) after repair
  double repair_magnitude = 0.0;       ///< max |u - u_raw|
  double violation_fraction = 0.0;     ///< adjacent pairs with u_raw decreasing, before repair
};

/// Least-squares nondecreasing fit (pool adjacent violators).
std::vector<double> isotonic_fit(const std::vector<double>& values);

/// Euler-Maruyama for dX = x dt + 2/sqrt(beta t) Im{(e^{iX} - 1)(dB1 + i dB2)}
/// from X(t0) = x t0 to t = 1, with one Brownian path shared by the whole grid.
MonotonePath simulate_sine_path(const SDEConfig& cfg, Rng& rng);

struct SineSample {
  Configuration config;
  MonotonePath path;
  double omega = 0.0;
};

/// omega uniform on [0, 2 pi), then theta_map of the interpolated path on the grid window.
SineSample sample_sine_configuration(const SDEConfig& cfg, Rng& rng);

}  // namespace jackcbe
