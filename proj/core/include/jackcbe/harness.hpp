#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jackcbe/circle_function.hpp"
#include "jackcbe/line_function.hpp"
#include "jackcbe/sinesde.hpp"

namespace jackcbe {

struct McEstimate {
  Complex mean;
  double stderr_mean = 0.0;
  std::size_t samples = 0;
};

/// Monte Carlo E prod_j e^{f(theta_j)} over the n-point circular ensemble.
McEstimate cbe_multiplicative_mc(const CircleFunction& f, int n, double beta, std::size_t samples, std::uint64_t seed);

/// Monte Carlo E exp(sum_j f(n theta_j)).
McEstimate cbe_line_mc(const LineFunction& f, int n, double beta, std::size_t samples, std::uint64_t seed);

/// Monte Carlo E e^{S_f} for the sine process; f must have compact support,
/// which becomes the simulation window.
McEstimate sine_exp_mc(const LineFunction& f, const SDEConfig& base, double grid_spacing, std::size_t paths,
                       std::uint64_t seed);

double normal_cdf(double x);

/// sup_x |F_m(x) - F(x)| for sorted samples.
double ks_distance(const std::vector<double>& sorted_samples, const std::function<double(double)>& cdf);

using CharFunction = std::function<Complex(double)>;

/// 24 / (sqrt(2 pi^2) T) + (1/pi) int_{-T}^{T} |phi1(y) - phi2(y)| / |y| dy.
double feller_bound(const CharFunction& phi1, const CharFunction& phi2, double T);

/// Smooth cutoff: 1 on |x| <= W - taper, 0 on |x| >= W, raised cosine between.
struct CLTWindow {
  double half_width = 0.0;
  double taper = 0.0;
  double total_seminorm = 0.0;      ///< ||f_R||^2_{1/2}
  double tail_seminorm_bound = 0.0; ///< bound on ||f_R (1 - cutoff)||^2_{1/2}
  double cutoff(double x) const;
};

/// Window where the dropped part carries under `tail_ratio` of the H_{1/2}
/// mass and its a-priori bias sqrt((2/beta) tail) is at most half the
/// Monte Carlo resolution 1/sqrt(paths).
CLTWindow choose_clt_window(const LineFunction& f_r, double beta, std::size_t paths, double tail_ratio = 1e-3);

struct CLTConfig {
  double beta = 2.0;
  std::vector<double> r_list{4.0, 16.0, 64.0};
  std::size_t paths = 10000;
  std::uint64_t seed = 20261019;
  int steps = 2000;
  double t0 = 1e-4;
  double max_dt = 0.0;
  double grid_spacing = 0.5;
  std::size_t max_grid_points = 800;
  double tail_ratio = 1e-3;
};

struct CLTRow {
  double r = 0.0;
  CLTWindow window;
  std::size_t grid_points = 0;
  double mean = 0.0;
  double stderr_mean = 0.0;
  double variance = 0.0;
  double ks = 0.0;
  double laplace = 0.0;          ///< empirical E e^{S-bar}
  double laplace_stderr = 0.0;
  double c_hat = 0.0;            ///< empirical Var(S-bar) / ||f_R||^2_{1/2}
  double bias_estimate = 0.0;    ///< sqrt(c_hat * tail bound)
  bool truncation_flag = false;  ///< bias estimate above the MC error of the mean
  double max_repair = 0.0;
  std::size_t edge_points = 0;
};

struct ExperimentRecord {
  CLTConfig config;
  LineFunction f;
  std::vector<CLTRow> rows;
  double fitted_c = 0.0;  ///< least squares for KS(R) = C / sqrt(ln R)
  double wall_clock_seconds = 0.0;

  std::string to_json(bool include_timing = true) const;
  std::string to_csv() const;
};

/// f must already have unit limit variance; beta <= 2.
ExperimentRecord run_clt_experiment(const LineFunction& f, const CLTConfig& cfg);

struct VerifyRow {
  int n = 0;
  McEstimate cbe;
  bool agrees = false;  ///< within joint 3 sigma of the sine estimate
};

struct VerifyReport {
  double beta = 0.0;
  LineFunction f;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  McEstimate sine;
  std::vector<VerifyRow> rows;
  bool all_agree = false;

  std::string to_json() const;
  std::string to_csv() const;
};

VerifyReport verify_cbe_convergence(const LineFunction& f, double beta, const std::vector<int>& n_list,
                                    std::size_t samples, const SDEConfig& sde, double grid_spacing,
                                    std::uint64_t seed);

}  // namespace jackcbe
