#include "jackcbe/sinesde.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace jackcbe {

void SDEConfig::validate() const {
  if (!(beta > 0.0)) throw std::invalid_argument("SDEConfig: beta must be positive");
  if (!(t0 > 0.0 && t0 <= 1e-2)) throw std::invalid_argument("SDEConfig: t0 must lie in (0, 1e-2]");
  if (steps < 1000) throw std::invalid_argument("SDEConfig: at least 1000 steps required");
  if (max_dt < 0.0) throw std::invalid_argument("SDEConfig: max_dt must be nonnegative");
  if (x_grid.empty()) throw std::invalid_argument("SDEConfig: empty x grid");
  for (double x : x_grid)
    if (!std::isfinite(x)) throw std::invalid_argument("SDEConfig: non-finite grid point");
  if (!std::is_sorted(x_grid.begin(), x_grid.end())) throw std::invalid_argument("SDEConfig: grid must be sorted");
  if (!(repair_tolerance >= 0.0)) throw std::invalid_argument("SDEConfig: repair tolerance must be nonnegative");
}

std::vector<double> SDEConfig::time_grid() const {
  std::vector<double> t{t0};
  const double lt0 = std::log(t0);
  for (int k = 1; k <= steps; ++k) {
    const double next = k == steps ? 1.0 : std::exp(lt0 * (1.0 - static_cast<double>(k) / steps));
    const double prev = t.back();
    const int pieces = max_dt > 0.0 ? std::max(1, static_cast<int>(std::ceil((next - prev) / max_dt))) : 1;
    for (int p = 1; p < pieces; ++p) t.push_back(prev + (next - prev) * p / pieces);
    t.push_back(next);
  }
  return t;
}

std::vector<double> anchored_grid(Window w, double spacing) {
  if (!(spacing > 0.0) || !(w.a < w.b)) throw std::invalid_argument("anchored_grid: bad window or spacing");
  std::vector<double> g{w.a};
  const auto k0 = static_cast<long long>(std::floor(w.a / spacing)) + 1;
  for (long long k = k0;; ++k) {
    const double x = static_cast<double>(k) * spacing;
    if (x >= w.b) break;
    if (x > w.a) g.push_back(x);
  }
  g.push_back(w.b);
  return g;
}

std::vector<double> isotonic_fit(const std::vector<double>& values) {
  std::vector<double> level;
  std::vector<std::size_t> width;
  for (double v : values) {
    level.push_back(v);
    width.push_back(1);
    while (level.size() > 1 && level[level.size() - 2] > level.back()) {
      const std::size_t w = width[width.size() - 2] + width.back();
      const double m = (level[level.size() - 2] * width[width.size() - 2] + level.back() * width.back()) / w;
      level.pop_back();
      width.pop_back();
      level.back() = m;
      width.back() = w;
    }
  }
  std::vector<double> out;
  out.reserve(values.size());
  for (std::size_t b = 0; b < level.size(); ++b) out.insert(out.end(), width[b], level[b]);
  return out;
}

MonotonePath simulate_sine_path(const SDEConfig& cfg, Rng& rng) {
  cfg.validate();
  const auto t = cfg.time_grid();
  const std::size_t m = cfg.x_grid.size();
  std::vector<double> X(m);
  for (std::size_t i = 0; i < m; ++i) X[i] = cfg.x_grid[i] * cfg.t0;

  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    const double dt = t[k + 1] - t[k];
    const double sq = std::sqrt(dt);
    const double db1 = sq * normal(rng);
    const double db2 = sq * normal(rng);
    const double scale = 2.0 / std::sqrt(cfg.beta * t[k]);
    const double n1 = scale * db1, n2 = scale * db2;
    for (std::size_t i = 0; i < m; ++i) {
      const double c = std::cos(X[i]), s = std::sin(X[i]);
      X[i] += cfg.x_grid[i] * dt + (c - 1.0) * n2 + s * n1;
    }
  }

  MonotonePath path;
  path.x_grid = cfg.x_grid;
  std::size_t violations = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (X[i] < X[i - 1]) ++violations;
  path.violation_fraction = m > 1 ? static_cast<double>(violations) / (m - 1) : 0.0;
  path.u = violations ? isotonic_fit(X) : X;
  for (std::size_t i = 0; i < m; ++i) path.repair_magnitude = std::max(path.repair_magnitude, std::abs(path.u[i] - X[i]));
  const double span = cfg.x_grid.back() - cfg.x_grid.front();
  if (path.repair_magnitude > cfg.repair_tolerance * span)
    throw std::runtime_error("simulate_sine_path: monotone repair " + std::to_string(path.repair_magnitude) +
                             " exceeds tolerance; refine the time grid");
  return path;
}

SineSample sample_sine_configuration(const SDEConfig& cfg, Rng& rng) {
  if (cfg.x_grid.size() < 2) throw std::invalid_argument("sample_sine_configuration: need at least two grid points");
  SineSample s;
  s.omega = 2.0 * std::numbers::pi * uniform01(rng);
  s.path = simulate_sine_path(cfg, rng);
  s.config = theta_map(MonotoneFnView(s.path.x_grid, s.path.u), s.omega);
  return s;
}

}  // namespace jackcbe
