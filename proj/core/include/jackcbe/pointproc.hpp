#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "jackcbe/sympoly.hpp"

namespace jackcbe {

struct Window {
  double a = 0.0;
  double b = 0.0;
  double width() const noexcept { return b - a; }
  bool contains(double x) const noexcept { return a <= x && x <= b; }
};

/// Finite sorted multiset of points inside a closed window.
class Configuration {
 public:
  Configuration() = default;
  Configuration(std::vector<double> points, Window window);

  const std::vector<double>& points() const noexcept { return points_; }
  const Window& window() const noexcept { return window_; }
  std::size_t size() const noexcept { return points_.size(); }
  /// Points in [a, b].
  std::size_t count(double a, double b) const;

  /// Indices of points within 1e-9 of a window edge.
  std::vector<std::size_t> edge_flags;
  std::vector<std::string> warnings;

 private:
  std::vector<double> points_;
  Window window_;
};

/// Nondecreasing piecewise-linear function through (x_i, u_i). Repeated x_i
/// are allowed and encode jumps.
class MonotoneFnView {
 public:
  MonotoneFnView(std::vector<double> x, std::vector<double> u);
  /// u(x) = slope * x + offset sampled on `points` knots over the window.
  static MonotoneFnView linear(Window w, double slope, double offset = 0.0, int points = 2);

  const std::vector<double>& x() const noexcept { return x_; }
  const std::vector<double>& u() const noexcept { return u_; }
  Window window() const noexcept { return {x_.front(), x_.back()}; }

  /// Right-continuous evaluation; clamps outside the window.
  double operator()(double x) const;
  /// Leftmost x with u(x) >= y for y in [u_0, u_last].
  double inverse(double y) const;

  MonotoneFnView shifted(double c) const;

 private:
  std::vector<double> x_, u_;
};

/// u^{-1}(omega + 2 pi Z) inside the window of u. A lattice value crossed by a
/// jump puts a point at the jump; one crossed by a flat piece uses the leftmost
/// preimage and records a warning.
Configuration theta_map(const MonotoneFnView& u, double omega);

using PointFunction = std::function<Complex(double)>;

Complex additive_functional(const Configuration& X, const PointFunction& f);
/// S_f(X) - f_integral / (2 pi).
Complex regularized_additive(const Configuration& X, const PointFunction& f, double f_integral);
Complex multiplicative_functional(const Configuration& X, const PointFunction& g);

/// Interpolant of u through k+1 equally spaced knots covering the window.
MonotoneFnView linear_interpolation(const MonotoneFnView& u, int k, Window window);

/// Integral of |u - v| over the window, exact for piecewise-linear inputs.
double l1_distance(const MonotoneFnView& u, const MonotoneFnView& v, Window window);

}  // namespace jackcbe
