#pragma once

#include <string>
#include <vector>

#include "jackcbe/sympoly.hpp"

namespace jackcbe {

/// A real function on the line from a small family, with its Fourier
/// transform fhat(lambda) = (1/2pi) int f(x) e^{-i lambda x} dx.
class LineFunction {
 public:
  enum class Family { Zero, Gaussian, Triangle, Tabulated };

  LineFunction() = default;
  /// a exp(-x^2 / (2 s^2)).
  static LineFunction gaussian(double amplitude = 1.0, double width = 1.0);
  /// a max(0, 1 - |x|/w).
  static LineFunction triangle(double amplitude = 1.0, double half_width = 1.0);
  /// Piecewise linear through (x_i, y_i), zero outside [x_0, x_last]; the end values must vanish.
  static LineFunction tabulated(std::vector<double> x, std::vector<double> y);

  Family family() const noexcept { return family_; }
  std::string family_name() const;
  double amplitude() const noexcept { return amp_; }
  double width() const noexcept { return width_; }
  const std::vector<double>& knots_x() const noexcept { return xs_; }
  const std::vector<double>& knots_y() const noexcept { return ys_; }

  double operator()(double x) const;
  /// Derivative (right derivative at kinks).
  double derivative(double x) const;
  Complex fourier(double lambda) const;
  double integral() const;

  bool compact() const noexcept { return family_ != Family::Gaussian; }
  /// Smallest interval outside which f vanishes; infinite for the Gaussian.
  std::pair<double, double> support() const;

  /// x -> f(x / r).
  LineFunction dilated(double r) const;
  /// x -> c f(x).
  LineFunction scaled(double c) const;

 private:
  Family family_ = Family::Zero;
  double amp_ = 0.0;
  double width_ = 1.0;
  std::vector<double> xs_, ys_;
};

/// ||f||^2_{p,R} = int |lambda|^{2p} |fhat(lambda)|^2 d lambda.
double sobolev_seminorm_line(const LineFunction& f, double p);

/// sigma^2 = (4/beta) int_0^infty lambda |fhat(lambda)|^2 d lambda = (2/beta) ||f||^2_{1/2}.
double limit_variance(const LineFunction& f, double beta);

/// c f with limit variance one.
LineFunction normalize_for_unit_variance(const LineFunction& f, double beta);

}  // namespace jackcbe
