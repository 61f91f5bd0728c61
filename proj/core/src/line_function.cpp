#include "jackcbe/line_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace jackcbe {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double u) { return std::abs(u) < 1e-4 ? 1.0 - u * u / 6.0 : std::sin(u) / u; }

// int_0^infty u^{2p-4} sin^4 u du for 0 <= p < 3/2.
double sin4_moment(double p) {
  if (p == 0.0) return kPi / 3.0;
  if (p == 0.5) return std::log(2.0);
  if (p == 1.0) return kPi / 4.0;
  using boost::math::quadrature::gauss_kronrod;
  auto g = [p](double u) {
    const double s = u < 1e-3 ? 1.0 - u * u / 6.0 : std::sin(u) / u;
    return std::pow(u, 2.0 * p) * s * s * s * s;
  };
  double total = 0.0;
  const double chunk = kPi;
  double a = 0.0;
  for (int i = 0; i < 2000; ++i, a += chunk) total += gauss_kronrod<double, 61>::integrate(g, a, a + chunk, 10, 1e-13);
  // sin^4 averages to 3/8 on the tail
  total += 3.0 / 8.0 * std::pow(a, 2.0 * p - 3.0) / (3.0 - 2.0 * p);
  return total;
}

// Slope jumps at the knots of a continuous piecewise-linear function vanishing outside.
std::vector<double> kink_jumps(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> d(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double left = i == 0 ? 0.0 : (y[i] - y[i - 1]) / (x[i] - x[i - 1]);
    const double right = i + 1 == x.size() ? 0.0 : (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    d[i] = right - left;
  }
  return d;
}

}  // namespace

LineFunction LineFunction::gaussian(double amplitude, double width) {
  if (!(width > 0.0)) throw std::invalid_argument("LineFunction::gaussian: width must be positive");
  LineFunction f;
  f.family_ = amplitude == 0.0 ? Family::Zero : Family::Gaussian;
  f.amp_ = amplitude;
  f.width_ = width;
  return f;
}

LineFunction LineFunction::triangle(double amplitude, double half_width) {
  if (!(half_width > 0.0)) throw std::invalid_argument("LineFunction::triangle: half width must be positive");
  LineFunction f;
  f.family_ = amplitude == 0.0 ? Family::Zero : Family::Triangle;
  f.amp_ = amplitude;
  f.width_ = half_width;
  return f;
}

LineFunction LineFunction::tabulated(std::vector<double> x, std::vector<double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("LineFunction::tabulated: need matching knots");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i] > x[i - 1])) throw std::invalid_argument("LineFunction::tabulated: knots must increase strictly");
  if (y.front() != 0.0 || y.back() != 0.0)
    throw std::invalid_argument("LineFunction::tabulated: end values must be zero");
  LineFunction f;
  f.family_ = std::all_of(y.begin(), y.end(), [](double v) { return v == 0.0; }) ? Family::Zero : Family::Tabulated;
  f.xs_ = std::move(x);
  f.ys_ = std::move(y);
  f.amp_ = 1.0;
  return f;
}

std::string LineFunction::family_name() const {
  switch (family_) {
    case Family::Zero: return "zero";
    case Family::Gaussian: return "gaussian";
    case Family::Triangle: return "triangle";
    case Family::Tabulated: return "tabulated";
  }
  return "";
}

double LineFunction::operator()(double x) const {
  switch (family_) {
    case Family::Zero: return 0.0;
    case Family::Gaussian: return amp_ * std::exp(-x * x / (2.0 * width_ * width_));
    case Family::Triangle: return amp_ * std::max(0.0, 1.0 - std::abs(x) / width_);
    case Family::Tabulated: {
      if (x <= xs_.front() || x >= xs_.back()) return 0.0;
      const std::size_t j = std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin();
      return ys_[j - 1] + (ys_[j] - ys_[j - 1]) * (x - xs_[j - 1]) / (xs_[j] - xs_[j - 1]);
    }
  }
  return 0.0;
}

double LineFunction::derivative(double x) const {
  switch (family_) {
    case Family::Zero: return 0.0;
    case Family::Gaussian: return -x / (width_ * width_) * (*this)(x);
    case Family::Triangle:
      if (std::abs(x) >= width_) return 0.0;
      return x < 0 ? amp_ / width_ : -amp_ / width_;
    case Family::Tabulated: {
      if (x < xs_.front() || x >= xs_.back()) return 0.0;
      const std::size_t j = std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin();
      return (ys_[j] - ys_[j - 1]) / (xs_[j] - xs_[j - 1]);
    }
  }
  return 0.0;
}

Complex LineFunction::fourier(double lambda) const {
  switch (family_) {
    case Family::Zero: return 0.0;
    case Family::Gaussian:
      return amp_ * width_ / std::sqrt(2.0 * kPi) * std::exp(-lambda * lambda * width_ * width_ / 2.0);
    case Family::Triangle: {
      const double s = sinc(lambda * width_ / 2.0);
      return amp_ * width_ / (2.0 * kPi) * s * s;
    }
    case Family::Tabulated: {
      const double scale = std::max(std::abs(xs_.front()), std::abs(xs_.back()));
      if (std::abs(lambda) * scale > 1.0) {
        // f'' is a sum of point masses at the kinks.
        const auto d = kink_jumps(xs_, ys_);
        Complex s(0.0, 0.0);
        for (std::size_t i = 0; i < xs_.size(); ++i) s += d[i] * std::polar(1.0, -lambda * xs_[i]);
        return -s / (2.0 * kPi * lambda * lambda);
      }
      using boost::math::quadrature::gauss_kronrod;
      double re = 0.0, im = 0.0;
      for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
        re += gauss_kronrod<double, 15>::integrate([&](double x) { return (*this)(x)*std::cos(lambda * x); },
                                                   xs_[i], xs_[i + 1], 0, 0);
        im -= gauss_kronrod<double, 15>::integrate([&](double x) { return (*this)(x)*std::sin(lambda * x); },
                                                   xs_[i], xs_[i + 1], 0, 0);
      }
      return Complex(re, im) / (2.0 * kPi);
    }
  }
  return 0.0;
}

double LineFunction::integral() const {
  switch (family_) {
    case Family::Zero: return 0.0;
    case Family::Gaussian: return amp_ * width_ * std::sqrt(2.0 * kPi);
    case Family::Triangle: return amp_ * width_;
    case Family::Tabulated: {
      double s = 0.0;
      for (std::size_t i = 0; i + 1 < xs_.size(); ++i) s += 0.5 * (ys_[i] + ys_[i + 1]) * (xs_[i + 1] - xs_[i]);
      return s;
    }
  }
  return 0.0;
}

std::pair<double, double> LineFunction::support() const {
  switch (family_) {
    case Family::Zero: return {0.0, 0.0};
    case Family::Gaussian: return {-INFINITY, INFINITY};
    case Family::Triangle: return {-width_, width_};
    case Family::Tabulated: return {xs_.front(), xs_.back()};
  }
  return {0.0, 0.0};
}

LineFunction LineFunction::dilated(double r) const {
  if (!(r > 0.0)) throw std::invalid_argument("LineFunction::dilated: factor must be positive");
  LineFunction g = *this;
  g.width_ *= r;
  for (auto& x : g.xs_) x *= r;
  return g;
}

LineFunction LineFunction::scaled(double c) const {
  LineFunction g = *this;
  if (c == 0.0) return LineFunction();
  g.amp_ *= c;
  for (auto& y : g.ys_) y *= c;
  return g;
}

double sobolev_seminorm_line(const LineFunction& f, double p) {
  if (p < 0.0) throw std::invalid_argument("sobolev_seminorm_line: p must be nonnegative");
  const double a = f.amplitude(), w = f.width();
  switch (f.family()) {
    case LineFunction::Family::Zero: return 0.0;
    case LineFunction::Family::Gaussian:
      return a * a * w * w / (2.0 * kPi) * std::tgamma(p + 0.5) / std::pow(w, 2.0 * p + 1.0);
    case LineFunction::Family::Triangle:
      if (p >= 1.5) throw std::domain_error("sobolev_seminorm_line: diverges for a triangle when p >= 3/2");
      return std::pow(a * w / (2.0 * kPi), 2) * 2.0 * std::pow(2.0 / w, 2.0 * p + 1.0) * sin4_moment(p);
    case LineFunction::Family::Tabulated: break;
  }
  if (p >= 1.5) throw std::domain_error("sobolev_seminorm_line: diverges for a kinked function when p >= 3/2");

  const auto& xs = f.knots_x();
  const auto& ys = f.knots_y();
  if (p == 0.0 || p == 1.0) {
    // Plancherel in x space: exact for piecewise-linear data.
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      const double h = xs[i + 1] - xs[i];
      if (p == 0.0)
        s += h * (ys[i] * ys[i] + ys[i] * ys[i + 1] + ys[i + 1] * ys[i + 1]) / 3.0;
      else
        s += (ys[i + 1] - ys[i]) * (ys[i + 1] - ys[i]) / h;
    }
    return s / (2.0 * kPi);
  }
  using boost::math::quadrature::gauss_kronrod;
  const double scale = std::max(std::abs(xs.front()), std::abs(xs.back()));
  const double chunk = kPi / scale;
  auto g = [&](double l) { return std::pow(l, 2.0 * p) * std::norm(f.fourier(l)); };
  double total = 0.0, a0 = 0.0;
  const int chunks = 4000;
  for (int i = 0; i < chunks; ++i, a0 += chunk) {
    double err = 0.0;
    total += gauss_kronrod<double, 31>::integrate(g, a0, a0 + chunk, 8, 1e-12, &err);
  }
  const auto d = kink_jumps(xs, ys);
  double d2 = 0.0;
  for (double v : d) d2 += v * v;
  total += d2 / (4.0 * kPi * kPi) * std::pow(a0, 2.0 * p - 3.0) / (3.0 - 2.0 * p);
  return 2.0 * total;
}

double limit_variance(const LineFunction& f, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("limit_variance: beta must be positive");
  return 2.0 / beta * sobolev_seminorm_line(f, 0.5);
}

LineFunction normalize_for_unit_variance(const LineFunction& f, double beta) {
  const double v = limit_variance(f, beta);
  if (!(v > 0.0)) throw std::domain_error("normalize_for_unit_variance: zero limit variance");
  return f.scaled(1.0 / std::sqrt(v));
}

}  // namespace jackcbe
