#include "jackcbe/pointproc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jackcbe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEdgeTol = 1e-9;

// Value at x of the linear piece of f that contains `inside`.
double piece_value(const MonotoneFnView& f, double x, double inside) {
  const auto& xs = f.x();
  const auto& us = f.u();
  if (inside <= xs.front()) return us.front();
  if (inside >= xs.back()) return us.back();
  const std::size_t j = std::upper_bound(xs.begin(), xs.end(), inside) - xs.begin();
  const double x0 = xs[j - 1], x1 = xs[j];
  return us[j - 1] + (us[j] - us[j - 1]) * (x - x0) / (x1 - x0);
}

double abs_linear_integral(double fa, double fb, double h) {
  if ((fa >= 0) == (fb >= 0)) return 0.5 * h * std::abs(fa + fb);
  const double t = fa / (fa - fb);
  return 0.5 * h * (t * std::abs(fa) + (1 - t) * std::abs(fb));
}

}  // namespace

Configuration::Configuration(std::vector<double> points, Window window)
    : points_(std::move(points)), window_(window) {
  if (!(window_.a <= window_.b)) throw std::invalid_argument("Configuration: window must satisfy a <= b");
  std::sort(points_.begin(), points_.end());
  for (double p : points_)
    if (!window_.contains(p)) throw std::invalid_argument("Configuration: point outside window");
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] - window_.a < kEdgeTol || window_.b - points_[i] < kEdgeTol) edge_flags.push_back(i);
}

std::size_t Configuration::count(double a, double b) const {
  return std::upper_bound(points_.begin(), points_.end(), b) - std::lower_bound(points_.begin(), points_.end(), a);
}

MonotoneFnView::MonotoneFnView(std::vector<double> x, std::vector<double> u) : x_(std::move(x)), u_(std::move(u)) {
  if (x_.size() != u_.size() || x_.size() < 2)
    throw std::invalid_argument("MonotoneFnView: need at least two knots with matching values");
  for (std::size_t i = 0; i < x_.size(); ++i)
    if (!std::isfinite(x_[i]) || !std::isfinite(u_[i])) throw std::invalid_argument("MonotoneFnView: non-finite knot");
  for (std::size_t i = 1; i < x_.size(); ++i) {
    if (x_[i] < x_[i - 1]) throw std::invalid_argument("MonotoneFnView: grid must be sorted");
    if (u_[i] < u_[i - 1]) throw std::invalid_argument("MonotoneFnView: values must be nondecreasing");
  }
  if (x_.front() == x_.back()) throw std::invalid_argument("MonotoneFnView: degenerate window");
}

MonotoneFnView MonotoneFnView::linear(Window w, double slope, double offset, int points) {
  if (points < 2) throw std::invalid_argument("MonotoneFnView::linear: need two knots");
  if (slope < 0) throw std::invalid_argument("MonotoneFnView::linear: slope must be nonnegative");
  std::vector<double> x(points), u(points);
  for (int i = 0; i < points; ++i) {
    x[i] = i + 1 == points ? w.b : w.a + w.width() * i / (points - 1);
    u[i] = slope * x[i] + offset;
  }
  return MonotoneFnView(std::move(x), std::move(u));
}

double MonotoneFnView::operator()(double x) const {
  if (x < x_.front()) return u_.front();
  const std::size_t j = std::upper_bound(x_.begin(), x_.end(), x) - x_.begin() - 1;
  if (j + 1 == x_.size() || x_[j] == x) return u_[j];
  return u_[j] + (u_[j + 1] - u_[j]) * (x - x_[j]) / (x_[j + 1] - x_[j]);
}

double MonotoneFnView::inverse(double y) const {
  if (y < u_.front() || y > u_.back()) throw std::out_of_range("MonotoneFnView::inverse: value outside range");
  const std::size_t j = std::lower_bound(u_.begin(), u_.end(), y) - u_.begin();
  if (j == 0 || x_[j - 1] == x_[j]) return x_[j];
  const double t = (y - u_[j - 1]) / (u_[j] - u_[j - 1]);
  return std::min(x_[j], x_[j - 1] + t * (x_[j] - x_[j - 1]));
}

MonotoneFnView MonotoneFnView::shifted(double c) const {
  auto u = u_;
  for (auto& v : u) v += c;
  return MonotoneFnView(x_, std::move(u));
}

Configuration theta_map(const MonotoneFnView& u, double omega) {
  const auto& us = u.u();
  const double lo = us.front(), hi = us.back();
  const auto k_min = static_cast<long long>(std::ceil((lo - omega) / kTwoPi));
  const auto k_max = static_cast<long long>(std::floor((hi - omega) / kTwoPi));
  std::vector<double> pts;
  std::vector<std::string> warnings;
  for (long long k = k_min - 1; k <= k_max + 1; ++k) {
    const double y = omega + kTwoPi * static_cast<double>(k);
    if (y < lo || y > hi) continue;
    const std::size_t j = std::lower_bound(us.begin(), us.end(), y) - us.begin();
    if (j + 1 < us.size() && us[j] == y && us[j + 1] == y && u.x()[j + 1] > u.x()[j])
      warnings.push_back("lattice value " + std::to_string(y) + " lies on a flat piece; leftmost preimage used");
    pts.push_back(u.inverse(y));
  }
  Configuration c(std::move(pts), u.window());
  c.warnings = std::move(warnings);
  return c;
}

Complex additive_functional(const Configuration& X, const PointFunction& f) {
  Complex s(0.0, 0.0);
  for (double x : X.points()) s += f(x);
  return s;
}

Complex regularized_additive(const Configuration& X, const PointFunction& f, double f_integral) {
  return additive_functional(X, f) - f_integral / kTwoPi;
}

Complex multiplicative_functional(const Configuration& X, const PointFunction& g) {
  Complex p(1.0, 0.0);
  for (double x : X.points()) p *= 1.0 + g(x);
  return p;
}

MonotoneFnView linear_interpolation(const MonotoneFnView& u, int k, Window window) {
  if (k < 1) throw std::invalid_argument("linear_interpolation: k must be positive");
  if (!(window.a < window.b)) throw std::invalid_argument("linear_interpolation: empty window");
  std::vector<double> x(k + 1), v(k + 1);
  for (int i = 0; i <= k; ++i) {
    x[i] = i == k ? window.b : window.a + window.width() * i / k;
    v[i] = u(x[i]);
  }
  return MonotoneFnView(std::move(x), std::move(v));
}

double l1_distance(const MonotoneFnView& u, const MonotoneFnView& v, Window window) {
  std::vector<double> cuts{window.a, window.b};
  for (double x : u.x())
    if (window.a < x && x < window.b) cuts.push_back(x);
  for (double x : v.x())
    if (window.a < x && x < window.b) cuts.push_back(x);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double p = cuts[i], q = cuts[i + 1], mid = 0.5 * (p + q);
    const double fa = piece_value(u, p, mid) - piece_value(v, p, mid);
    const double fb = piece_value(u, q, mid) - piece_value(v, q, mid);
    total += abs_linear_integral(fa, fb, q - p);
  }
  return total;
}

}  // namespace jackcbe
