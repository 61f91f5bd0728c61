#include "jackcbe/cbe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace jackcbe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

Complex sample_theta_nu(double nu, Rng& rng) {
  if (!(nu > 1.0)) throw std::invalid_argument("sample_theta_nu: nu must exceed 1");
  const double u = 1.0 - std::pow(1.0 - uniform01(rng), 2.0 / (nu - 1.0));
  const double phi = kTwoPi * uniform01(rng);
  return std::polar(std::sqrt(std::max(u, 0.0)), phi);
}

VerblunskySeq sample_verblunsky(int n, double beta, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_verblunsky: n must be positive");
  if (!(beta > 0.0)) throw std::invalid_argument("sample_verblunsky: beta must be positive");
  VerblunskySeq v;
  v.alphas.reserve(n - 1);
  for (int k = 0; k + 1 < n; ++k) v.alphas.push_back(sample_theta_nu(beta * (k + 1) + 1.0, rng));
  v.mu = kTwoPi * uniform01(rng);
  return v;
}

Complex poly_eval(const Poly& p, Complex z) {
  Complex r(0.0, 0.0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * z + *it;
  return r;
}

std::pair<Complex, Complex> poly_eval_derivative(const Poly& p, Complex z) {
  Complex r(0.0, 0.0), d(0.0, 0.0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    d = d * z + r;
    r = r * z + *it;
  }
  return {r, d};
}

SzegoPair szego_step(const SzegoPair& s, Complex a) {
  const std::size_t k = s.phi.size() - 1;
  SzegoPair out;
  out.phi.assign(k + 2, Complex(0.0, 0.0));
  out.phi_star.assign(k + 2, Complex(0.0, 0.0));
  for (std::size_t j = 0; j <= k; ++j) {
    out.phi[j + 1] += s.phi[j];
    out.phi[j] -= std::conj(a) * s.phi_star[j];
    out.phi_star[j] += s.phi_star[j];
    out.phi_star[j + 1] -= a * s.phi[j];
  }
  return out;
}

SzegoPair szego_recursion(const VerblunskySeq& v) {
  SzegoPair s{{Complex(1.0, 0.0)}, {Complex(1.0, 0.0)}};
  for (const auto& a : v.alphas) s = szego_step(s, a);
  return s;
}

Poly characteristic_polynomial(const VerblunskySeq& v) {
  const auto s = szego_recursion(v);
  const Complex c = std::polar(1.0, -v.mu);
  Poly p(s.phi.size() + 1, Complex(0.0, 0.0));
  for (std::size_t j = 0; j < s.phi.size(); ++j) {
    p[j + 1] += s.phi[j];
    p[j] -= c * s.phi_star[j];
  }
  return p;
}

std::vector<Complex> companion_roots(const Poly& p) {
  if (p.size() < 2 || p.back() == Complex(0.0, 0.0))
    throw std::invalid_argument("companion_roots: need degree >= 1 with nonzero leading coefficient");
  const int n = static_cast<int>(p.size()) - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p[i] / p.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("companion_roots: eigenvalue iteration failed");
  return std::vector<Complex>(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
}

namespace {

// Aberth-Ehrlich iteration from a circle of starting points; false if it stalls.
bool aberth_roots(const Poly& p, std::vector<Complex>& z) {
  const int n = static_cast<int>(p.size()) - 1;
  const double radius = std::pow(std::abs(p.front()) / std::abs(p.back()), 1.0 / n);
  if (!(radius > 0.0) || !std::isfinite(radius)) return false;
  z.resize(n);
  for (int k = 0; k < n; ++k) z[k] = std::polar(radius, kTwoPi * k / n + 0.4);
  int quiet = 0;
  for (int it = 0; it < 400; ++it) {
    double largest = 0.0;
    for (int k = 0; k < n; ++k) {
      const auto [f, df] = poly_eval_derivative(p, z[k]);
      if (f == Complex(0.0, 0.0)) continue;
      const Complex ratio = f / df;
      Complex repel(0.0, 0.0);
      for (int j = 0; j < n; ++j)
        if (j != k) repel += 1.0 / (z[k] - z[j]);
      const Complex w = ratio / (1.0 - ratio * repel);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
      z[k] -= w;
      largest = std::max(largest, std::abs(w) / std::max(1.0, std::abs(z[k])));
    }
    if (largest < 1e-13 && ++quiet == 2) return true;
  }
  return false;
}

}  // namespace

std::vector<Complex> polynomial_roots(const Poly& p) {
  if (p.size() < 2 || p.back() == Complex(0.0, 0.0))
    throw std::invalid_argument("polynomial_roots: need degree >= 1 with nonzero leading coefficient");
  std::vector<Complex> roots;
  if (p.front() == Complex(0.0, 0.0) || !aberth_roots(p, roots)) roots = companion_roots(p);
  for (auto& r : roots)
    for (int it = 0; it < 3; ++it) {
      const auto [f, df] = poly_eval_derivative(p, r);
      if (std::abs(df) == 0.0) break;
      const Complex step = f / df;
      r -= step;
      if (std::abs(step) < 1e-15) break;
    }
  return roots;
}

std::vector<double> cbe_angles(const VerblunskySeq& v, double tolerance, double* deviation) {
  const auto roots = polynomial_roots(characteristic_polynomial(v));
  double dev = 0.0;
  std::vector<double> angles;
  angles.reserve(roots.size());
  for (const auto& r : roots) {
    dev = std::max(dev, std::abs(std::abs(r) - 1.0));
    double a = std::arg(r);
    if (a <= -std::numbers::pi) a += kTwoPi;
    angles.push_back(a);
  }
  if (deviation) *deviation = dev;
  if (!(dev <= tolerance))
    throw std::runtime_error("cbe_angles: root modulus deviation " + std::to_string(dev) + " exceeds tolerance");
  std::sort(angles.begin(), angles.end());
  return angles;
}

CBESample sample_cbe(int n, double beta, Rng& rng) {
  CBESample s;
  s.n = n;
  s.beta = beta;
  for (int attempt = 0;; ++attempt) {
    s.verblunsky = sample_verblunsky(n, beta, rng);
    try {
      s.angles = cbe_angles(s.verblunsky, 1e-6, &s.max_modulus_deviation);
      s.resamples = attempt;
      return s;
    } catch (const std::runtime_error&) {
      if (attempt >= 1) throw;
    }
  }
}

std::vector<double> prufer_psi(const VerblunskySeq& v, const std::vector<double>& theta_grid) {
  if (!std::is_sorted(theta_grid.begin(), theta_grid.end()))
    throw std::invalid_argument("prufer_psi: grid must be sorted");
  const auto s = szego_recursion(v);
  const int n = v.n();
  // B = z prod_k (z - a_k) / (1 - conj(a_k) z) over the zeros of Phi_{n-1}, all inside
  // the disc; arg of each factor is theta + 2 arg(1 - a_k e^{-i theta}), a continuous branch.
  const std::vector<Complex> zeros = n > 1 ? polynomial_roots(s.phi) : std::vector<Complex>{};
  for (const auto& a : zeros)
    if (!(std::abs(a) < 1.0)) throw std::runtime_error("prufer_psi: orthogonal polynomial has a zero off the disc");
  const Complex b1 = poly_eval(s.phi, 1.0) / poly_eval(s.phi_star, 1.0);

  std::vector<double> psi(theta_grid.size());
  for (std::size_t i = 0; i < theta_grid.size(); ++i) {
    const double t = theta_grid[i];
    double value = n * t;
    for (const auto& a : zeros) value += 2.0 * (std::arg(1.0 - a * std::polar(1.0, -t)) - std::arg(1.0 - a));
    const Complex z = std::polar(1.0, t);
    const Complex direct = z * poly_eval(s.phi, z) / poly_eval(s.phi_star, z) / b1;
    if (std::abs(std::polar(1.0, value) - direct) > 1e-7)
      throw std::runtime_error("prufer_psi: phase reconstruction disagrees with the Blaschke quotient");
    psi[i] = value;
    if (i > 0 && psi[i] < psi[i - 1]) psi[i] = psi[i - 1];
  }
  return psi;
}

double prufer_omega(const VerblunskySeq& v) {
  const auto s = szego_recursion(v);
  const double arg_b1 = std::arg(poly_eval(s.phi, 1.0) / poly_eval(s.phi_star, 1.0));
  double w = std::fmod(-v.mu - arg_b1, kTwoPi);
  if (w < 0) w += kTwoPi;
  return w;
}

}  // namespace jackcbe
