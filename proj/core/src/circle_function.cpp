#include "jackcbe/circle_function.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace jackcbe {

CircleFunction::CircleFunction(std::map<int, Complex> coeffs) {
  for (auto& [j, c] : coeffs)
    if (c != Complex(0.0, 0.0)) coeffs_.emplace(j, c);
  for (const auto& [j, c] : coeffs_)
    if (coeff(-j) != std::conj(c)) {
      real_ = false;
      break;
    }
}

CircleFunction CircleFunction::from_triples(const std::vector<std::tuple<int, double, double>>& triples) {
  std::map<int, Complex> m;
  for (const auto& [j, re, im] : triples) m[j] += Complex(re, im);
  return CircleFunction(std::move(m));
}

CircleFunction CircleFunction::cosine(int k, double c) {
  if (k == 0) return CircleFunction({{0, Complex(2.0 * c, 0.0)}});
  return CircleFunction({{k, Complex(c, 0.0)}, {-k, Complex(c, 0.0)}});
}

Complex CircleFunction::coeff(int j) const {
  const auto it = coeffs_.find(j);
  return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
}

int CircleFunction::max_frequency() const noexcept {
  int m = 0;
  for (const auto& [j, c] : coeffs_) m = std::max(m, std::abs(j));
  return m;
}

Complex CircleFunction::operator()(double theta) const {
  Complex s(0.0, 0.0);
  for (const auto& [j, c] : coeffs_) s += c * std::polar(1.0, j * theta);
  return s;
}

CircleFunction operator+(const CircleFunction& a, const CircleFunction& b) {
  auto m = a.coeffs_;
  for (const auto& [j, c] : b.coeffs_) m[j] += c;
  return CircleFunction(std::move(m));
}

CircleFunction operator*(double s, const CircleFunction& f) {
  auto m = f.coeffs_;
  for (auto& [j, c] : m) c *= s;
  return CircleFunction(std::move(m));
}

double sobolev_seminorm_circle(const CircleFunction& f, double p) {
  if (p < 0) throw std::invalid_argument("sobolev_seminorm_circle: p must be nonnegative");
  double s = 0.0;
  for (const auto& [k, c] : f.coeffs()) {
    if (k == 0) continue;
    s += std::pow(std::abs(k), 2.0 * p) * std::norm(c);
  }
  return s;
}

Complex sigma_circle(const CircleFunction& f) {
  Complex s(0.0, 0.0);
  for (const auto& [k, c] : f.coeffs())
    if (k > 0) s += static_cast<double>(k) * c * f.coeff(-k);
  return s;
}

Specialization circle_specialization(const CircleFunction& f, const AlphaParam& alpha, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("circle_specialization: sign must be +-1");
  const double a = alpha.to_double();
  std::map<int, Complex> values;
  for (const auto& [j, c] : f.coeffs())
    if (sign * j > 0) values.emplace(sign * j, a * (sign * j) * c);
  return Specialization(std::move(values), true);
}

}  // namespace jackcbe
