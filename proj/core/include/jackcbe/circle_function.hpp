#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "jackcbe/sympoly.hpp"

namespace jackcbe {

/// A function on the unit circle given by finitely many Fourier coefficients,
/// f(theta) = sum_j fhat_j e^{i j theta}.
class CircleFunction {
 public:
  CircleFunction() = default;
  explicit CircleFunction(std::map<int, Complex> coeffs);

  /// From (j, Re fhat_j, Im fhat_j) triples; repeated j accumulate.
  static CircleFunction from_triples(const std::vector<std::tuple<int, double, double>>& triples);
  /// 2c cos(k theta), i.e. fhat_{+-k} = c.
  static CircleFunction cosine(int k, double c);

  Complex coeff(int j) const;
  const std::map<int, Complex>& coeffs() const noexcept { return coeffs_; }
  /// fhat_{-j} == conj(fhat_j) for every j, compared exactly.
  bool is_real() const noexcept { return real_; }
  int max_frequency() const noexcept;

  Complex operator()(double theta) const;

  friend CircleFunction operator+(const CircleFunction& a, const CircleFunction& b);
  friend CircleFunction operator*(double s, const CircleFunction& f);

 private:
  std::map<int, Complex> coeffs_;
  bool real_ = true;
};

/// ||f||^2_{p,T} = sum_k |k|^{2p} |fhat_k|^2 (the squared seminorm).
double sobolev_seminorm_circle(const CircleFunction& f, double p);

/// sum_{k>=1} k fhat_k fhat_{-k}.
Complex sigma_circle(const CircleFunction& f);

/// rho_{+-}: p_j = alpha j fhat_{+-j}, and zero beyond the support of f.
Specialization circle_specialization(const CircleFunction& f, const AlphaParam& alpha, int sign);

}  // namespace jackcbe
