#pragma once

#include <map>
#include <memory>

#include "jackcbe/circle_function.hpp"
#include "jackcbe/symcore.hpp"

namespace jackcbe {

struct GesselResult {
  Complex value;
  /// Bound on the modulus of the dropped |lambda| > D part of the series.
  double tail_estimate = 0.0;
};

/// E^n_{2/alpha} prod_j e^{f(theta_j)} through the Jack-measure series
///   e^{n fhat_0} sum_{l(lambda) <= n, |lambda| <= D}
///       J_lambda(rho_+) J_lambda(rho_-) / <J_lambda, J_lambda>_alpha * A^alpha_lambda(n).
///
/// The tail is bounded by Cauchy-Schwarz against the two single
/// specialization Cauchy series, with Markov on |lambda|:
///   tail <= |e^{n fhat_0}| / (D+1) * sqrt(T_+ T_-),
///   T_+- = sum_{|lambda| > D} |lambda| |J_lambda(rho_+-)|^2 / <J,J>,
/// where T_+- is the closed-form total alpha sum k^2|fhat_{+-k}|^2 exp(alpha sum k|fhat_{+-k}|^2)
/// minus the computed partial sum. Requires alpha >= 1.
GesselResult gessel_expectation(const CircleFunction& f, const AlphaParam& alpha, int n, int max_degree);

/// exp((2/beta) sum_{k>=1} k fhat_k fhat_{-k}); beta <= 2.
Complex limit_laplace(const CircleFunction& f, double beta);

/// Same exponent for real f, equal to exp(||f||^2_{1/2,T} / beta).
double subgauss_bound(const CircleFunction& f, double beta);

/// 8/(beta^2 n) exp(||f||^2_{1/2}/beta - (2/beta) Re sigma) ||f||^2_{1,T}:
/// the deviation bound for the ensemble with 2n particles.
double cbe_error_bound(const CircleFunction& f, double beta, int n);

/// Jack measure M(lambda) = Z^{-1} J_lambda(rho1) J_lambda(rho2) / <J_lambda, J_lambda>_alpha
/// tabulated for |lambda| <= D. Z comes from the closed-form Cauchy series
/// exp(alpha^{-1} sum_j p_j(rho1) p_j(rho2) / j), so the stored pmf sums to
/// 1 - tail_mass().
class JackMeasure {
 public:
  JackMeasure(AlphaParam alpha, Specialization rho1, Specialization rho2, int max_degree);
  /// rho1 = rho_+, rho2 = rho_- of a circle function.
  static JackMeasure from_function(const CircleFunction& f, const AlphaParam& alpha, int max_degree);

  Complex pmf(const Partition& lambda) const;
  Complex normalization() const noexcept { return z_; }
  Complex total_mass() const noexcept { return total_; }
  /// 1 - Re(total truncated mass).
  double tail_mass() const noexcept { return 1.0 - total_.real(); }
  int max_degree() const noexcept { return max_degree_; }
  const std::map<Partition, Complex>& table() const noexcept { return pmf_; }

 private:
  AlphaParam alpha_;
  int max_degree_;
  Complex z_;
  Complex total_;
  std::map<Partition, Complex> pmf_;
};

/// Plain weight J_lambda(rho1) J_lambda(rho2) / <J,J> for every |lambda| <= D, unnormalised.
std::map<Partition, Complex> jack_weights(const JackTable& table, const Specialization& rho1,
                                          const Specialization& rho2, int max_degree);

struct ExpectedSize {
  double value = 0.0;         ///< sum_{|lambda| <= D} |lambda| M_f(lambda)
  double exact_target = 0.0;  ///< (alpha/2) ||f||^2_{1,T}
};

ExpectedSize expected_partition_size(const CircleFunction& f, const AlphaParam& alpha, int max_degree);

/// |lambda|! alpha^{|lambda|} / (H(lambda, alpha) H'(lambda, alpha)).
Rational plancherel_pmf(const Partition& lambda, const AlphaParam& alpha);

}  // namespace jackcbe
