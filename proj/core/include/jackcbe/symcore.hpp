#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "jackcbe/partition.hpp"
#include "jackcbe/sympoly.hpp"

namespace jackcbe {

/// Irreducible character chi^lambda evaluated on cycle type mu, by the
/// Murnaghan-Nakayama rule. Memoized process-wide.
long long character(const Partition& lambda, const Partition& mu);

/// s_lambda = sum_mu chi^lambda_mu / z_mu p_mu.
SymPoly schur_in_powersums(const Partition& lambda);

/// Jack polynomials of all degrees <= max_degree at a fixed rational alpha,
/// normalised to have unit coefficient on s_lambda.
///
/// Each degree block is built by exact Gram-Schmidt over the Schur basis,
/// taken in a linear extension of dominance (smallest first). The result is
/// orthogonal for <.,.>_alpha and unitriangular with respect to dominance;
/// both properties pin the basis down, so the choice of linear extension does
/// not affect the output. The table is immutable once constructed.
class JackTable {
 public:
  struct Entry {
    Partition lambda;
    SymPoly jack;                  ///< power-sum expansion
    Rational norm;                 ///< <J, J>_alpha
    std::vector<double> coeffs;    ///< jack coefficients, aligned with Block::basis
    double norm_d = 0.0;
  };
  struct Block {
    int degree = 0;
    std::vector<Partition> basis;  ///< power-sum index set, reverse-lex order
    std::vector<Entry> entries;    ///< one per partition, in Gram-Schmidt order
  };

  JackTable(AlphaParam alpha, int max_degree, TieBreak tie = TieBreak::ReverseLex);

  const AlphaParam& alpha() const noexcept { return alpha_; }
  int max_degree() const noexcept { return static_cast<int>(blocks_.size()) - 1; }
  const Block& block(int degree) const;
  const Entry& entry(const Partition& lambda) const;

  const SymPoly& jack(const Partition& lambda) const { return entry(lambda).jack; }
  const Rational& norm(const Partition& lambda) const { return entry(lambda).norm; }

  /// J_lambda(rho) for every lambda of the given degree, in block entry order.
  std::vector<Complex> evaluate(int degree, const Specialization& rho) const;

 private:
  AlphaParam alpha_;
  std::vector<Block> blocks_;
};

/// Shared table for (alpha, degree >= max_degree); built on first request.
std::shared_ptr<const JackTable> shared_jack_table(const AlphaParam& alpha, int max_degree);

/// The Jack polynomial J^{(alpha)}_lambda in power sums.
SymPoly jack_in_powersums(const Partition& lambda, const AlphaParam& alpha);

/// <J_lambda, J_lambda>_alpha.
Rational jack_norm(const Partition& lambda, const AlphaParam& alpha);

/// Coefficients of P on the Schur basis of its degree, via <P, s_mu>_1.
std::vector<std::pair<Partition, Rational>> schur_coefficients(const SymPoly& p, int degree);

/// (H, H') with H = prod (arm + leg*theta + 1), H' = prod (arm + leg*theta + theta).
std::pair<Rational, Rational> hook_products(const Partition& lambda, const Rational& theta);

/// A^alpha_lambda(n) = prod_{(i,j) in lambda} (1 - (alpha - 1)/(n + j alpha - i)).
/// Requires l(lambda) <= n.
Rational a_coefficient(const Partition& lambda, const AlphaParam& alpha, int n);

}  // namespace jackcbe
